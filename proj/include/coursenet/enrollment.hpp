#pragma once

// Enrollment data model: record/cohort types, CSV parsing, pseudonymization
// and the cleaning steps applied before any network is built.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "coursenet/csv.hpp"
#include "coursenet/errors.hpp"

namespace coursenet {

enum class Term { spring = 0, summer = 1, fall = 2 };
enum class Status { completed_pass, completed_fail, deregistered };
enum class StudyType { undergraduate, graduate, other };

inline const char* to_string(Term t) {
    switch (t) {
        case Term::spring: return "spring";
        case Term::summer: return "summer";
        case Term::fall: return "fall";
    }
    return "?";
}

inline const char* to_string(Status s) {
    switch (s) {
        case Status::completed_pass: return "completed_pass";
        case Status::completed_fail: return "completed_fail";
        case Status::deregistered: return "deregistered";
    }
    return "?";
}

inline const char* to_string(StudyType s) {
    switch (s) {
        case StudyType::undergraduate: return "undergraduate";
        case StudyType::graduate: return "graduate";
        case StudyType::other: return "other";
    }
    return "?";
}

inline std::optional<Term> parse_term(const std::string& token) {
    if (token == "spring") return Term::spring;
    if (token == "summer") return Term::summer;
    if (token == "fall") return Term::fall;
    return std::nullopt;
}

inline std::optional<Status> parse_status(const std::string& token) {
    if (token == "completed_pass") return Status::completed_pass;
    if (token == "completed_fail") return Status::completed_fail;
    if (token == "deregistered") return Status::deregistered;
    return std::nullopt;
}

inline std::optional<StudyType> parse_study_type(const std::string& token) {
    if (token == "undergraduate") return StudyType::undergraduate;
    if (token == "graduate") return StudyType::graduate;
    if (token == "other") return StudyType::other;
    return std::nullopt;
}

constexpr int kMinYear = 1990;
constexpr int kMaxYear = 2100;

// One student x course x semester event.
struct EnrollmentRecord {
    std::string student_id;
    std::string course_id;
    std::string course_name;
    int year = 0;
    Term term = Term::spring;
    Status status = Status::completed_pass;
    std::string major;
    std::string department;
    StudyType study_type = StudyType::undergraduate;
};

// Chronological ordering of semesters: year first, then spring < summer < fall.
inline std::pair<int, int> semester_key(int year, Term term) {
    return {year, static_cast<int>(term)};
}

struct Cohort {
    std::vector<EnrollmentRecord> records;
    std::optional<std::string> major_filter;
    std::optional<std::pair<int, int>> enrollment_window;

    std::set<std::string> distinct_students() const {
        std::set<std::string> out;
        for (const auto& r : records) out.insert(r.student_id);
        return out;
    }

    std::set<std::string> distinct_courses() const {
        std::set<std::string> out;
        for (const auto& r : records) out.insert(r.course_id);
        return out;
    }
};

inline constexpr std::array<const char*, 9> kEnrollmentCsvHeader = {
    "student_id", "course_id", "course_name", "year", "term",
    "status",     "major",     "department",  "study_type"};

namespace detail {

inline std::optional<int> parse_int(const std::string& token) {
    if (token.empty()) return std::nullopt;
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (pos != token.size()) return std::nullopt;
    return value;
}

}  // namespace detail

// Parses the enrollment CSV schema. The header must match exactly; any
// malformed row raises an InputError naming the record and offending field.
inline Cohort parse_enrollments(std::istream& in) {
    int row = 1;
    auto header = csv::read_record(in, row);
    if (!header) throw InputError("empty input: missing header row");
    if (header->size() != kEnrollmentCsvHeader.size()) {
        throw InputError("header row has " + std::to_string(header->size()) +
                         " columns, expected " +
                         std::to_string(kEnrollmentCsvHeader.size()));
    }
    for (std::size_t i = 0; i < kEnrollmentCsvHeader.size(); ++i) {
        if ((*header)[i] != kEnrollmentCsvHeader[i]) {
            throw InputError("header column " + std::to_string(i + 1) +
                             " is '" + (*header)[i] + "', expected '" +
                             kEnrollmentCsvHeader[i] + "'");
        }
    }

    Cohort cohort;
    std::set<std::tuple<std::string, std::string, int, int>> seen;
    while (true) {
        ++row;
        auto fields = csv::read_record(in, row);
        if (!fields) break;
        if (fields->size() != kEnrollmentCsvHeader.size()) {
            throw InputError("row " + std::to_string(row) + ": expected " +
                             std::to_string(kEnrollmentCsvHeader.size()) +
                             " columns, got " + std::to_string(fields->size()));
        }
        const auto& f = *fields;
        auto fail = [&](const std::string& field, const std::string& why) -> void {
            throw InputError("row " + std::to_string(row) + ": field '" + field +
                             "': " + why);
        };

        EnrollmentRecord r;
        r.student_id = f[0];
        if (r.student_id.empty()) fail("student_id", "must not be empty");
        r.course_id = f[1];
        if (r.course_id.empty()) fail("course_id", "must not be empty");
        r.course_name = f[2];

        const auto year = detail::parse_int(f[3]);
        if (!year) fail("year", "not an integer: '" + f[3] + "'");
        if (*year < kMinYear || *year > kMaxYear) {
            fail("year", "out of range [" + std::to_string(kMinYear) + ", " +
                             std::to_string(kMaxYear) + "]: " + f[3]);
        }
        r.year = *year;

        const auto term = parse_term(f[4]);
        if (!term) fail("term", "unknown token '" + f[4] + "'");
        r.term = *term;

        const auto status = parse_status(f[5]);
        if (!status) fail("status", "unknown token '" + f[5] + "'");
        r.status = *status;

        r.major = f[6];
        r.department = f[7];

        const auto study = parse_study_type(f[8]);
        if (!study) fail("study_type", "unknown token '" + f[8] + "'");
        r.study_type = *study;

        const auto key = std::make_tuple(r.student_id, r.course_id, r.year,
                                         static_cast<int>(r.term));
        if (!seen.insert(key).second) {
            throw InputError("row " + std::to_string(row) +
                             ": duplicate record key (student=" + r.student_id +
                             ", course=" + r.course_id +
                             ", year=" + std::to_string(r.year) +
                             ", term=" + to_string(r.term) + ")");
        }
        cohort.records.push_back(std::move(r));
    }
    return cohort;
}

inline void write_enrollments_csv(std::ostream& out, const Cohort& cohort) {
    std::vector<std::string> header(kEnrollmentCsvHeader.begin(),
                                    kEnrollmentCsvHeader.end());
    csv::write_record(out, header);
    for (const auto& r : cohort.records) {
        csv::write_record(out, {r.student_id, r.course_id, r.course_name,
                                std::to_string(r.year), to_string(r.term),
                                to_string(r.status), r.major, r.department,
                                to_string(r.study_type)});
    }
}

inline Cohort filter_major(const Cohort& cohort, const std::string& major) {
    Cohort out;
    out.major_filter = major;
    out.enrollment_window = cohort.enrollment_window;
    for (const auto& r : cohort.records) {
        if (r.major == major) out.records.push_back(r);
    }
    return out;
}

inline Cohort filter_enrollment_window(const Cohort& cohort, int year_from,
                                       int year_to) {
    if (year_from > year_to) {
        throw InputError("enrollment window is empty: " +
                         std::to_string(year_from) + " > " +
                         std::to_string(year_to));
    }
    Cohort out;
    out.major_filter = cohort.major_filter;
    out.enrollment_window = std::make_pair(year_from, year_to);
    for (const auto& r : cohort.records) {
        if (r.year >= year_from && r.year <= year_to) out.records.push_back(r);
    }
    return out;
}

namespace detail {

inline std::uint64_t fnv1a64(const std::string& data, std::uint64_t basis) {
    std::uint64_t h = basis;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// 128-bit keyed digest rendered as a 40-digit decimal string.
inline std::string pseudonym_for(const std::string& salt, const std::string& id) {
    const std::string keyed = salt + '\x1f' + id;
    const std::uint64_t h = fnv1a64(keyed, 0xcbf29ce484222325ULL);
    const std::uint64_t a = splitmix64(h);
    const std::uint64_t b = splitmix64(h ^ 0x6a09e667f3bcc909ULL);
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%020llu%020llu",
                  static_cast<unsigned long long>(a),
                  static_cast<unsigned long long>(b));
    return buf;
}

}  // namespace detail

// Replaces every student_id with a salted digest. The mapping is a pure
// function of (salt, id), injective over the cohort, and never reuses an
// input id as an output.
inline Cohort pseudonymize(const Cohort& cohort, const std::string& salt) {
    if (salt.empty()) throw InputError("pseudonymize: salt must not be empty");

    const auto ids = cohort.distinct_students();
    std::map<std::string, std::string> mapping;
    std::set<std::string> used;
    for (const auto& id : ids) {
        std::string p = detail::pseudonym_for(salt, id);
        if (ids.count(p) > 0) {
            throw ComputeError("pseudonymize: digest collides with input id '" +
                               id + "'");
        }
        if (!used.insert(p).second) {
            throw ComputeError(
                "pseudonymize: digest collision between distinct ids");
        }
        mapping.emplace(id, std::move(p));
    }

    Cohort out = cohort;
    for (auto& r : out.records) r.student_id = mapping.at(r.student_id);
    return out;
}

// Drops every record a student de-registered from; everything else is kept
// in order. Idempotent.
inline Cohort clean_cohort(const Cohort& cohort) {
    Cohort out;
    out.major_filter = cohort.major_filter;
    out.enrollment_window = cohort.enrollment_window;
    for (const auto& r : cohort.records) {
        if (r.status != Status::deregistered) out.records.push_back(r);
    }
    return out;
}

// Keeps only passed completions. Used when failed courses should not count
// as "taken" for network construction.
inline Cohort keep_passed_only(const Cohort& cohort) {
    Cohort out;
    out.major_filter = cohort.major_filter;
    out.enrollment_window = cohort.enrollment_window;
    for (const auto& r : cohort.records) {
        if (r.status == Status::completed_pass) out.records.push_back(r);
    }
    return out;
}

// A course is kept iff the fraction of distinct students who took it is at
// least `threshold`. Removal is strict ("fewer than"), so a course exactly
// at the threshold survives. Never removes students, only courses.
inline Cohort remove_outlier_courses(const Cohort& cohort,
                                     double threshold = 0.05) {
    if (!(threshold > 0.0) || threshold > 1.0) {
        throw InputError("outlier threshold must be in (0, 1], got " +
                         std::to_string(threshold));
    }
    const auto students = cohort.distinct_students();
    if (students.empty()) {
        throw InputError("remove_outlier_courses: cohort has no students");
    }
    const double total = static_cast<double>(students.size());

    std::map<std::string, std::set<std::string>> takers;
    for (const auto& r : cohort.records) {
        takers[r.course_id].insert(r.student_id);
    }

    Cohort out;
    out.major_filter = cohort.major_filter;
    out.enrollment_window = cohort.enrollment_window;
    for (const auto& r : cohort.records) {
        const double share =
            static_cast<double>(takers.at(r.course_id).size()) / total;
        if (share >= threshold) out.records.push_back(r);
    }
    return out;
}

}  // namespace coursenet
