#pragma once

// Synthetic cohort with planted course blocks. Students belong to a block
// and enroll in each course with probability p_in inside their block and
// p_out elsewhere; projecting the result should recover the blocks as
// communities as long as p_in is well above p_out. Fixed seed, fixed
// iteration order: same spec always yields the same cohort.

#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coursenet/enrollment.hpp"
#include "coursenet/errors.hpp"
#include "coursenet/rng.hpp"

namespace coursenet {

struct SyntheticSpec {
    int blocks = 3;
    int courses_per_block = 10;
    int students_per_block = 100;
    double p_in = 0.9;
    double p_out = 0.05;
    int semesters = 4;  // each student's courses are spread over this many
    std::uint64_t seed = 42;
    std::string major = "synthetic";
};

struct SyntheticCohort {
    Cohort cohort;
    std::map<std::string, int> block_of_course;
};

namespace detail {

inline std::string padded_id(const char* prefix, int n) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%s%03d", prefix, n);
    return buf;
}

}  // namespace detail

inline SyntheticCohort generate_synthetic_cohort(const SyntheticSpec& spec) {
    if (spec.blocks < 1 || spec.courses_per_block < 1 ||
        spec.students_per_block < 1 || spec.semesters < 1) {
        throw InputError("generate_synthetic_cohort: counts must be >= 1");
    }
    if (!(spec.p_in > 0.0 && spec.p_in <= 1.0) ||
        !(spec.p_out >= 0.0 && spec.p_out <= 1.0)) {
        throw InputError("generate_synthetic_cohort: probabilities out of range");
    }
    if (spec.p_in <= spec.p_out) {
        throw InputError("generate_synthetic_cohort: p_in must exceed p_out");
    }

    const int total_courses = spec.blocks * spec.courses_per_block;
    SyntheticCohort out;
    for (int c = 0; c < total_courses; ++c) {
        out.block_of_course[detail::padded_id("C", c)] = c / spec.courses_per_block;
    }

    std::mt19937_64 gen(spec.seed);
    const int total_students = spec.blocks * spec.students_per_block;

    for (int s = 0; s < total_students; ++s) {
        const int block = s / spec.students_per_block;
        std::vector<int> taken;
        for (int c = 0; c < total_courses; ++c) {
            const double p =
                c / spec.courses_per_block == block ? spec.p_in : spec.p_out;
            if (rng_unit(gen) < p) taken.push_back(c);
        }
        if (taken.empty()) {  // keep every student connected to the graph
            taken.push_back(block * spec.courses_per_block +
                            static_cast<int>(rng_below(
                                gen, static_cast<std::uint64_t>(
                                         spec.courses_per_block))));
        }

        const std::string student_id = detail::padded_id("S", s);
        const int k = static_cast<int>(taken.size());
        for (int j = 0; j < spec.semesters; ++j) {
            const int begin = j * k / spec.semesters;
            const int end = (j + 1) * k / spec.semesters;
            // two semesters per calendar year, starting spring 2015
            const int year = 2015 + j / 2;
            const Term term = j % 2 == 0 ? Term::spring : Term::fall;
            for (int i = begin; i < end; ++i) {
                const std::string course_id = detail::padded_id("C", taken[i]);
                out.cohort.records.push_back({student_id, course_id, course_id,
                                              year, term, Status::completed_pass,
                                              spec.major, spec.major,
                                              StudyType::undergraduate});
            }
        }
    }

    out.cohort.major_filter = spec.major;
    return out;
}

// The planted blocks as course-id sets, for scoring a detected partition.
inline std::vector<std::set<std::string>> planted_communities(
    const SyntheticCohort& synthetic) {
    std::vector<std::set<std::string>> blocks;
    for (const auto& [course, block] : synthetic.block_of_course) {
        if (block >= static_cast<int>(blocks.size())) {
            blocks.resize(block + 1);
        }
        blocks[block].insert(course);
    }
    return blocks;
}

}  // namespace coursenet
