#pragma once

// Analysis report assembly and serialization. One struct captures everything
// a run produced; it serializes to JSON (fixed key order) and to a plain-text
// summary. Both renderings iterate only ordered containers and push doubles
// through a single formatter, which is what makes repeat runs byte-identical.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "coursenet/community_metrics.hpp"
#include "coursenet/graph_export.hpp"
#include "coursenet/semester_network.hpp"

namespace coursenet {

struct GraphStats {
    int nodes = 0;
    int edges = 0;
    double total_weight = 0.0;
    std::optional<double> mean_edge_weight;  // unset for edgeless graphs
};

struct CommunityReport {
    int community_id = 0;
    std::vector<std::string> courses;  // sorted
    int size = 0;
    double internal_weight = 0.0;
    double external_weight = 0.0;
    std::optional<double> wd_inter;
    std::optional<double> wd_intra;
    std::optional<double> ratio;
    int student_count = 0;  // students who took at least half the courses
};

struct MethodReport {
    std::string method;                          // "dd" or "gt"
    std::vector<std::string> hubs;               // sorted
    std::vector<std::string> missing_mandatory;  // gt ids absent from the graph
    GraphStats filtered;                         // graph after hub removal
    double final_modularity = 0.0;
    int levels = 0;
    int refined_from = 0;  // community count before refinement, 0 if skipped
    std::vector<CommunityReport> communities;
    std::optional<double> weighted_average_ratio;
};

struct ReportParameters {
    std::string input;
    std::optional<std::string> major;
    std::optional<int> enroll_from;
    std::optional<int> enroll_to;
    double outlier_threshold = 0.05;
    std::string hub_method = "dd";
    std::optional<std::string> mandatory_list;
    bool include_failed = true;
    std::uint64_t seed = 42;
    double min_gain = 1e-7;
    std::optional<double> refine_guard;
    int semester_cap = 10;
    std::optional<std::string> export_format;
    std::optional<std::string> out_dir;
};

struct CohortSummary {
    int raw_records = 0;
    int analyzed_records = 0;  // after status/major/window/outlier filtering
    int students = 0;
    int courses = 0;
    int outlier_courses_removed = 0;
};

struct SimilaritySection {
    std::vector<CommunityMatch> matches;
    double overall = 0.0;
};

struct AnalysisReport {
    ReportParameters parameters;
    CohortSummary cohort;
    GraphStats projection;
    std::vector<MethodReport> methods;
    std::optional<SimilaritySection> similarity;  // set when hub_method=both
    std::vector<TypicalSemester> typical_path;
    std::vector<SemesterShare> semester_shares;
};

namespace detail {

inline nlohmann::ordered_json json_opt(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

template <typename T>
nlohmann::ordered_json json_opt(const std::optional<T>& v) {
    if (v) return *v;
    return nullptr;
}

inline nlohmann::ordered_json to_json(const GraphStats& s) {
    return {{"nodes", s.nodes},
            {"edges", s.edges},
            {"total_weight", s.total_weight},
            {"mean_edge_weight", json_opt(s.mean_edge_weight)}};
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;

    const auto& p = r.parameters;
    j["parameters"] = {{"input", p.input},
                       {"major", detail::json_opt(p.major)},
                       {"enroll_from", detail::json_opt(p.enroll_from)},
                       {"enroll_to", detail::json_opt(p.enroll_to)},
                       {"outlier_threshold", p.outlier_threshold},
                       {"hub_method", p.hub_method},
                       {"mandatory_list", detail::json_opt(p.mandatory_list)},
                       {"include_failed", p.include_failed},
                       {"seed", p.seed},
                       {"min_gain", p.min_gain},
                       {"refine_guard", detail::json_opt(p.refine_guard)},
                       {"semester_cap", p.semester_cap},
                       {"export_format", detail::json_opt(p.export_format)},
                       {"out_dir", detail::json_opt(p.out_dir)}};

    j["cohort"] = {{"raw_records", r.cohort.raw_records},
                   {"analyzed_records", r.cohort.analyzed_records},
                   {"students", r.cohort.students},
                   {"courses", r.cohort.courses},
                   {"outlier_courses_removed", r.cohort.outlier_courses_removed}};

    j["projection"] = detail::to_json(r.projection);

    j["methods"] = nlohmann::ordered_json::array();
    for (const auto& m : r.methods) {
        nlohmann::ordered_json jm = {
            {"method", m.method},
            {"hubs", m.hubs},
            {"missing_mandatory", m.missing_mandatory},
            {"filtered_graph", detail::to_json(m.filtered)},
            {"final_modularity", m.final_modularity},
            {"levels", m.levels},
            {"refined_from", m.refined_from},
            {"weighted_average_ratio", detail::json_opt(m.weighted_average_ratio)},
        };
        jm["communities"] = nlohmann::ordered_json::array();
        for (const auto& c : m.communities) {
            jm["communities"].push_back(
                {{"id", c.community_id},
                 {"size", c.size},
                 {"courses", c.courses},
                 {"internal_weight", c.internal_weight},
                 {"external_weight", c.external_weight},
                 {"wd_inter", detail::json_opt(c.wd_inter)},
                 {"wd_intra", detail::json_opt(c.wd_intra)},
                 {"ratio", detail::json_opt(c.ratio)},
                 {"students", c.student_count}});
        }
        j["methods"].push_back(std::move(jm));
    }

    if (r.similarity) {
        nlohmann::ordered_json js;
        js["overall"] = r.similarity->overall;
        js["matches"] = nlohmann::ordered_json::array();
        for (const auto& m : r.similarity->matches) {
            js["matches"].push_back({{"gt_community", m.gt_community},
                                     {"dd_community", m.dd_community},
                                     {"dice", m.dice}});
        }
        j["similarity"] = std::move(js);
    } else {
        j["similarity"] = nullptr;
    }

    j["typical_path"] = nlohmann::ordered_json::array();
    for (const auto& t : r.typical_path) {
        j["typical_path"].push_back({{"ordinal", t.ordinal},
                                     {"courses", t.courses},
                                     {"students", t.student_count}});
    }

    j["semester_shares"] = nlohmann::ordered_json::array();
    for (const auto& s : r.semester_shares) {
        j["semester_shares"].push_back({{"ordinal", s.ordinal},
                                        {"top_count", s.top_count},
                                        {"total_count", s.total_count},
                                        {"share", s.share}});
    }

    return j;
}

inline std::string report_to_json_string(const AnalysisReport& r) {
    return to_json(r).dump(2) + "\n";
}

namespace detail {

inline std::string fmt_opt(const std::optional<double>& v) {
    return v ? fmt_double(*v) : std::string("undefined");
}

inline std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) {
        if (!out.empty()) out += ", ";
        out += id;
    }
    return out.empty() ? std::string("(none)") : out;
}

}  // namespace detail

inline std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream os;
    const auto& p = r.parameters;

    os << "course network analysis\n";
    os << "=======================\n\n";

    os << "parameters\n";
    os << "  input:             " << p.input << "\n";
    os << "  major:             " << (p.major ? *p.major : "(all)") << "\n";
    os << "  enrollment window: "
       << (p.enroll_from ? std::to_string(*p.enroll_from) : "(open)") << " .. "
       << (p.enroll_to ? std::to_string(*p.enroll_to) : "(open)") << "\n";
    os << "  outlier threshold: " << detail::fmt_double(p.outlier_threshold)
       << "\n";
    os << "  hub method:        " << p.hub_method << "\n";
    if (p.mandatory_list) {
        os << "  mandatory list:    " << *p.mandatory_list << "\n";
    }
    os << "  include failed:    " << (p.include_failed ? "true" : "false")
       << "\n";
    os << "  seed:              " << p.seed << "\n";
    os << "  min gain:          " << detail::fmt_double(p.min_gain) << "\n";
    if (p.refine_guard) {
        os << "  refine guard:      " << detail::fmt_double(*p.refine_guard)
           << "\n";
    }
    os << "  semester cap:      " << p.semester_cap << "\n\n";

    os << "cohort\n";
    os << "  raw records:      " << r.cohort.raw_records << "\n";
    os << "  analyzed records: " << r.cohort.analyzed_records << "\n";
    os << "  students:         " << r.cohort.students << "\n";
    os << "  courses:          " << r.cohort.courses << "\n";
    os << "  outliers removed: " << r.cohort.outlier_courses_removed << "\n\n";

    os << "course network\n";
    os << "  nodes: " << r.projection.nodes << "  edges: " << r.projection.edges
       << "  total weight: " << detail::fmt_double(r.projection.total_weight)
       << "  mean edge weight: "
       << detail::fmt_opt(r.projection.mean_edge_weight) << "\n\n";

    for (const auto& m : r.methods) {
        os << "hub method " << m.method << "\n";
        os << "  hubs removed (" << m.hubs.size()
           << "): " << detail::join_ids(m.hubs) << "\n";
        if (!m.missing_mandatory.empty()) {
            os << "  warning, mandatory ids not in graph: "
               << detail::join_ids(m.missing_mandatory) << "\n";
        }
        os << "  filtered graph: nodes=" << m.filtered.nodes
           << " edges=" << m.filtered.edges << " total weight="
           << detail::fmt_double(m.filtered.total_weight) << "\n";
        os << "  modularity: " << detail::fmt_double(m.final_modularity)
           << " (levels: " << m.levels << ")\n";
        if (m.refined_from > 0) {
            os << "  refinement: " << m.refined_from << " -> "
               << m.communities.size() << " communities\n";
        }
        os << "  communities (" << m.communities.size() << "):\n";
        for (const auto& c : m.communities) {
            os << "    [" << c.community_id << "] size=" << c.size
               << " students=" << c.student_count
               << " ratio=" << detail::fmt_opt(c.ratio)
               << " wd_inter=" << detail::fmt_opt(c.wd_inter)
               << " wd_intra=" << detail::fmt_opt(c.wd_intra) << "\n";
            os << "        courses: " << detail::join_ids(c.courses) << "\n";
        }
        os << "  weighted average ratio: "
           << detail::fmt_opt(m.weighted_average_ratio) << "\n\n";
    }

    if (r.similarity) {
        os << "clustering similarity (gt vs dd)\n";
        os << "  overall: " << detail::fmt_double(r.similarity->overall) << "\n";
        for (const auto& m : r.similarity->matches) {
            os << "  gt[" << m.gt_community << "] -> dd[" << m.dd_community
               << "] dice=" << detail::fmt_double(m.dice) << "\n";
        }
        os << "\n";
    }

    os << "semester progression\n";
    os << "  typical path:\n";
    for (const auto& t : r.typical_path) {
        os << "    " << t.ordinal << ": students=" << t.student_count
           << " courses: " << detail::join_ids(t.courses) << "\n";
    }
    os << "  common course-set share:\n";
    for (const auto& s : r.semester_shares) {
        os << "    " << s.ordinal << ": " << s.top_count << "/" << s.total_count
           << " = " << detail::fmt_double(s.share) << "\n";
    }

    return os.str();
}

}  // namespace coursenet
