#pragma once

// End-to-end run: ingest -> projection -> hub removal -> clustering ->
// community scoring -> similarity (when both hub methods run) -> semester
// network -> serialization. All computation happens before any file is
// written, so a failing stage leaves no partial outputs behind.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coursenet/bipartite.hpp"
#include "coursenet/community_metrics.hpp"
#include "coursenet/course_graph.hpp"
#include "coursenet/enrollment.hpp"
#include "coursenet/errors.hpp"
#include "coursenet/graph_export.hpp"
#include "coursenet/louvain.hpp"
#include "coursenet/modularity.hpp"
#include "coursenet/partition.hpp"
#include "coursenet/report.hpp"
#include "coursenet/semester_network.hpp"

namespace coursenet {

struct PipelineConfig {
    std::string input_path;
    std::optional<std::string> major;
    std::optional<int> enroll_from;
    std::optional<int> enroll_to;
    double outlier_threshold = 0.05;
    std::string hub_method = "dd";  // dd | gt | both
    std::optional<std::string> mandatory_list_path;
    bool include_failed = true;
    std::uint64_t seed = 42;
    double min_gain = 1e-7;
    std::optional<double> refine_guard;
    int semester_cap = 10;
    std::optional<ExportFormat> export_format;
    std::optional<std::string> out_dir;
};

struct PipelineResult {
    AnalysisReport report;
    std::string report_json;
    std::string report_text;
    std::vector<std::string> written_files;  // relative to out_dir
};

namespace detail {

// Re-throws a stage's errors with the stage name prepended, keeping the
// input-vs-compute distinction intact for exit-code mapping.
template <typename F>
decltype(auto) stage(const char* name, F&& f) {
    try {
        return f();
    } catch (const InputError& e) {
        throw InputError(std::string(name) + ": " + e.what());
    } catch (const ComputeError& e) {
        throw ComputeError(std::string(name) + ": " + e.what());
    }
}

inline GraphStats graph_stats(const CourseGraph& g) {
    GraphStats s;
    s.nodes = g.node_count();
    s.edges = g.edge_count();
    s.total_weight = g.total_weight();
    if (g.edge_count() > 0) s.mean_edge_weight = g.mean_edge_weight();
    return s;
}

struct MethodRun {
    MethodReport report;
    std::vector<std::set<std::string>> community_courses;  // by community id
    NodeAnnotations annotations;  // on the unfiltered projection
};

inline MethodRun run_hub_method(const std::string& method,
                                const CourseGraph& projection,
                                const std::set<std::string>& hubs,
                                std::vector<std::string> missing,
                                const Cohort& cohort,
                                const PipelineConfig& cfg) {
    MethodRun run;
    run.report.method = method;
    run.report.hubs.assign(hubs.begin(), hubs.end());
    run.report.missing_mandatory = std::move(missing);
    run.annotations.hubs = hubs;

    const CourseGraph filtered = remove_nodes(projection, hubs);
    run.report.filtered = graph_stats(filtered);
    if (filtered.node_count() == 0) {
        throw InputError("hub removal left no courses in the network");
    }

    LouvainConfig lc;
    lc.seed = cfg.seed;
    lc.min_modularity_gain = cfg.min_gain;
    const LouvainResult lr = louvain_partition(filtered, lc);
    Partition partition = lr.partition;
    run.report.levels = lr.levels;
    if (cfg.refine_guard) {
        run.report.refined_from = partition.community_count;
        partition =
            refine_communities(filtered, partition, *cfg.refine_guard, lc);
    }
    run.report.final_modularity =
        filtered.total_weight() > 0.0 ? modularity(filtered, partition) : 0.0;

    run.community_courses = community_course_sets(filtered, partition);
    run.annotations.community = assignment_map(filtered, partition);

    for (int c = 0; c < partition.community_count; ++c) {
        const auto& courses = run.community_courses[c];
        const CommunityScore score = community_strength(filtered, courses);
        CommunityReport cr;
        cr.community_id = c;
        cr.courses.assign(courses.begin(), courses.end());
        cr.size = score.size;
        cr.internal_weight = score.internal_weight;
        cr.external_weight = score.external_weight;
        cr.wd_inter = score.wd_inter;
        cr.wd_intra = score.wd_intra;
        cr.ratio = score.ratio;
        cr.student_count =
            static_cast<int>(assign_students(courses, cohort).size());
        run.report.communities.push_back(std::move(cr));
    }

    std::vector<CommunityScore> scores;
    bool any_ratio = false;
    for (const auto& c : run.report.communities) {
        CommunityScore s;
        s.size = c.size;
        s.ratio = c.ratio;
        any_ratio = any_ratio || c.ratio.has_value();
        scores.push_back(s);
    }
    if (any_ratio) {
        run.report.weighted_average_ratio = weighted_average_ratio(scores);
    }
    return run;
}

}  // namespace detail

inline PipelineResult run_pipeline(const PipelineConfig& cfg) {
    detail::stage("config", [&] {
        if (cfg.input_path.empty()) throw InputError("--input is required");
        if (cfg.hub_method != "dd" && cfg.hub_method != "gt" &&
            cfg.hub_method != "both") {
            throw InputError("hub method must be dd, gt, or both");
        }
        if ((cfg.hub_method == "gt" || cfg.hub_method == "both") &&
            !cfg.mandatory_list_path) {
            throw InputError("hub method '" + cfg.hub_method +
                             "' requires --mandatory-list");
        }
        if (cfg.enroll_from && cfg.enroll_to &&
            *cfg.enroll_from > *cfg.enroll_to) {
            throw InputError("--enroll-from exceeds --enroll-to");
        }
        if (!(cfg.outlier_threshold > 0.0 && cfg.outlier_threshold <= 1.0)) {
            throw InputError("--outlier-threshold must be in (0, 1]");
        }
        if (cfg.min_gain < 0.0) throw InputError("--min-gain must be >= 0");
        if (cfg.refine_guard && *cfg.refine_guard < 0.0) {
            throw InputError("--refine-guard must be >= 0");
        }
        if (cfg.semester_cap < 1) {
            throw InputError("--semester-cap must be >= 1");
        }
    });

    PipelineResult result;
    AnalysisReport& report = result.report;

    report.parameters.input = cfg.input_path;
    report.parameters.major = cfg.major;
    report.parameters.enroll_from = cfg.enroll_from;
    report.parameters.enroll_to = cfg.enroll_to;
    report.parameters.outlier_threshold = cfg.outlier_threshold;
    report.parameters.hub_method = cfg.hub_method;
    report.parameters.mandatory_list = cfg.mandatory_list_path;
    report.parameters.include_failed = cfg.include_failed;
    report.parameters.seed = cfg.seed;
    report.parameters.min_gain = cfg.min_gain;
    report.parameters.refine_guard = cfg.refine_guard;
    report.parameters.semester_cap = cfg.semester_cap;
    if (cfg.export_format) {
        report.parameters.export_format =
            export_format_extension(*cfg.export_format).substr(1);
    }
    report.parameters.out_dir = cfg.out_dir;

    // ingest: parse, filter, anonymize, drop outlier courses
    const Cohort cohort = detail::stage("ingest", [&] {
        std::ifstream in(cfg.input_path, std::ios::binary);
        if (!in) {
            throw InputError("cannot open input '" + cfg.input_path + "'");
        }
        Cohort c = parse_enrollments(in);
        report.cohort.raw_records = static_cast<int>(c.records.size());

        if (cfg.major) c = filter_major(c, *cfg.major);
        if (cfg.enroll_from || cfg.enroll_to) {
            c = filter_enrollment_window(c, cfg.enroll_from.value_or(kMinYear),
                                         cfg.enroll_to.value_or(kMaxYear));
        }
        c = clean_cohort(c);
        if (!cfg.include_failed) c = keep_passed_only(c);
        if (c.distinct_students().empty()) {
            throw InputError("no students in cohort");
        }
        c = pseudonymize(c, "coursenet-" + std::to_string(cfg.seed));

        const int before = static_cast<int>(c.distinct_courses().size());
        c = remove_outlier_courses(c, cfg.outlier_threshold);
        report.cohort.outlier_courses_removed =
            before - static_cast<int>(c.distinct_courses().size());
        if (c.records.empty()) {
            throw InputError("no courses above the outlier threshold");
        }

        report.cohort.analyzed_records = static_cast<int>(c.records.size());
        report.cohort.students =
            static_cast<int>(c.distinct_students().size());
        report.cohort.courses = static_cast<int>(c.distinct_courses().size());
        return c;
    });

    // netcore: bipartite graph and weighted one-mode projection
    const CourseGraph projection = detail::stage("projection", [&] {
        const BipartiteGraph bg = build_bipartite(cohort);
        return project_weighted(bg);
    });
    report.projection = detail::graph_stats(projection);

    // hub detection + clustering + scoring, per requested method
    std::vector<detail::MethodRun> runs;
    const bool run_dd = cfg.hub_method == "dd" || cfg.hub_method == "both";
    const bool run_gt = cfg.hub_method == "gt" || cfg.hub_method == "both";

    if (run_dd) {
        runs.push_back(detail::stage("clustering (dd)", [&] {
            return detail::run_hub_method("dd", projection,
                                          detect_hubs_dd(projection), {},
                                          cohort, cfg);
        }));
    }
    if (run_gt) {
        runs.push_back(detail::stage("clustering (gt)", [&] {
            std::ifstream in(*cfg.mandatory_list_path);
            if (!in) {
                throw InputError("cannot open mandatory list '" +
                                 *cfg.mandatory_list_path + "'");
            }
            const auto listed = read_mandatory_list(in);
            std::set<std::string> hubs;
            std::vector<std::string> missing;
            for (const auto& id : listed) {
                if (projection.has_node(id)) {
                    hubs.insert(id);
                } else {
                    missing.push_back(id);
                }
            }
            return detail::run_hub_method("gt", projection, hubs,
                                          std::move(missing), cohort, cfg);
        }));
    }
    for (auto& run : runs) report.methods.push_back(run.report);

    // The mandatory-list (gt) clustering is the reference partition.
    if (run_dd && run_gt) {
        detail::stage("similarity", [&] {
            const auto& dd = runs[0].community_courses;
            const auto& gt = runs[1].community_courses;
            const SimilarityReport sim = clustering_similarity(gt, dd);
            SimilaritySection section;
            section.matches = sim.per_community_best;
            section.overall = sim.overall;
            report.similarity = std::move(section);
        });
    }

    // semester progression on the analyzed cohort
    const SemesterNetwork semesters = detail::stage("semester", [&] {
        return build_semester_network(cohort, cfg.semester_cap);
    });
    report.typical_path = typical_path(semesters);
    report.semester_shares = common_semester_share(semesters);

    result.report_json = report_to_json_string(report);
    result.report_text = report_to_text(report);

    if (cfg.out_dir) {
        detail::stage("write", [&] {
            namespace fs = std::filesystem;
            std::error_code ec;
            fs::create_directories(*cfg.out_dir, ec);
            if (ec) {
                throw InputError("cannot create out dir '" + *cfg.out_dir +
                                 "': " + ec.message());
            }
            auto write_file = [&](const std::string& name,
                                  const std::string& content) {
                const fs::path path = fs::path(*cfg.out_dir) / name;
                std::ofstream os(path, std::ios::binary);
                if (!os) {
                    throw InputError("cannot open '" + path.string() +
                                     "' for writing");
                }
                os << content;
                if (!os) {
                    throw ComputeError("write failed for '" + path.string() +
                                       "'");
                }
                result.written_files.push_back(name);
            };

            write_file("report.json", result.report_json);
            write_file("report.txt", result.report_text);

            if (cfg.export_format) {
                for (const auto& run : runs) {
                    std::ostringstream os;
                    export_course_graph(os, projection, *cfg.export_format,
                                        &run.annotations);
                    write_file("courses_" + run.report.method +
                                   export_format_extension(*cfg.export_format),
                               os.str());
                }
            }

            std::ostringstream sem_graphml;
            export_semester_graphml(sem_graphml, semesters);
            write_file("semesters.graphml", sem_graphml.str());

            std::ostringstream sem_dot;
            export_semester_dot(sem_dot, semesters);
            write_file("semesters.dot", sem_dot.str());

            std::ostringstream shares_csv;
            write_share_series_csv(shares_csv, report.semester_shares);
            write_file("semester_shares.csv", shares_csv.str());
        });
    }

    return result;
}

}  // namespace coursenet
