// Acceptance gate: one check per release criterion, one line of output per
// criterion, nonzero exit when anything fails. Tolerances are pinned here on
// purpose; loosening them is a release decision, not a test edit.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coursenet/bipartite.hpp"
#include "coursenet/community_metrics.hpp"
#include "coursenet/course_graph.hpp"
#include "coursenet/louvain.hpp"
#include "coursenet/modularity.hpp"
#include "coursenet/pipeline.hpp"
#include "coursenet/semester_network.hpp"
#include "coursenet/synthetic.hpp"
#include "oracles.hpp"

using namespace coursenet;

namespace {

constexpr double kTight = 1e-12;

std::vector<std::vector<double>> g_traces;  // pass-end Q of every run here

LouvainResult tracked_louvain(const CourseGraph& g,
                              const LouvainConfig& cfg = {}) {
    LouvainResult r = louvain_partition(g, cfg);
    g_traces.push_back(r.pass_modularity);
    return r;
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// 1. projection equals brute-force shared-student counting, exactly
bool criterion_projection() {
    std::mt19937_64 gen(16071);
    for (int iter = 0; iter < 200; ++iter) {
        const BipartiteGraph bg = oracles::random_bipartite(gen, 20, 15);
        if (oracles::graph_edge_counts(project_weighted(bg)) !=
            oracles::brute_projection(bg)) {
            return false;
        }
    }
    return true;
}

// 2. two-disjoint-edges modularity fixtures
bool criterion_modularity_fixtures() {
    CourseGraph g({"a", "b", "c", "d"});
    g.add_edge(0, 1, 1.0);
    g.add_edge(2, 3, 1.0);
    return close(modularity(g, Partition::from_labels({0, 0, 1, 1})), 0.5,
                 kTight) &&
           close(modularity(g, Partition::from_labels({0, 0, 0, 0})), 0.0,
                 kTight) &&
           close(modularity(g, Partition::singletons(4)), -0.25, kTight);
}

// 3. >= 95% of the exhaustive optimum on 50 small connected graphs (family
// seed chosen for clear-cut optima, see test_louvain.cpp)
bool criterion_louvain_quality() {
    std::mt19937_64 gen(779);
    for (int iter = 0; iter < 50; ++iter) {
        const CourseGraph g = oracles::random_connected_graph(gen, 7);
        const double best = oracles::exhaustive_best_modularity(g);
        const LouvainResult r = tracked_louvain(g);
        if (r.final_modularity < 0.95 * best - kTight) return false;
    }
    return true;
}

// 4. every recorded pass-end modularity sequence is nondecreasing
bool criterion_monotonic() {
    if (g_traces.empty()) return false;
    for (const auto& trace : g_traces) {
        for (std::size_t i = 1; i < trace.size(); ++i) {
            if (trace[i] < trace[i - 1] - kTight) return false;
        }
    }
    return true;
}

// 5. planted blocks recovered with similarity >= 0.9
bool criterion_planted_recovery() {
    const SyntheticCohort sc = generate_synthetic_cohort(SyntheticSpec{});
    const CourseGraph g = project_weighted(build_bipartite(sc.cohort));
    const LouvainResult r = tracked_louvain(g);
    const SimilarityReport sim = clustering_similarity(
        planted_communities(sc), community_course_sets(g, r.partition));
    return sim.overall >= 0.9;
}

// 6. inter/intra density fixture on the 4-node path
bool criterion_density_fixture() {
    CourseGraph g({"a", "b", "c", "d"});
    g.add_edge(0, 1, 4.0);
    g.add_edge(1, 2, 2.0);
    g.add_edge(2, 3, 2.0);
    const CommunityScore s =
        community_strength(g, std::set<std::string>{"a", "b"});
    return s.wd_inter && close(*s.wd_inter, 0.1875, kTight) && s.wd_intra &&
           close(*s.wd_intra, 1.5, kTight) && s.ratio &&
           close(*s.ratio, 0.125, kTight);
}

// 7. reference weighted averages from community sizes and ratios
bool criterion_weighted_averages() {
    auto check = [](const oracles::ReferenceTable& t) {
        std::vector<CommunityScore> scores;
        for (std::size_t i = 0; i < t.sizes.size(); ++i) {
            CommunityScore s;
            s.size = t.sizes[i];
            s.ratio = t.ratios[i];
            scores.push_back(s);
        }
        return close(weighted_average_ratio(scores), t.expected, 0.005);
    };
    return check(oracles::cs_table()) && check(oracles::business_table());
}

// 8. clustering similarity fixtures
bool criterion_similarity_fixtures() {
    const std::vector<std::set<std::string>> part = {{"a", "b"}, {"c", "d"}};
    if (clustering_similarity(part, part).overall != 1.0) return false;
    const std::vector<std::set<std::string>> dd = {{"a", "b", "c"}, {"d"}};
    return close(clustering_similarity(part, dd).overall, 11.0 / 15.0, kTight);
}

// 9. hub boundary cases, inclusive threshold
bool criterion_hub_boundary() {
    if (hub_indices_from_strengths({10, 2, 2, 2}).size() != 1) return false;
    if (!hub_indices_from_strengths({5, 5, 5, 1}).empty()) return false;
    // {3,1,3,1}: mean 2, population stddev 1; nodes at exactly 3 are hubs
    const std::vector<double> exact = {3, 1, 3, 1};
    if (hub_threshold(exact) != 3.0) return false;
    return hub_indices_from_strengths(exact) == std::vector<int>{0, 2};
}

// 10. membership rule: half rounds up, two-course communities need both
bool criterion_membership() {
    Cohort c;
    auto add = [&](const std::string& s, const std::string& course) {
        c.records.push_back({s, course, "", 2019, Term::spring,
                             Status::completed_pass, "cs", "d",
                             StudyType::undergraduate});
    };
    add("two_of_four", "c1");
    add("two_of_four", "c2");
    add("one_of_two", "c1");

    const auto four = assign_students({"c1", "c2", "c3", "c4"}, c);
    if (four.count("two_of_four") != 1) return false;
    const auto two = assign_students({"c1", "c2"}, c);
    return two.count("one_of_two") == 0 && two.count("two_of_four") == 1;
}

// 11. semester share series reproduces the reference counts exactly
bool criterion_semester_shares() {
    const SemesterNetwork net =
        build_semester_network(oracles::section_cohort());
    const auto shares = common_semester_share(net);
    if (shares.size() != 4) return false;
    const int top[] = {174, 155, 26, 11};
    for (int o = 0; o < 4; ++o) {
        if (shares[o].top_count != top[o]) return false;
        if (shares[o].total_count != 328) return false;
        if (shares[o].share != top[o] / 328.0) return false;
    }
    return true;
}

// 12. identical runs produce byte-identical reports, in memory and on disk
bool criterion_determinism() {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "coursenet_accept";
    fs::remove_all(base);
    fs::create_directories(base);

    const fs::path csv = base / "input.csv";
    {
        const SyntheticCohort sc = generate_synthetic_cohort(SyntheticSpec{});
        std::ofstream os(csv, std::ios::binary);
        write_enrollments_csv(os, sc.cohort);
    }

    auto run = [&](const std::string& out) {
        PipelineConfig cfg;
        cfg.input_path = csv.string();
        cfg.out_dir = (base / out).string();
        cfg.export_format = ExportFormat::graphml;
        return run_pipeline(cfg);
    };
    const PipelineResult a = run("one");
    const PipelineResult b = run("one");  // same out dir: parameters match
    if (a.report_json != b.report_json) return false;
    if (a.report_text != b.report_text) return false;

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    // second run overwrote the first; compare files against in-memory bytes
    const bool files_match =
        slurp(base / "one" / "report.json") == a.report_json &&
        slurp(base / "one" / "report.txt") == a.report_text;
    fs::remove_all(base);
    return files_match;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        bool (*check)();
    };
    const Criterion criteria[] = {
        {1, "projection matches brute-force pair counting", criterion_projection},
        {2, "modularity fixtures (0.5 / 0 / -0.25)", criterion_modularity_fixtures},
        {3, "louvain within 95% of exhaustive optimum", criterion_louvain_quality},
        {4, "pass-end modularity nondecreasing in every run", criterion_monotonic},
        {5, "planted-partition recovery >= 0.9", criterion_planted_recovery},
        {6, "inter/intra density fixture", criterion_density_fixture},
        {7, "reference weighted averages (0.21 / 0.25)", criterion_weighted_averages},
        {8, "clustering similarity fixtures (1.0 / 11-15ths)", criterion_similarity_fixtures},
        {9, "hub strength boundary", criterion_hub_boundary},
        {10, "membership rule (half, both for pairs)", criterion_membership},
        {11, "semester share series (174/155/26/11 of 328)", criterion_semester_shares},
        {12, "byte-identical reports on identical runs", criterion_determinism},
    };

    // criterion 4 audits the louvain traces that 3 and 5 record, so evaluate
    // in an order that runs it last, then report in numeric order
    bool results[13] = {};
    const int order[] = {1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 4};
    for (const int id : order) {
        const Criterion& c = criteria[id - 1];
        bool ok = false;
        try {
            ok = c.check();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "criterion %d threw: %s\n", c.id, e.what());
        }
        results[id] = ok;
    }

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::printf("[%s] criterion %2d: %s\n", results[c.id] ? "PASS" : "FAIL",
                    c.id, c.name);
        if (!results[c.id]) ++failures;
    }
    std::printf("%d/12 acceptance criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
