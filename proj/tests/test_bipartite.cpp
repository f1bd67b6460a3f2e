#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coursenet/bipartite.hpp"
#include "oracles.hpp"

using namespace coursenet;

namespace {

Cohort tiny_cohort() {
    Cohort c;
    auto add = [&](const std::string& s, const std::string& course, int year,
                   Term term) {
        c.records.push_back({s, course, "", year, term, Status::completed_pass,
                             "cs", "d", StudyType::undergraduate});
    };
    add("s1", "A", 2019, Term::spring);
    add("s1", "B", 2019, Term::spring);
    add("s2", "A", 2019, Term::fall);
    add("s2", "B", 2020, Term::spring);
    add("s3", "A", 2019, Term::spring);
    add("s3", "C", 2019, Term::spring);
    return c;
}

}  // namespace

TEST_CASE("bipartite graph collapses retakes to one edge") {
    Cohort c = tiny_cohort();
    c.records.push_back({"s1", "A", "", 2020, Term::fall,
                         Status::completed_fail, "cs", "d",
                         StudyType::undergraduate});
    const BipartiteGraph bg = build_bipartite(c);
    CHECK(bg.students().size() == 3);
    CHECK(bg.courses().size() == 3);
    CHECK(bg.edge_count() == 6);  // 7 records, one retake
    CHECK(bg.has_edge("s1", "A"));
    CHECK_FALSE(bg.has_edge("s2", "C"));
    CHECK_FALSE(bg.has_edge("nobody", "A"));
}

TEST_CASE("projection counts shared students per course pair") {
    const CourseGraph g = project_weighted(build_bipartite(tiny_cohort()));
    REQUIRE(g.node_count() == 3);
    const auto a = g.index_of("A");
    const auto b = g.index_of("B");
    const auto c = g.index_of("C");
    REQUIRE((a && b && c));
    CHECK(g.edge_weight(*a, *b) == 2.0);  // s1 and s2
    CHECK(g.edge_weight(*a, *c) == 1.0);  // s3
    CHECK(g.edge_weight(*b, *c) == 0.0);
}

TEST_CASE("courses nobody shares stay as isolated nodes") {
    Cohort c;
    c.records.push_back({"s1", "LONELY", "", 2019, Term::spring,
                         Status::completed_pass, "cs", "d",
                         StudyType::undergraduate});
    c.records.push_back({"s2", "A", "", 2019, Term::spring,
                         Status::completed_pass, "cs", "d",
                         StudyType::undergraduate});
    c.records.push_back({"s2", "B", "", 2019, Term::spring,
                         Status::completed_pass, "cs", "d",
                         StudyType::undergraduate});
    const CourseGraph g = project_weighted(build_bipartite(c));
    CHECK(g.node_count() == 3);
    CHECK(g.strength("LONELY") == 0.0);
    CHECK(g.edge_weight(*g.index_of("A"), *g.index_of("B")) == 1.0);
}

TEST_CASE("bipartite constructor rejects data its lookups cannot search") {
    using V = std::vector<std::string>;
    using L = std::vector<std::vector<int>>;
    CHECK_THROWS_AS(BipartiteGraph(V{"s2", "s1"}, V{"c"}, L{{}, {}}),
                    InputError);
    CHECK_THROWS_AS(BipartiteGraph(V{"s", "s"}, V{"c"}, L{{}, {}}), InputError);
    CHECK_THROWS_AS(BipartiteGraph(V{"s"}, V{"c2", "c1"}, L{{}}), InputError);
    CHECK_THROWS_AS(BipartiteGraph(V{"s"}, V{"c"}, L{}), InputError);
    CHECK_THROWS_AS(BipartiteGraph(V{"s"}, V{"c1", "c2"}, L{{1, 0}}),
                    InputError);
    CHECK_THROWS_AS(BipartiteGraph(V{"s"}, V{"c"}, L{{1}}), InputError);
    CHECK_THROWS_AS(BipartiteGraph(V{"s"}, V{"c"}, L{{-1}}), InputError);
}

TEST_CASE("projection matches brute-force pair counting on random graphs") {
    // 200 random bipartite graphs, exact integer agreement
    std::mt19937_64 gen(20240514);
    for (int iter = 0; iter < 200; ++iter) {
        const BipartiteGraph bg = oracles::random_bipartite(gen);
        const CourseGraph g = project_weighted(bg);
        CHECK(oracles::graph_edge_counts(g) == oracles::brute_projection(bg));
    }
}

TEST_CASE("total projected weight equals the handshake sum over students") {
    std::mt19937_64 gen(99);
    for (int iter = 0; iter < 50; ++iter) {
        const BipartiteGraph bg = oracles::random_bipartite(gen);
        double handshake = 0.0;
        for (std::size_t s = 0; s < bg.students().size(); ++s) {
            const double d =
                static_cast<double>(bg.courses_of(static_cast<int>(s)).size());
            handshake += d * (d - 1.0) / 2.0;
        }
        const CourseGraph g = project_weighted(bg);
        CHECK(g.total_weight() == handshake);
    }
}
