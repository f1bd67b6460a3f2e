#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "coursenet/course_graph.hpp"

using namespace coursenet;

TEST_CASE("graph construction and edge accumulation") {
    CourseGraph g({"a", "b", "c"});
    CHECK(g.node_count() == 3);
    g.add_edge(0, 1, 2.0);
    g.add_edge(1, 0, 1.0);  // same undirected edge, accumulates
    g.add_edge(1, 2, 4.0);
    CHECK(g.edge_weight(0, 1) == 3.0);
    CHECK(g.edge_weight(1, 0) == 3.0);
    CHECK(g.edge_count() == 2);
    CHECK(g.total_weight() == 7.0);
    CHECK(g.strength(0) == 3.0);
    CHECK(g.strength(1) == 7.0);
    CHECK(g.strength("c") == 4.0);
    CHECK(g.mean_edge_weight() == 3.5);
    CHECK(g.self_loop(1) == 0.0);
}

TEST_CASE("construction rejects duplicates, bad edges, bad weights") {
    CHECK_THROWS_AS(CourseGraph({"a", "a"}), InputError);
    CourseGraph g({"a", "b"});
    CHECK_THROWS_AS(g.add_edge(0, 0, 1.0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 5, 1.0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 1, 0.0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 1, -1.0), InputError);
    CHECK_THROWS_AS(g.strength("zz"), InputError);
    CHECK_THROWS_AS(g.mean_edge_weight(), ComputeError);
}

TEST_CASE("aggregated graph counts self-loops once toward strength") {
    AggregatedGraph g({"0", "1"});
    g.add_edge(0, 1, 3.0);
    g.add_self_loop(0, 8.0);  // stands for internal weight 4
    CHECK(g.self_loop(0) == 8.0);
    CHECK(g.self_loop(1) == 0.0);
    CHECK(g.strength(0) == 11.0);
    CHECK(g.strength(1) == 3.0);
    CHECK(g.total_weight() == 7.0);  // 3 + 8/2
    CHECK_THROWS_AS(g.add_self_loop(0, -1.0), InputError);
}

TEST_CASE("hub threshold is mean plus one population stddev, inclusive") {
    SECTION("one clear outlier") {
        // mean 4, stddev sqrt(12) = 3.46..; only 10 >= 7.46
        const auto hubs = hub_indices_from_strengths({10, 2, 2, 2});
        REQUIRE(hubs.size() == 1);
        CHECK(hubs[0] == 0);
    }
    SECTION("no node reaches the cutoff") {
        // mean 4, stddev sqrt(3) = 1.73..; max strength 5 < 5.73
        CHECK(hub_indices_from_strengths({5, 5, 5, 1}).empty());
    }
    SECTION("exactly mean + stddev is a hub") {
        // {3, 1, 3, 1}: mean 2, population sd 1, cutoff 3 with no rounding;
        // the two nodes sitting exactly on the cutoff count as hubs
        const std::vector<double> exact = {3, 1, 3, 1};
        CHECK(hub_threshold(exact) == 3.0);
        CHECK(hub_indices_from_strengths(exact) == std::vector<int>{0, 2});
    }
    SECTION("all-equal strengths make every node a hub") {
        CHECK(hub_indices_from_strengths({2, 2, 2}).size() == 3);
    }
    SECTION("fewer than two nodes is an error") {
        CHECK_THROWS_AS(hub_threshold({1.0}), InputError);
    }
}

TEST_CASE("detect_hubs_dd works on graph strengths") {
    // star: center strength 3, leaves 1; mean 1.5, sd sqrt(0.75)
    CourseGraph g({"center", "l1", "l2", "l3"});
    g.add_edge(0, 1, 1.0);
    g.add_edge(0, 2, 1.0);
    g.add_edge(0, 3, 1.0);
    CHECK(detect_hubs_dd(g) == std::set<std::string>{"center"});
}

TEST_CASE("remove_nodes drops hubs and preserves remaining weights") {
    CourseGraph g({"a", "b", "c", "d"});
    g.add_edge(0, 1, 4.0);
    g.add_edge(1, 2, 2.0);
    g.add_edge(2, 3, 5.0);

    std::vector<std::string> missing;
    const CourseGraph filtered =
        remove_nodes(g, {"b", "ghost"}, &missing);
    CHECK(missing == std::vector<std::string>{"ghost"});
    CHECK(filtered.node_count() == 3);
    CHECK(filtered.node_ids() == std::vector<std::string>{"a", "c", "d"});
    CHECK(filtered.edge_weight(*filtered.index_of("c"),
                               *filtered.index_of("d")) == 5.0);
    CHECK(filtered.strength("a") == 0.0);  // lost its only edge
}

TEST_CASE("mandatory list parsing skips comments and duplicates") {
    std::istringstream in(
        "# required courses\n"
        "MATH1\n"
        "  CS101  \n"
        "MATH1\n"
        "\n"
        "PHYS2 # taken by everyone\n");
    const auto ids = read_mandatory_list(in);
    CHECK(ids == std::vector<std::string>{"MATH1", "CS101", "PHYS2"});
}
