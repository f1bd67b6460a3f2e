#include <catch2/catch_amalgamated.hpp>

#include "coursenet/semester_network.hpp"
#include "oracles.hpp"

using namespace coursenet;

namespace {

void add(Cohort& c, const std::string& s, const std::string& course, int year,
         Term term) {
    c.records.push_back({s, course, "", year, term, Status::completed_pass,
                         "cs", "d", StudyType::undergraduate});
}

}  // namespace

TEST_CASE("ordinals follow each student's own timeline") {
    Cohort c;
    // s1 starts 2018 spring; s2 starts a year later and skips a semester
    add(c, "s1", "A", 2018, Term::spring);
    add(c, "s1", "B", 2018, Term::fall);
    add(c, "s2", "A", 2019, Term::spring);
    add(c, "s2", "B", 2020, Term::fall);  // calendar gap, ordinal still 2

    const SemesterNetwork net = build_semester_network(c);
    REQUIRE(net.max_ordinal == 2);
    REQUIRE(net.nodes.size() == 2);  // both share ({A} then {B})
    CHECK(net.nodes[0].ordinal == 1);
    CHECK(net.nodes[0].courses == std::vector<std::string>{"A"});
    CHECK(net.nodes[0].student_count == 2);
    CHECK(net.nodes[1].student_count == 2);
    REQUIRE(net.edges.size() == 1);
    CHECK(net.edges[0].weight == 2);
    CHECK(net.student_count == 2);
}

TEST_CASE("terms within a year order spring, summer, fall") {
    Cohort c;
    add(c, "s1", "FALL_COURSE", 2018, Term::fall);
    add(c, "s1", "SPRING_COURSE", 2018, Term::spring);
    add(c, "s1", "SUMMER_COURSE", 2018, Term::summer);

    const SemesterNetwork net = build_semester_network(c);
    REQUIRE(net.nodes.size() == 3);
    CHECK(net.nodes[0].courses == std::vector<std::string>{"SPRING_COURSE"});
    CHECK(net.nodes[1].courses == std::vector<std::string>{"SUMMER_COURSE"});
    CHECK(net.nodes[2].courses == std::vector<std::string>{"FALL_COURSE"});
}

TEST_CASE("course sets compare as sets, not sequences") {
    Cohort c;
    add(c, "s1", "B", 2018, Term::spring);
    add(c, "s1", "A", 2018, Term::spring);
    add(c, "s2", "A", 2018, Term::spring);
    add(c, "s2", "B", 2018, Term::spring);

    const SemesterNetwork net = build_semester_network(c);
    REQUIRE(net.nodes.size() == 1);
    CHECK(net.nodes[0].student_count == 2);
    CHECK(net.nodes[0].courses == std::vector<std::string>{"A", "B"});
}

TEST_CASE("the ordinal cap drops long tails") {
    Cohort c;
    for (int y = 0; y < 8; ++y) {
        add(c, "s1", "C" + std::to_string(y), 2010 + y, Term::spring);
    }
    const SemesterNetwork capped = build_semester_network(c, 3);
    CHECK(capped.max_ordinal == 3);
    CHECK(capped.nodes.size() == 3);

    CHECK_THROWS_AS(build_semester_network(c, 0), InputError);
    CHECK_THROWS_AS(build_semester_network(Cohort{}), InputError);
}

TEST_CASE("typical path picks the heaviest node per ordinal") {
    Cohort c;
    add(c, "s1", "X", 2018, Term::spring);
    add(c, "s2", "X", 2018, Term::spring);
    add(c, "s3", "Y", 2018, Term::spring);
    add(c, "s1", "Z", 2018, Term::fall);

    const SemesterNetwork net = build_semester_network(c);
    const auto path = typical_path(net);
    REQUIRE(path.size() == 2);
    CHECK(path[0].courses == std::vector<std::string>{"X"});
    CHECK(path[0].student_count == 2);
    CHECK(path[1].courses == std::vector<std::string>{"Z"});
}

TEST_CASE("typical path ties break toward the smaller course list") {
    Cohort c;
    add(c, "s1", "B", 2018, Term::spring);
    add(c, "s2", "A", 2018, Term::spring);
    const auto path = typical_path(build_semester_network(c));
    REQUIRE(path.size() == 1);
    CHECK(path[0].courses == std::vector<std::string>{"A"});

    CHECK_THROWS_AS(typical_path(SemesterNetwork{}), InputError);
    CHECK_THROWS_AS(common_semester_share(SemesterNetwork{}), InputError);
}

TEST_CASE("share series reproduces the reference progression counts") {
    const Cohort c = oracles::section_cohort();
    CHECK(c.distinct_students().size() == 328);

    const SemesterNetwork net = build_semester_network(c);
    CHECK(net.student_count == 328);
    const auto shares = common_semester_share(net);
    REQUIRE(shares.size() == 4);

    const int expected_top[] = {174, 155, 26, 11};
    for (int o = 0; o < 4; ++o) {
        CHECK(shares[o].ordinal == o + 1);
        CHECK(shares[o].top_count == expected_top[o]);
        CHECK(shares[o].total_count == 328);
        CHECK(shares[o].share == expected_top[o] / 328.0);
    }

    // the second-to-third semester drop quoted in prose: 47% down to 8%
    CHECK(shares[1].share == Catch::Approx(0.47).margin(0.005));
    CHECK(shares[2].share == Catch::Approx(0.08).margin(0.005));

    const auto path = typical_path(net);
    REQUIRE(path.size() == 4);
    CHECK(path[0].student_count == 174);
    CHECK(path[0].courses ==
          std::vector<std::string>{"CORE1A", "CORE1B"});
}
