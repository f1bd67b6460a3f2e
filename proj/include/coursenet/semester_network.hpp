#pragma once

// Directed semester-progression network. Each node is a (semester ordinal,
// exact course set) pair; the ordinal is the semester's 1-based position in
// that student's own timeline, not a calendar date, so cohorts that start in
// different years still line up. Edges connect a student's consecutive
// semesters.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coursenet/enrollment.hpp"
#include "coursenet/errors.hpp"

namespace coursenet {

struct SemesterNode {
    int ordinal = 0;
    std::vector<std::string> courses;  // sorted, unique
    int student_count = 0;
};

struct SemesterEdge {
    int from = 0;  // node indices
    int to = 0;
    int weight = 0;  // students making this transition
};

struct SemesterNetwork {
    std::vector<SemesterNode> nodes;  // sorted by (ordinal, courses)
    std::vector<SemesterEdge> edges;  // sorted by (from, to)
    int max_ordinal = 0;
    int student_count = 0;
};

// Semesters past `ordinal_cap` in a student's timeline are dropped: long
// tails (part-time students, re-enrollment) otherwise produce a sparse fringe
// of single-student nodes.
inline SemesterNetwork build_semester_network(const Cohort& cohort,
                                              int ordinal_cap = 10) {
    if (ordinal_cap < 1) {
        throw InputError("build_semester_network: ordinal_cap must be >= 1");
    }
    if (cohort.records.empty()) {
        throw InputError("build_semester_network: cohort has no enrollments");
    }

    // student -> semester -> course set, both levels chronologically ordered
    std::map<std::string, std::map<std::pair<int, int>, std::set<std::string>>>
        timelines;
    for (const auto& r : cohort.records) {
        timelines[r.student_id][semester_key(r.year, r.term)].insert(r.course_id);
    }

    using NodeKey = std::pair<int, std::vector<std::string>>;
    std::map<NodeKey, int> node_students;
    std::map<std::pair<NodeKey, NodeKey>, int> transition_students;

    for (const auto& [student, semesters] : timelines) {
        (void)student;
        NodeKey previous;
        int ordinal = 0;
        for (const auto& [sem, courses] : semesters) {
            (void)sem;
            if (++ordinal > ordinal_cap) break;
            NodeKey key{ordinal,
                        std::vector<std::string>(courses.begin(), courses.end())};
            ++node_students[key];
            if (ordinal > 1) ++transition_students[{previous, key}];
            previous = std::move(key);
        }
    }

    SemesterNetwork net;
    net.student_count = static_cast<int>(timelines.size());
    std::map<NodeKey, int> index;
    for (const auto& [key, count] : node_students) {
        index[key] = static_cast<int>(net.nodes.size());
        net.nodes.push_back({key.first, key.second, count});
        net.max_ordinal = std::max(net.max_ordinal, key.first);
    }
    for (const auto& [pair, count] : transition_students) {
        net.edges.push_back({index.at(pair.first), index.at(pair.second), count});
    }
    std::sort(net.edges.begin(), net.edges.end(),
              [](const SemesterEdge& a, const SemesterEdge& b) {
                  return std::tie(a.from, a.to) < std::tie(b.from, b.to);
              });
    return net;
}

struct TypicalSemester {
    int ordinal = 0;
    std::vector<std::string> courses;
    int student_count = 0;
};

// Most common course set per ordinal. Nodes are sorted by (ordinal, courses),
// so keeping the first maximum resolves count ties toward the
// lexicographically smallest course list.
inline std::vector<TypicalSemester> typical_path(const SemesterNetwork& net) {
    if (net.nodes.empty()) {
        throw InputError("typical_path: semester network is empty");
    }
    std::vector<TypicalSemester> path;
    for (const auto& node : net.nodes) {
        if (path.empty() || path.back().ordinal != node.ordinal) {
            path.push_back({node.ordinal, node.courses, node.student_count});
        } else if (node.student_count > path.back().student_count) {
            path.back() = {node.ordinal, node.courses, node.student_count};
        }
    }
    return path;
}

struct SemesterShare {
    int ordinal = 0;
    int top_count = 0;    // students on the most common course set
    int total_count = 0;  // students with this many semesters or more
    double share = 0.0;
};

// Fraction of active students sharing the single most common course set,
// per ordinal. The denominator shrinks with the ordinal as timelines end.
inline std::vector<SemesterShare> common_semester_share(
    const SemesterNetwork& net) {
    if (net.nodes.empty()) {
        throw InputError("common_semester_share: semester network is empty");
    }
    std::vector<SemesterShare> shares;
    for (const auto& node : net.nodes) {
        if (shares.empty() || shares.back().ordinal != node.ordinal) {
            shares.push_back({node.ordinal, node.student_count,
                              node.student_count, 0.0});
        } else {
            auto& s = shares.back();
            s.top_count = std::max(s.top_count, node.student_count);
            s.total_count += node.student_count;
        }
    }
    for (auto& s : shares) {
        s.share = static_cast<double>(s.top_count) / s.total_count;
    }
    return shares;
}

}  // namespace coursenet
