#pragma once

// Student-course bipartite network and its weighted one-mode projection onto
// courses. Projection weights count the students shared by a course pair.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coursenet/course_graph.hpp"
#include "coursenet/enrollment.hpp"
#include "coursenet/errors.hpp"

namespace coursenet {

class BipartiteGraph {
public:
    // Id vectors must be strictly sorted and each course list strictly
    // increasing; has_edge binary-searches all three.
    BipartiteGraph(std::vector<std::string> students,
                   std::vector<std::string> courses,
                   std::vector<std::vector<int>> student_courses)
        : students_(std::move(students)),
          courses_(std::move(courses)),
          student_courses_(std::move(student_courses)) {
        if (student_courses_.size() != students_.size()) {
            throw InputError("bipartite: one course list per student required");
        }
        if (!strictly_sorted(students_) || !strictly_sorted(courses_)) {
            throw InputError("bipartite: id vectors must be sorted and unique");
        }
        const int nc = static_cast<int>(courses_.size());
        for (const auto& cs : student_courses_) {
            if (!strictly_sorted(cs) ||
                (!cs.empty() && (cs.front() < 0 || cs.back() >= nc))) {
                throw InputError("bipartite: bad course list for a student");
            }
        }
    }

    const std::vector<std::string>& students() const { return students_; }
    const std::vector<std::string>& courses() const { return courses_; }

    // Sorted, de-duplicated course indices for one student.
    const std::vector<int>& courses_of(int student) const {
        return student_courses_.at(student);
    }

    std::size_t edge_count() const {
        std::size_t n = 0;
        for (const auto& cs : student_courses_) n += cs.size();
        return n;
    }

    bool has_edge(const std::string& student, const std::string& course) const {
        const auto s = std::lower_bound(students_.begin(), students_.end(), student);
        if (s == students_.end() || *s != student) return false;
        const auto c = std::lower_bound(courses_.begin(), courses_.end(), course);
        if (c == courses_.end() || *c != course) return false;
        const auto& cs = student_courses_[s - students_.begin()];
        const int ci = static_cast<int>(c - courses_.begin());
        return std::binary_search(cs.begin(), cs.end(), ci);
    }

private:
    template <class T>
    static bool strictly_sorted(const std::vector<T>& v) {
        return std::adjacent_find(v.begin(), v.end(), std::greater_equal<T>()) ==
               v.end();
    }

    std::vector<std::string> students_;
    std::vector<std::string> courses_;
    std::vector<std::vector<int>> student_courses_;
};

// Edge (s, c) exists iff the cohort holds at least one record for s taking c;
// retakes collapse to a single edge. Expects a cleaned cohort.
inline BipartiteGraph build_bipartite(const Cohort& cohort) {
    const auto student_set = cohort.distinct_students();
    const auto course_set = cohort.distinct_courses();
    std::vector<std::string> students(student_set.begin(), student_set.end());
    std::vector<std::string> courses(course_set.begin(), course_set.end());

    std::map<std::string, int> student_index;
    for (std::size_t i = 0; i < students.size(); ++i) {
        student_index.emplace(students[i], static_cast<int>(i));
    }
    std::map<std::string, int> course_index;
    for (std::size_t i = 0; i < courses.size(); ++i) {
        course_index.emplace(courses[i], static_cast<int>(i));
    }

    std::vector<std::set<int>> taken(students.size());
    for (const auto& r : cohort.records) {
        taken[student_index.at(r.student_id)].insert(course_index.at(r.course_id));
    }

    std::vector<std::vector<int>> student_courses(students.size());
    for (std::size_t s = 0; s < taken.size(); ++s) {
        student_courses[s].assign(taken[s].begin(), taken[s].end());
    }
    return BipartiteGraph(std::move(students), std::move(courses),
                          std::move(student_courses));
}

// One-mode projection: weight(a, b) = number of students who took both a and
// b. Courses nobody shares stay in the node set as isolated nodes.
inline CourseGraph project_weighted(const BipartiteGraph& bg) {
    std::map<std::pair<int, int>, long long> counts;
    for (std::size_t s = 0; s < bg.students().size(); ++s) {
        const auto& cs = bg.courses_of(static_cast<int>(s));
        for (std::size_t i = 0; i < cs.size(); ++i) {
            for (std::size_t j = i + 1; j < cs.size(); ++j) {
                ++counts[{cs[i], cs[j]}];
            }
        }
    }

    CourseGraph g(bg.courses());
    for (const auto& [pair, count] : counts) {
        g.add_edge(pair.first, pair.second, static_cast<double>(count));
    }
    return g;
}

}  // namespace coursenet
