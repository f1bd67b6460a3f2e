#pragma once

// Community quality metrics and partition comparison.
//
// A community C in a graph with n nodes and mean edge weight wbar scores
//   wd_inter = w_ext / (wbar * n_C * (n - n_C))
//   wd_intra = w_int / (wbar * n_C * (n_C - 1) / 2)
// and its strength is the ratio wd_inter / wd_intra: 0 means the community
// is disconnected from the rest of the network (the strongest possible
// value), 1 that it is as connected outward as inward.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coursenet/course_graph.hpp"
#include "coursenet/enrollment.hpp"
#include "coursenet/errors.hpp"

namespace coursenet {

struct CommunityScore {
    int community_id = -1;
    int size = 0;                      // n_C
    double external_weight = 0.0;      // edge weight leaving the community
    double internal_weight = 0.0;      // edge weight inside the community
    std::optional<double> wd_inter;    // undefined when n_C == n
    std::optional<double> wd_intra;    // undefined for singletons
    std::optional<double> ratio;       // undefined when wd_intra is 0 or undefined
};

inline CommunityScore community_strength(const CourseGraph& g,
                                         const std::vector<int>& members) {
    if (members.empty()) {
        throw InputError("community_strength: community is empty");
    }
    const double wbar = g.mean_edge_weight();  // throws on edgeless graphs

    std::vector<char> in_community(g.node_count(), 0);
    for (const int v : members) {
        if (v < 0 || v >= g.node_count()) {
            throw InputError("community_strength: member index out of range");
        }
        if (in_community[v]) {
            throw InputError("community_strength: duplicate member");
        }
        in_community[v] = 1;
    }

    CommunityScore score;
    score.size = static_cast<int>(members.size());
    const int n = g.node_count();
    const int n_c = score.size;

    for (const int v : members) {
        for (const auto& [u, w] : g.neighbors(v)) {
            if (in_community[u]) {
                if (u > v) score.internal_weight += w;
            } else {
                score.external_weight += w;
            }
        }
    }

    if (n_c < n) {
        score.wd_inter = score.external_weight /
                         (wbar * static_cast<double>(n_c) *
                          static_cast<double>(n - n_c));
    }
    if (n_c >= 2) {
        score.wd_intra = score.internal_weight /
                         (wbar * static_cast<double>(n_c) *
                          static_cast<double>(n_c - 1) / 2.0);
    }
    if (score.wd_inter && score.wd_intra && *score.wd_intra > 0.0) {
        score.ratio = *score.wd_inter / *score.wd_intra;
    }
    return score;
}

inline CommunityScore community_strength(const CourseGraph& g,
                                         const std::set<std::string>& members) {
    std::vector<int> indices;
    indices.reserve(members.size());
    for (const auto& id : members) {
        const auto v = g.index_of(id);
        if (!v) {
            throw InputError("community_strength: '" + id +
                             "' is not in the graph");
        }
        indices.push_back(*v);
    }
    return community_strength(g, indices);
}

// Mean ratio weighted by community course counts; communities with an
// undefined ratio are excluded.
inline double weighted_average_ratio(const std::vector<CommunityScore>& scores) {
    double weight_sum = 0.0;
    double weighted = 0.0;
    for (const auto& s : scores) {
        if (!s.ratio) continue;
        weighted += static_cast<double>(s.size) * *s.ratio;
        weight_sum += static_cast<double>(s.size);
    }
    if (weight_sum == 0.0) {
        throw ComputeError("weighted_average_ratio: no community has a defined ratio");
    }
    return weighted / weight_sum;
}

// Dice coefficient: 2|a n b| / (|a| + |b|).
inline double dice_similarity(const std::set<std::string>& a,
                              const std::set<std::string>& b) {
    if (a.empty() && b.empty()) {
        throw InputError("dice_similarity: both sets are empty");
    }
    std::size_t common = 0;
    for (const auto& x : a) common += b.count(x);
    return 2.0 * static_cast<double>(common) /
           static_cast<double>(a.size() + b.size());
}

struct CommunityMatch {
    int gt_community = -1;
    int dd_community = -1;
    double dice = 0.0;
};

struct SimilarityReport {
    std::vector<CommunityMatch> per_community_best;
    double overall = 0.0;
};

// For each community of `gt`, the best Dice match among `dd`; overall is the
// mean of the best scores. Asymmetric in its arguments.
inline SimilarityReport clustering_similarity(
    const std::vector<std::set<std::string>>& gt,
    const std::vector<std::set<std::string>>& dd) {
    if (gt.empty() || dd.empty()) {
        throw InputError("clustering_similarity: community list is empty");
    }

    SimilarityReport report;
    double sum = 0.0;
    for (std::size_t i = 0; i < gt.size(); ++i) {
        CommunityMatch best;
        best.gt_community = static_cast<int>(i);
        for (std::size_t j = 0; j < dd.size(); ++j) {
            const double d = dice_similarity(gt[i], dd[j]);
            if (best.dd_community < 0 || d > best.dice) {
                best.dd_community = static_cast<int>(j);
                best.dice = d;
            }
        }
        sum += best.dice;
        report.per_community_best.push_back(best);
    }
    report.overall = sum / static_cast<double>(gt.size());
    return report;
}

// A student belongs to a community when they took at least half of its
// courses; two-course communities require both.
inline std::set<std::string> assign_students(
    const std::set<std::string>& community, const Cohort& cohort) {
    if (community.empty()) {
        throw InputError("assign_students: community is empty");
    }

    std::map<std::string, std::set<std::string>> taken;
    for (const auto& r : cohort.records) {
        if (community.count(r.course_id) > 0) {
            taken[r.student_id].insert(r.course_id);
        }
    }

    const std::size_t needed =
        community.size() == 2 ? 2 : (community.size() + 1) / 2;
    std::set<std::string> members;
    for (const auto& [student, courses] : taken) {
        if (courses.size() >= needed) members.insert(student);
    }
    return members;
}

}  // namespace coursenet
