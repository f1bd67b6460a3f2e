#pragma once

// Community assignments over graph node indices. Ids are dense 0..k-1 and
// every community has at least one member.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coursenet/errors.hpp"

namespace coursenet {

struct Partition {
    std::vector<int> labels;  // node index -> community id
    int community_count = 0;

    // Compacts arbitrary labels to dense ids, numbered by first occurrence.
    static Partition from_labels(const std::vector<int>& raw) {
        Partition p;
        p.labels.resize(raw.size());
        std::map<int, int> dense;
        for (std::size_t v = 0; v < raw.size(); ++v) {
            const auto [it, inserted] =
                dense.emplace(raw[v], static_cast<int>(dense.size()));
            p.labels[v] = it->second;
            (void)inserted;
        }
        p.community_count = static_cast<int>(dense.size());
        return p;
    }

    static Partition singletons(int n) {
        Partition p;
        p.labels.resize(n);
        for (int v = 0; v < n; ++v) p.labels[v] = v;
        p.community_count = n;
        return p;
    }

    bool covers(int node_count) const {
        return static_cast<int>(labels.size()) == node_count;
    }

    std::vector<std::vector<int>> groups() const {
        std::vector<std::vector<int>> out(community_count);
        for (std::size_t v = 0; v < labels.size(); ++v) {
            out[labels[v]].push_back(static_cast<int>(v));
        }
        return out;
    }
};

template <typename Graph>
std::map<std::string, int> assignment_map(const Graph& g, const Partition& p) {
    if (!p.covers(g.node_count())) {
        throw InputError("partition does not cover the graph's nodes");
    }
    std::map<std::string, int> out;
    for (int v = 0; v < g.node_count(); ++v) out.emplace(g.node_id(v), p.labels[v]);
    return out;
}

template <typename Graph>
std::vector<std::set<std::string>> community_course_sets(const Graph& g,
                                                         const Partition& p) {
    if (!p.covers(g.node_count())) {
        throw InputError("partition does not cover the graph's nodes");
    }
    std::vector<std::set<std::string>> out(p.community_count);
    for (int v = 0; v < g.node_count(); ++v) {
        out[p.labels[v]].insert(g.node_id(v));
    }
    return out;
}

}  // namespace coursenet
