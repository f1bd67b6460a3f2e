#pragma once

// Weighted undirected course graph plus the strength-based hub machinery.
// AggregatedGraph adds self-loops produced by community aggregation; a loop
// stores twice the internal weight it replaced so node strengths are
// conserved across aggregation levels.

#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coursenet/errors.hpp"

namespace coursenet {

class CourseGraph {
public:
    CourseGraph() = default;

    explicit CourseGraph(std::vector<std::string> node_ids)
        : ids_(std::move(node_ids)), adj_(ids_.size()) {
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            if (!index_.emplace(ids_[i], static_cast<int>(i)).second) {
                throw InputError("duplicate node id '" + ids_[i] + "'");
            }
        }
    }

    int node_count() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& node_ids() const { return ids_; }

    const std::string& node_id(int v) const { return ids_.at(v); }

    std::optional<int> index_of(const std::string& id) const {
        const auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool has_node(const std::string& id) const { return index_.count(id) > 0; }

    // Accumulates weight onto the undirected edge {a, b}.
    void add_edge(int a, int b, double w) {
        if (a == b) throw InputError("self-loops are not allowed here");
        if (a < 0 || b < 0 || a >= node_count() || b >= node_count()) {
            throw InputError("edge endpoint out of range");
        }
        if (!(w > 0.0)) throw InputError("edge weight must be positive");
        adj_[a][b] += w;
        adj_[b][a] += w;
    }

    const std::map<int, double>& neighbors(int v) const { return adj_.at(v); }

    double edge_weight(int a, int b) const {
        const auto& nbrs = adj_.at(a);
        const auto it = nbrs.find(b);
        return it == nbrs.end() ? 0.0 : it->second;
    }

    double self_loop(int) const { return 0.0; }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& nbrs : adj_) twice += nbrs.size();
        return twice / 2;
    }

    double total_weight() const {
        double twice = 0.0;
        for (const auto& nbrs : adj_) {
            for (const auto& [u, w] : nbrs) twice += w;
        }
        return twice / 2.0;
    }

    double strength(int v) const {
        double s = 0.0;
        for (const auto& [u, w] : adj_.at(v)) s += w;
        return s;
    }

    double strength(const std::string& id) const {
        const auto v = index_of(id);
        if (!v) throw InputError("node '" + id + "' is not in the graph");
        return strength(*v);
    }

    // Mean weight over existing edges only.
    double mean_edge_weight() const {
        const std::size_t edges = edge_count();
        if (edges == 0) {
            throw ComputeError("mean edge weight undefined: graph has no edges");
        }
        return total_weight() / static_cast<double>(edges);
    }

private:
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<std::map<int, double>> adj_;
};

class AggregatedGraph : public CourseGraph {
public:
    AggregatedGraph() = default;

    explicit AggregatedGraph(std::vector<std::string> node_ids)
        : CourseGraph(std::move(node_ids)),
          loops_(static_cast<std::size_t>(node_count()), 0.0) {}

    void add_self_loop(int v, double w) {
        if (w < 0.0) throw InputError("self-loop weight must be nonnegative");
        loops_.at(v) += w;
    }

    double self_loop(int v) const { return loops_.at(v); }

    // Loops count once toward strength at their stored (doubled) value.
    double strength(int v) const {
        return CourseGraph::strength(v) + loops_.at(v);
    }

    double total_weight() const {
        double loops = 0.0;
        for (const double l : loops_) loops += l;
        return CourseGraph::total_weight() + loops / 2.0;
    }

private:
    std::vector<double> loops_;
};

inline std::vector<double> node_strengths(const CourseGraph& g) {
    std::vector<double> out;
    out.reserve(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) out.push_back(g.strength(v));
    return out;
}

// Hub cutoff: mean strength plus one population standard deviation, over all
// nodes including isolated ones.
inline double hub_threshold(const std::vector<double>& strengths) {
    if (strengths.size() < 2) {
        throw InputError("hub detection needs at least 2 nodes");
    }
    double mean = 0.0;
    for (const double s : strengths) mean += s;
    mean /= static_cast<double>(strengths.size());
    double var = 0.0;
    for (const double s : strengths) var += (s - mean) * (s - mean);
    var /= static_cast<double>(strengths.size());
    return mean + std::sqrt(var);
}

// Indices whose strength is at least the hub threshold. The inequality is
// inclusive, so when all strengths are equal (stddev 0) every node is a hub.
inline std::vector<int> hub_indices_from_strengths(
    const std::vector<double>& strengths) {
    const double cutoff = hub_threshold(strengths);
    std::vector<int> out;
    for (std::size_t v = 0; v < strengths.size(); ++v) {
        if (strengths[v] >= cutoff) out.push_back(static_cast<int>(v));
    }
    return out;
}

// Data-driven hub definition over node strengths.
inline std::set<std::string> detect_hubs_dd(const CourseGraph& g) {
    const auto hubs = hub_indices_from_strengths(node_strengths(g));
    std::set<std::string> out;
    for (const int v : hubs) out.insert(g.node_id(v));
    return out;
}

// Drops the listed nodes and every edge touching them; surviving edge
// weights are untouched. Ids absent from the graph are collected into
// `missing` (when given) rather than treated as errors, since mandatory
// course lists may name courses already removed by cleaning.
inline CourseGraph remove_nodes(const CourseGraph& g,
                                const std::set<std::string>& ids,
                                std::vector<std::string>* missing = nullptr) {
    if (missing) {
        for (const auto& id : ids) {
            if (!g.has_node(id)) missing->push_back(id);
        }
    }

    std::vector<std::string> kept_ids;
    std::vector<int> new_index(g.node_count(), -1);
    for (int v = 0; v < g.node_count(); ++v) {
        if (ids.count(g.node_id(v)) == 0) {
            new_index[v] = static_cast<int>(kept_ids.size());
            kept_ids.push_back(g.node_id(v));
        }
    }

    CourseGraph out(std::move(kept_ids));
    for (int v = 0; v < g.node_count(); ++v) {
        if (new_index[v] < 0) continue;
        for (const auto& [u, w] : g.neighbors(v)) {
            if (u > v && new_index[u] >= 0) {
                out.add_edge(new_index[v], new_index[u], w);
            }
        }
    }
    return out;
}

// Mandatory-course list: one course id per line, '#' starts a comment.
inline std::vector<std::string> read_mandatory_list(std::istream& in) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        const std::string id = line.substr(begin, end - begin + 1);
        if (seen.insert(id).second) out.push_back(id);
    }
    return out;
}

}  // namespace coursenet
