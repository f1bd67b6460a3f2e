#pragma once

// Two-phase weighted Louvain. Phase 1 sweeps nodes in a seeded-shuffled
// order, greedily moving each to the neighboring community with the largest
// positive modularity gain; phase 2 collapses communities into super-nodes
// (internal weight becomes a self-loop) and the procedure repeats on the
// aggregate. The visit order is the only source of randomness, so a fixed
// seed makes the whole run reproducible.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "coursenet/community_metrics.hpp"
#include "coursenet/course_graph.hpp"
#include "coursenet/errors.hpp"
#include "coursenet/modularity.hpp"
#include "coursenet/partition.hpp"
#include "coursenet/rng.hpp"

namespace coursenet {

struct LouvainConfig {
    std::uint64_t seed = 42;
    double min_modularity_gain = 1e-7;
    int max_passes = 50;  // per aggregation level
    // When set, every accepted move also recomputes the gain from scratch;
    // the pairs land in LouvainResult::move_audit. Test instrumentation.
    bool audit_moves = false;
};

struct MoveAudit {
    double predicted_gain = 0.0;
    double recomputed_gain = 0.0;
};

struct LouvainResult {
    Partition partition;
    std::vector<double> pass_modularity;  // end-of-pass Q, all levels chained
    double final_modularity = 0.0;        // 0 when the graph has no weight
    int levels = 0;
    std::vector<MoveAudit> move_audit;
};

// Collapses each community into a super-node. Inter-community weights are
// summed; internal weight w becomes a self-loop of weight 2w (plus any loops
// the members already carried), so strengths and modularity are conserved.
template <typename Graph>
std::pair<AggregatedGraph, std::vector<int>> aggregate(const Graph& g,
                                                       const Partition& p) {
    if (!p.covers(g.node_count())) {
        throw InputError("aggregate: partition does not cover the graph");
    }

    std::vector<std::string> names;
    names.reserve(p.community_count);
    for (int c = 0; c < p.community_count; ++c) names.push_back(std::to_string(c));
    AggregatedGraph out(std::move(names));

    std::vector<double> loops(p.community_count, 0.0);
    std::map<std::pair<int, int>, double> edges;
    for (int v = 0; v < g.node_count(); ++v) {
        const int cv = p.labels[v];
        loops[cv] += g.self_loop(v);
        for (const auto& [u, w] : g.neighbors(v)) {
            if (u <= v) continue;  // visit each undirected edge once
            const int cu = p.labels[u];
            if (cu == cv) {
                loops[cv] += 2.0 * w;
            } else {
                edges[{std::min(cv, cu), std::max(cv, cu)}] += w;
            }
        }
    }
    for (const auto& [pair, w] : edges) out.add_edge(pair.first, pair.second, w);
    for (int c = 0; c < p.community_count; ++c) {
        if (loops[c] > 0.0) out.add_self_loop(c, loops[c]);
    }
    return {std::move(out), p.labels};
}

namespace detail {

// One aggregation level of local moves. Returns the (raw) labels and whether
// anything moved; appends pass-end modularity values and optional audits.
template <typename Graph>
bool local_move_phase(const Graph& g, const LouvainConfig& cfg,
                      std::mt19937_64& gen, std::vector<int>& labels,
                      std::vector<double>& pass_modularity,
                      std::vector<MoveAudit>* audit) {
    const int n = g.node_count();
    labels.resize(n);
    for (int v = 0; v < n; ++v) labels[v] = v;

    double m2 = 0.0;
    std::vector<double> strength(n);
    for (int v = 0; v < n; ++v) {
        strength[v] = g.strength(v);
        m2 += strength[v];
    }
    if (!(m2 > 0.0)) return false;  // edgeless level: nothing can move

    std::vector<double> community_total = strength;  // one node per community

    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;

    bool any_move = false;
    for (int pass = 0; pass < cfg.max_passes; ++pass) {
        shuffle_deterministic(order, gen);
        int moves = 0;
        for (const int v : order) {
            const int current = labels[v];

            // Weight from v to each adjacent community (self-loop excluded).
            std::map<int, double> link;
            for (const auto& [u, w] : g.neighbors(v)) {
                if (u != v) link[labels[u]] += w;
            }

            community_total[current] -= strength[v];

            auto score = [&](int c) {
                const auto it = link.find(c);
                const double to_c = it == link.end() ? 0.0 : it->second;
                return to_c - community_total[c] * strength[v] / m2;
            };

            const double stay_score = score(current);
            int best = current;
            double best_score = stay_score;
            for (const auto& [c, unused] : link) {
                (void)unused;
                if (c == current) continue;
                const double s = score(c);
                if (s > best_score) {  // ties keep the earlier (lower) id
                    best = c;
                    best_score = s;
                }
            }

            const double gain = 2.0 * (best_score - stay_score) / m2;
            if (best != current && gain > cfg.min_modularity_gain) {
                if (audit) {
                    const double q_before =
                        modularity(g, Partition::from_labels(labels));
                    labels[v] = best;
                    const double q_after =
                        modularity(g, Partition::from_labels(labels));
                    audit->push_back({gain, q_after - q_before});
                } else {
                    labels[v] = best;
                }
                community_total[best] += strength[v];
                ++moves;
                any_move = true;
            } else {
                community_total[current] += strength[v];
            }
        }
        pass_modularity.push_back(modularity(g, Partition::from_labels(labels)));
        if (moves == 0) break;
    }
    return any_move;
}

}  // namespace detail

template <typename Graph>
LouvainResult louvain_partition(const Graph& g, const LouvainConfig& cfg = {}) {
    if (g.node_count() == 0) {
        throw InputError("louvain_partition: graph is empty");
    }
    if (cfg.min_modularity_gain < 0.0) {
        throw InputError("louvain_partition: min_modularity_gain must be >= 0");
    }
    if (cfg.max_passes < 1) {
        throw InputError("louvain_partition: max_passes must be >= 1");
    }

    LouvainResult result;
    std::mt19937_64 gen(cfg.seed);

    // assignment[v] = community of original node v in the current level graph
    std::vector<int> assignment(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) assignment[v] = v;

    std::vector<int> labels;
    const bool moved0 = detail::local_move_phase(
        g, cfg, gen, labels, result.pass_modularity,
        cfg.audit_moves ? &result.move_audit : nullptr);
    Partition level = Partition::from_labels(labels);
    for (auto& a : assignment) a = level.labels[a];
    result.levels = 1;

    if (moved0) {
        AggregatedGraph current = aggregate(g, level).first;
        while (current.node_count() > 1) {
            const bool moved = detail::local_move_phase(
                current, cfg, gen, labels, result.pass_modularity,
                cfg.audit_moves ? &result.move_audit : nullptr);
            if (!moved) break;
            level = Partition::from_labels(labels);
            for (auto& a : assignment) a = level.labels[a];
            ++result.levels;
            AggregatedGraph next = aggregate(current, level).first;
            if (next.node_count() == current.node_count()) break;
            current = std::move(next);
        }
    }

    result.partition = Partition::from_labels(assignment);
    if (!result.pass_modularity.empty()) {
        result.final_modularity = modularity(g, result.partition);
    }
    return result;
}

// Re-runs Louvain inside each community and accepts the split only when every
// resulting sub-community, scored against the full graph, has a defined
// inter/intra density ratio no worse than `guard` and no worse than its
// parent's. `depth` bounds how many times an accepted split is refined again.
inline Partition refine_communities(const CourseGraph& g, const Partition& p,
                                    double guard,
                                    const LouvainConfig& cfg = {},
                                    int depth = 1) {
    if (guard < 0.0) {
        throw InputError("refine_communities: guard must be >= 0");
    }
    if (!p.covers(g.node_count())) {
        throw InputError("refine_communities: partition does not cover the graph");
    }
    if (depth < 1) return p;

    std::vector<int> refined(g.node_count(), -1);
    int next_id = 0;

    for (const auto& members : p.groups()) {
        auto keep_parent = [&] {
            for (const int v : members) refined[v] = next_id;
            ++next_id;
        };
        if (members.size() < 2) {
            keep_parent();
            continue;
        }

        // Induced subgraph on the community.
        std::vector<std::string> ids;
        ids.reserve(members.size());
        for (const int v : members) ids.push_back(g.node_id(v));
        CourseGraph sub(ids);
        std::vector<int> local(g.node_count(), -1);
        for (std::size_t i = 0; i < members.size(); ++i) {
            local[members[i]] = static_cast<int>(i);
        }
        for (const int v : members) {
            for (const auto& [u, w] : g.neighbors(v)) {
                if (u > v && local[u] >= 0) sub.add_edge(local[v], local[u], w);
            }
        }

        const auto sub_result = louvain_partition(sub, cfg);
        const Partition& split = sub_result.partition;
        if (split.community_count <= 1) {
            keep_parent();
            continue;
        }

        const auto parent_score = community_strength(g, members);

        bool accept = true;
        std::vector<std::vector<int>> children(split.community_count);
        for (std::size_t i = 0; i < members.size(); ++i) {
            children[split.labels[i]].push_back(members[i]);
        }
        for (const auto& child : children) {
            const auto child_score = community_strength(g, child);
            if (!child_score.ratio || *child_score.ratio > guard ||
                (parent_score.ratio && *child_score.ratio > *parent_score.ratio)) {
                accept = false;
                break;
            }
        }

        if (!accept) {
            keep_parent();
            continue;
        }
        for (const auto& child : children) {
            for (const int v : child) refined[v] = next_id;
            ++next_id;
        }
    }

    Partition out = Partition::from_labels(refined);
    if (depth > 1 && out.community_count > p.community_count) {
        return refine_communities(g, out, guard, cfg, depth - 1);
    }
    return out;
}

}  // namespace coursenet
