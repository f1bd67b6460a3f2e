#pragma once

// Weighted Newman modularity:
//   Q = sum_c [ in_c / 2m - (tot_c / 2m)^2 ]
// where in_c doubles internal edge weight, tot_c sums member strengths and
// 2m is the total strength. Self-loops (present on aggregated graphs) enter
// in_c and strength once at their stored value, which keeps Q invariant
// under community aggregation.

#include <vector>

#include "coursenet/errors.hpp"
#include "coursenet/partition.hpp"

namespace coursenet {

template <typename Graph>
double modularity(const Graph& g, const Partition& p) {
    if (!p.covers(g.node_count())) {
        throw InputError("modularity: partition does not cover the graph");
    }

    double m2 = 0.0;
    for (int v = 0; v < g.node_count(); ++v) m2 += g.strength(v);
    if (!(m2 > 0.0)) {
        throw ComputeError("modularity undefined: graph has zero total weight");
    }

    std::vector<double> in(p.community_count, 0.0);
    std::vector<double> tot(p.community_count, 0.0);
    for (int v = 0; v < g.node_count(); ++v) {
        const int c = p.labels[v];
        tot[c] += g.strength(v);
        in[c] += g.self_loop(v);
        for (const auto& [u, w] : g.neighbors(v)) {
            if (p.labels[u] == c) in[c] += w;
        }
    }

    double q = 0.0;
    for (int c = 0; c < p.community_count; ++c) {
        q += in[c] / m2 - (tot[c] / m2) * (tot[c] / m2);
    }
    return q;
}

}  // namespace coursenet
