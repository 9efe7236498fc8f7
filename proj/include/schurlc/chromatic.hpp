#pragma once

#include <functional>
#include <map>

#include "schurlc/graph.hpp"
#include "schurlc/schur2.hpp"

namespace schurlc {

/// Semi-ordered two-block stable partition counts: blocks of the same
/// cardinality are counted in both orders, so counts at (k,k) are even.
/// whole_count is the length-1 count, 1 iff the graph is edgeless.
struct StableTypeCounts {
    std::map<Partition2, long long, Partition2Less> counts;
    long long whole_count = 0;

    long long at(Partition2 p) const;
};

/// Enumerates independent sets whose complement is also independent.
/// TooLarge beyond 25 vertices.
StableTypeCounts stable_two_block_counts(const Graph& g);

/// Two-row Schur content of the chromatic symmetric function, by the stable
/// partition counts: entry (k,l) = a~_(k,l) - a~_(k+1,l-1), with the length-1
/// count standing in for a~_(n,0). Supported on degree n. TooLarge beyond 25.
TwoRowProfile two_row_X(const Graph& g);

/// Same value as two_row_X with no size guard, assembled per connected
/// component from its bipartition (a connected graph has at most one stable
/// 2-partition). Cross-validated exhaustively against two_row_X in tests.
TwoRowProfile two_row_x_fast(const Graph& g);

/// Normalized clan-graph content: two_row_X(G^alpha) / prod_v alpha(v)!.
/// Supported on degree |alpha|. TooLarge when |alpha| > 25.
TwoRowProfile two_row_X_alpha(const Graph& g, const WeightMap& alpha);
TwoRowProfile two_row_x_alpha_fast(const Graph& g, const WeightMap& alpha);

/// Full two-row content of Y_G = sum_alpha X_G^alpha: the F_P profile of the
/// independence polynomial. All entries beyond (degree+1, degree+1) vanish,
/// so no truncation parameter is needed.
TwoRowProfile two_row_Y_fast(const Graph& g);

/// Degree-d slice of Y_G by direct enumeration of all weight maps with
/// |alpha| = d; the independent oracle for two_row_Y_fast.
/// Guards: d <= 12 and at most 10 vertices.
TwoRowProfile two_row_Y_oracle(const Graph& g, long d);

/// Every weight map with the given total, exactly once, first vertex varying
/// slowest from the total down to 0. Guards as in two_row_Y_oracle.
void enumerate_weight_maps(const Graph& g, long total,
                           const std::function<void(const WeightMap&)>& visit);
long long count_weight_maps(int n_vertices, long total);

} // namespace schurlc
