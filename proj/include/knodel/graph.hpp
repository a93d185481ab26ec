#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "knodel/vertex_set.hpp"

namespace knodel {

// Knodel graph KG_n: vertices 0..n-1, an edge {x, y} whenever
// x + y == 2^t - 1 (mod n) for some t in 1..degree. The default degree
// floor(log2 n) gives the standard graph; a smaller degree gives the
// fixed-degree variant. Degrees above floor(log2 n) are accepted only when
// the per-t neighbor maps stay pairwise distinct (construction fails loudly
// on any collision rather than deduplicating).
//
// Immutable after build; all queries are read-only and thread-safe.
class KnodelGraph {
public:
    static constexpr i64 kMinVertices = 6;
    // Adjacency is materialized as bitmask rows up to this size and computed
    // on the fly from the closed form above it; both paths must agree.
    static constexpr i64 kDefaultDenseLimit = 16384;

    static KnodelGraph build(i64 n);  // degree = floor(log2 n)
    static KnodelGraph build(i64 n, int degree, i64 dense_limit = kDefaultDenseLimit);

    i64 vertex_count() const { return n_; }
    int degree() const { return degree_; }
    bool dense() const { return !rows_.empty(); }

    // The neighbor of v contributed by parameter t: (2^t - 1 - v) mod n.
    i64 neighbor_via(i64 v, int t) const;

    std::vector<i64> neighbor_list(i64 v) const;
    VertexSet neighbors(i64 v) const;
    bool adjacent(i64 u, i64 v) const;

    // (evens, odds); every edge crosses the split.
    std::pair<VertexSet, VertexSet> parity_bipartition() const;

    std::vector<std::pair<i64, i64>> edge_list() const;  // u < v, lexicographic

    void write_edge_list(std::ostream& os) const;  // one "u v" per line
    void write_dimacs(std::ostream& os) const;     // DIMACS, 1-based

private:
    i64 n_ = 0;
    int degree_ = 0;
    std::vector<i64> targets_;         // 2^t - 1 mod n for t = 1..degree
    std::vector<i64> sorted_targets_;  // same values, ascending, for adjacency tests
    std::vector<u64> rows_;            // dense adjacency rows; empty when implicit
    size_t row_words_ = 0;

    KnodelGraph() = default;
    void check_vertex(i64 v) const;
};

}  // namespace knodel
