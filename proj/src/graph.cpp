#include "knodel/graph.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>

#include "knodel/numtheory.hpp"

namespace knodel {

KnodelGraph KnodelGraph::build(i64 n) {
    if (n < 2) throw std::invalid_argument("KnodelGraph: n must be >= 6");
    return build(n, nt::floor_log2(static_cast<u64>(n)));
}

KnodelGraph KnodelGraph::build(i64 n, int degree, i64 dense_limit) {
    if (n < kMinVertices || n % 2 != 0)
        throw std::invalid_argument("KnodelGraph: n must be even and >= 6, got " + std::to_string(n));
    if (degree < 1)
        throw std::invalid_argument("KnodelGraph: degree must be >= 1");

    KnodelGraph g;
    g.n_ = n;
    g.degree_ = degree;
    g.targets_.reserve(static_cast<size_t>(degree));
    i64 pow2 = 1;
    for (int t = 1; t <= degree; ++t) {
        pow2 = (pow2 * 2) % n;
        g.targets_.push_back(((pow2 - 1) % n + n) % n);
    }
    // For even n every target 2^t - 1 is odd, so self-loops cannot occur; for
    // degree <= floor(log2 n) the targets are automatically distinct. Verify
    // both anyway: a collision would silently drop the graph below the claimed
    // degree, which we treat as an input error.
    g.sorted_targets_ = g.targets_;
    std::sort(g.sorted_targets_.begin(), g.sorted_targets_.end());
    if (std::adjacent_find(g.sorted_targets_.begin(), g.sorted_targets_.end()) !=
        g.sorted_targets_.end())
        throw std::invalid_argument(
            "KnodelGraph: degree " + std::to_string(degree) + " is out of range for n = " +
            std::to_string(n) + " (neighbor maps collide)");
    for (i64 tgt : g.targets_)
        if (tgt % 2 == 0)
            throw std::invalid_argument("KnodelGraph: self-loop target");  // unreachable for even n

    if (n <= dense_limit) {
        g.row_words_ = static_cast<size_t>((n + 63) / 64);
        g.rows_.assign(static_cast<size_t>(n) * g.row_words_, 0);
        for (i64 v = 0; v < n; ++v) {
            u64* row = g.rows_.data() + static_cast<size_t>(v) * g.row_words_;
            for (i64 tgt : g.targets_) {
                i64 u = ((tgt - v) % n + n) % n;
                row[u >> 6] |= u64{1} << (u & 63);
            }
        }
        // Exactly `degree` neighbors per vertex.
        for (i64 v = 0; v < n; ++v) {
            const u64* row = g.rows_.data() + static_cast<size_t>(v) * g.row_words_;
            i64 cnt = 0;
            for (size_t w = 0; w < g.row_words_; ++w) cnt += std::popcount(row[w]);
            if (cnt != degree)
                throw std::logic_error("KnodelGraph: vertex degree mismatch at construction");
        }
    }
    return g;
}

void KnodelGraph::check_vertex(i64 v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("KnodelGraph: vertex " + std::to_string(v) + " out of range");
}

i64 KnodelGraph::neighbor_via(i64 v, int t) const {
    check_vertex(v);
    if (t < 1 || t > degree_) throw std::out_of_range("KnodelGraph: t out of range");
    return ((targets_[static_cast<size_t>(t - 1)] - v) % n_ + n_) % n_;
}

std::vector<i64> KnodelGraph::neighbor_list(i64 v) const {
    check_vertex(v);
    std::vector<i64> out;
    out.reserve(static_cast<size_t>(degree_));
    for (i64 tgt : targets_) out.push_back(((tgt - v) % n_ + n_) % n_);
    return out;
}

VertexSet KnodelGraph::neighbors(i64 v) const {
    check_vertex(v);
    VertexSet s(n_);
    for (i64 tgt : targets_) s.add(((tgt - v) % n_ + n_) % n_);
    return s;
}

bool KnodelGraph::adjacent(i64 u, i64 v) const {
    check_vertex(u);
    check_vertex(v);
    if (dense()) {
        const u64* row = rows_.data() + static_cast<size_t>(u) * row_words_;
        return (row[v >> 6] >> (v & 63)) & 1u;
    }
    i64 sum = (u + v) % n_;
    return std::binary_search(sorted_targets_.begin(), sorted_targets_.end(), sum);
}

std::pair<VertexSet, VertexSet> KnodelGraph::parity_bipartition() const {
    VertexSet evens(n_), odds(n_);
    for (i64 v = 0; v < n_; v += 2) evens.add(v);
    for (i64 v = 1; v < n_; v += 2) odds.add(v);
    return {evens, odds};
}

std::vector<std::pair<i64, i64>> KnodelGraph::edge_list() const {
    std::vector<std::pair<i64, i64>> edges;
    edges.reserve(static_cast<size_t>(n_) * static_cast<size_t>(degree_) / 2);
    for (i64 v = 0; v < n_; ++v)
        for (i64 tgt : targets_) {
            i64 u = ((tgt - v) % n_ + n_) % n_;
            if (v < u) edges.emplace_back(v, u);
        }
    std::sort(edges.begin(), edges.end());
    return edges;
}

void KnodelGraph::write_edge_list(std::ostream& os) const {
    for (auto [u, v] : edge_list()) os << u << ' ' << v << '\n';
}

void KnodelGraph::write_dimacs(std::ostream& os) const {
    auto edges = edge_list();
    os << "c knodel graph n=" << n_ << " degree=" << degree_ << '\n';
    os << "p edge " << n_ << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

}  // namespace knodel
