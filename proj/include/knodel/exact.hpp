#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "knodel/graph.hpp"
#include "knodel/vertex_set.hpp"

// Exact domination-number oracle. The branch-and-bound core searches over
// vertex bitmasks, branching on an uncovered vertex with the fewest remaining
// candidate dominators; a plain subset-enumeration fallback validates it on
// small instances. Results are deterministic: identical inputs yield
// identical witness sets.

namespace knodel::exact {

inline constexpr i64 kMaxSolverVertices = 256;
inline constexpr i64 kDefaultBranchBoundCeiling = 128;
inline constexpr i64 kDefaultExhaustiveCeiling = 24;

struct Budget {
    u64 max_nodes = 100'000'000;
    i64 max_millis = 60'000;
    i64 ceiling = 0;  // instance-size ceiling; 0 = the method default
};

enum class Method { Exhaustive, BranchBound };
enum class Status { Solved, Inconclusive };
enum class Answer { Yes, No, Inconclusive };

struct SolveResult {
    Status status = Status::Inconclusive;
    i64 gamma = -1;      // meaningful when status == Solved
    VertexSet witness;   // minimum dominating set when Solved, best incumbent otherwise
    i64 lower_bound = 0; // proven
    i64 upper_bound = 0; // witnessed
    u64 nodes = 0;
    Method method = Method::BranchBound;
    double time_ms = 0.0;
};

struct Decision {
    Answer answer = Answer::Inconclusive;
    std::optional<VertexSet> witness;  // present when answer == Yes
    u64 nodes = 0;
};

// Arbitrary instance; also the entry point for edge-list cross-validation.
struct Instance {
    i64 n = 0;
    std::vector<std::vector<std::int32_t>> closed;  // closed neighborhoods N[v], sorted
    int max_closed = 0;                             // max |N[v]| = max degree + 1
    bool regular_bipartite = false;                 // enables the parity counting bound
    int regular_degree = 0;
    bool knodel_translations = false;  // enables translation symmetry branching

    static Instance from_graph(const KnodelGraph& g);
    static Instance from_edges(i64 n, std::span<const std::pair<i64, i64>> edges);
};

SolveResult exact_gamma(const Instance& inst, const Budget& budget = {},
                        Method method = Method::BranchBound);
SolveResult exact_gamma(const KnodelGraph& g, const Budget& budget = {},
                        Method method = Method::BranchBound);

Decision exists_dominating_of_size(const Instance& inst, i64 s, const Budget& budget = {});
Decision exists_dominating_of_size(const KnodelGraph& g, i64 s, const Budget& budget = {});

// Deterministic iterated max-coverage seed; ties broken by lowest index.
std::vector<i64> greedy_dominating_set(const Instance& inst);

// Exact gamma of the fixed-degree variant checked against the cited
// closed-form ranges: degree 3 -> [2 floor(n/8), 2 floor(n/8) + 2],
// degree 4 -> [2 floor(n/10), 2 floor(n/10) + 4].
struct FixedDegreeCheck {
    Answer verdict = Answer::Inconclusive;  // Yes = gamma inside the cited range
    std::optional<i64> gamma;
    i64 range_lo = 0;
    i64 range_hi = 0;
};
FixedDegreeCheck fixed_degree_gamma_range_check(i64 n, int degree, const Budget& budget = {});

}  // namespace knodel::exact
