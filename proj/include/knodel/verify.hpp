#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knodel/graph.hpp"
#include "knodel/numtheory.hpp"
#include "knodel/vertex_set.hpp"

// Certification of set properties (dominating / perfect / independent /
// efficient) and the lower bounds and necessary conditions for meeting
// ceil(n / (degree + 1)).

namespace knodel::verify {

struct Certificate {
    bool dominating = false;
    bool independent = false;
    bool perfect = false;    // every vertex outside the set has exactly one neighbor in it
    bool efficient = false;  // perfect and independent
    VertexSet undominated;   // every uncovered vertex, exhaustive; empty iff dominating
    i64 even_count = 0;      // parity split of the set itself
    i64 odd_count = 0;
};

// Exhaustive neighborhood scan; O(n * degree).
Certificate certify(const KnodelGraph& g, const VertexSet& d);

// gamma(G) >= ceil(n / (degree + 1)) for any graph with maximum degree `degree`.
i64 berge_lower(i64 n, int degree);

// For k-regular bipartite graphs: write n = q(k+1) + r; when q = 2j is even
// and 4 <= r < k+1 the domination number exceeds 2j+1, so 2j+2 is a valid
// lower bound. Returns nullopt when the premise does not apply.
std::optional<i64> prop2_lower(i64 n, int degree);

// Necessary conditions on a dominating set meeting the bound n/(degree+1)
// exactly: it must be efficient, of even size, and split equally between
// even and odd vertices. Checked only at the tight size (throws otherwise).
struct Prop1Result {
    bool efficient = false;
    bool even_size = false;
    bool equal_split = false;
    bool ok() const { return efficient && even_size && equal_split; }
};
Prop1Result prop1_check(const KnodelGraph& g, const VertexSet& d);

enum class BoundSource { Thm1, Thm2, QuarterN, HalfN };
const char* to_string(BoundSource s);

struct UpperBound {
    i64 value = 0;
    BoundSource source = BoundSource::HalfN;
    std::optional<nt::PrimePowerWitness> witness;
    std::string provenance() const;  // "thm1(p=5)" style
};

struct BoundReport {
    i64 n = 0;
    int degree = 0;
    i64 lower_berge = 0;
    std::optional<i64> lower_prop2;
    std::vector<UpperBound> uppers;  // every admissible bound, plus fallbacks
    std::optional<i64> gamma_exact;

    i64 best_lower() const;
    const UpperBound& best_upper() const;  // min value; ties prefer Thm1, then Thm2
    // max(lower bounds) <= gamma <= min(uppers); true when gamma_exact is absent.
    bool sandwich_ok() const;
};

}  // namespace knodel::verify
