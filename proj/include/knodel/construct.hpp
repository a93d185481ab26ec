#pragma once

#include <cstdint>
#include <vector>

#include "knodel/numtheory.hpp"
#include "knodel/verify.hpp"
#include "knodel/vertex_set.hpp"

// Explicit dominating sets from validated prime-power witnesses:
//   theorem 1:  D = {2pl | 0 <= l <= n/2p - 1} u {2pl - 1 | 1 <= l <= n/2p},  |D| = n/p
//   theorem 2:  D = {lp^k | 0 <= l <= n/p^k - 1} u {lp^k - 1 | 1 <= l <= n/p^k},  |D| = 2n/p^k

namespace knodel::construct {

enum class TheoremTag { Thm1, Thm2 };
const char* to_string(TheoremTag t);

enum class WitnessError {
    None,
    NotDivisible,      // p (or p^k) does not divide n
    PrimeTooLarge,     // thm1: p > ceil(log2 n)
    TotientTooLarge,   // thm2: totient(p^k) >= ceil(log2 n)
    NotPrimitiveRoot,  // 2 is not a primitive root mod p (or p^k)
};
const char* to_string(WitnessError e);

struct WitnessResult {
    nt::PrimePowerWitness witness{};
    WitnessError error = WitnessError::None;
    bool ok() const { return error == WitnessError::None; }
};

// Both checks require even n >= 6 and an odd prime p (throw otherwise);
// clause failures come back as distinct error codes, not exceptions.
WitnessResult check_thm1_preconditions(i64 n, u64 p);
WitnessResult check_thm2_preconditions(i64 n, u64 p, int k);  // k >= 2

struct ConstructionResult {
    VertexSet set;
    nt::PrimePowerWitness witness{};
    i64 claimed_size = 0;
    TheoremTag tag = TheoremTag::Thm1;
};

// Throw std::invalid_argument unless the witness is valid for the theorem at this n.
ConstructionResult construct_thm1(i64 n, const nt::PrimePowerWitness& w);
ConstructionResult construct_thm2(i64 n, const nt::PrimePowerWitness& w);

// All qualifying witnesses, ascending by p (and k).
std::vector<nt::PrimePowerWitness> thm1_witnesses(i64 n);
std::vector<nt::PrimePowerWitness> thm2_witnesses(i64 n);

// Every admissible theorem bound with provenance, plus the fallbacks: the
// cited literature bound floor(n/4) (recorded from n >= 32; the exact solver
// refutes it at n = 6, 10, 12, 14, 22, 26) and the unconditional
// bipartition-half bound n/2. The best upper bound is
// min{2n/p_h^e_h, n/p_l} whenever a theorem witness exists.
verify::BoundReport best_bound(i64 n);

}  // namespace knodel::construct
