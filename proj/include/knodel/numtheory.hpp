#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

// Elementary number theory: totients, multiplicative orders, primitive-root
// and Wieferich predicates, factorization by trial division. Inputs are
// bounded by 2^63; everything here is exact integer arithmetic with 128-bit
// intermediates where products can overflow.

namespace knodel::nt {

using u64 = std::uint64_t;

struct Factorization {
    u64 n = 0;
    std::vector<std::pair<u64, int>> factors;  // (prime, exponent), primes strictly increasing

    u64 value() const;  // product of prime^exponent, == n
    std::string to_string() const;  // "2^3 * 3^2" style
};

// Prime power p^e together with the facts about 2 mod p^e that license the
// dominating-set constructions.
struct PrimePowerWitness {
    u64 prime = 0;
    int exponent = 0;
    u64 value = 0;         // prime^exponent
    u64 order_of_two = 0;  // multiplicative order of 2 mod value
    bool is_primitive = false;  // order_of_two == totient(value)
};

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 e, u64 m);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(u64 n);

Factorization factorize(u64 n);  // n >= 2

u64 totient(u64 n);  // n >= 1; totient(1) == 1

// Least k >= 1 with a^k == 1 (mod m); requires m >= 2 and gcd(a, m) == 1.
// Computed by descending through divisors of totient(m).
u64 multiplicative_order(u64 a, u64 m);

// True iff gcd(a, m) == 1 and the order of a mod m equals totient(m).
// Non-coprime a yields false, not an error.
bool is_primitive_root(u64 a, u64 m);  // m >= 2

// True iff p^2 divides 2^(p-1) - 1; rejects even or composite input.
bool is_wieferich(u64 p);

// Sum over primes p < limit of totient(p-1) / (p * (p-1)).
double heuristic_sum(u64 limit);  // limit >= 3

std::vector<u64> primes_below(u64 limit);

int floor_log2(u64 n);  // n >= 1
int ceil_log2(u64 n);   // n >= 1

}  // namespace knodel::nt
