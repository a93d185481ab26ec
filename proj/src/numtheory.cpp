#include "knodel/numtheory.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace knodel::nt {

using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128)a * b % m);
}

u64 pow_mod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    // This witness set is deterministic for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!miller_rabin_witness(n, a, d, s)) return false;
    return true;
}

u64 Factorization::value() const {
    u64 v = 1;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

std::string Factorization::to_string() const {
    std::string s;
    for (auto [p, e] : factors) {
        if (!s.empty()) s += " * ";
        s += std::to_string(p);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

Factorization factorize(u64 n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    Factorization f;
    f.n = n;
    u64 m = n;
    auto strip = [&](u64 p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) f.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (u64 p = 5; p * p <= m; p += 6) {
        if (m > 1 && is_prime(m)) break;  // remaining cofactor is prime
        strip(p);
        strip(p + 2);
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

u64 totient(u64 n) {
    if (n == 0) throw std::invalid_argument("totient: n must be >= 1");
    if (n == 1) return 1;  // empty-product convention
    u64 t = 1;
    for (auto [p, e] : factorize(n).factors) {
        u64 pe1 = 1;
        for (int i = 1; i < e; ++i) pe1 *= p;
        t *= pe1 * (p - 1);
    }
    return t;
}

u64 multiplicative_order(u64 a, u64 m) {
    if (m < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
    a %= m;
    if (std::gcd(a, m) != 1)
        throw std::invalid_argument("multiplicative_order: undefined for gcd(a, m) != 1");
    u64 t = totient(m);
    if (t == 1) return 1;  // m == 2
    u64 ord = t;
    for (auto [q, e] : factorize(t).factors) {
        (void)e;
        while (ord % q == 0 && pow_mod(a, ord / q, m) == 1) ord /= q;
    }
    return ord;
}

bool is_primitive_root(u64 a, u64 m) {
    if (m < 2) throw std::invalid_argument("is_primitive_root: modulus must be >= 2");
    a %= m;
    if (std::gcd(a, m) != 1) return false;
    return multiplicative_order(a, m) == totient(m);
}

bool is_wieferich(u64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("is_wieferich: input must be an odd prime");
    if (p > 3037000499ull)  // p^2 must fit in 64 bits
        throw std::invalid_argument("is_wieferich: prime too large for 64-bit p^2");
    return pow_mod(2, p - 1, p * p) == 1;
}

std::vector<u64> primes_below(u64 limit) {
    std::vector<u64> primes;
    if (limit <= 2) return primes;
    std::vector<bool> composite(limit, false);
    for (u64 i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j < limit; j += i) composite[j] = true;
    }
    return primes;
}

double heuristic_sum(u64 limit) {
    if (limit < 3) throw std::invalid_argument("heuristic_sum: limit must be >= 3");
    if (limit > (u64{1} << 31))
        throw std::invalid_argument("heuristic_sum: limit above 2^31 is not supported");
    // Smallest-prime-factor sieve; totient(p-1) read off the factorization of p-1.
    std::vector<std::uint32_t> spf(limit, 0);
    for (u64 i = 2; i < limit; ++i) {
        if (spf[i] != 0) continue;
        for (u64 j = i; j < limit; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    auto phi_of = [&](u64 v) {
        u64 phi = 1;
        while (v > 1) {
            u64 p = spf[v];
            u64 pe = 1;
            while (v % p == 0) {
                v /= p;
                pe *= p;
            }
            phi *= pe - pe / p;
        }
        return phi;
    };
    double sum = 0.0;
    for (u64 p = 2; p < limit; ++p) {
        if (spf[p] != p) continue;  // composite
        u64 phi = (p == 2) ? 1 : phi_of(p - 1);
        sum += static_cast<double>(phi) / (static_cast<double>(p) * static_cast<double>(p - 1));
    }
    return sum;
}

int floor_log2(u64 n) {
    if (n == 0) throw std::invalid_argument("floor_log2: n must be >= 1");
    return std::bit_width(n) - 1;
}

int ceil_log2(u64 n) {
    if (n == 0) throw std::invalid_argument("ceil_log2: n must be >= 1");
    if (n == 1) return 0;
    return std::bit_width(n - 1);
}

}  // namespace knodel::nt
