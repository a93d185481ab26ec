#include "knodel/construct.hpp"

#include <stdexcept>
#include <string>

namespace knodel::construct {

namespace {

void require_even_n(i64 n) {
    if (n < 6 || n % 2 != 0)
        throw std::invalid_argument("expected even n >= 6, got " + std::to_string(n));
}

void require_odd_prime(u64 p) {
    if (p < 3 || p % 2 == 0 || !nt::is_prime(p))
        throw std::invalid_argument("expected an odd prime, got " + std::to_string(p));
}

nt::PrimePowerWitness make_witness(u64 p, int k) {
    nt::PrimePowerWitness w;
    w.prime = p;
    w.exponent = k;
    w.value = 1;
    for (int i = 0; i < k; ++i) w.value *= p;
    w.order_of_two = nt::multiplicative_order(2, w.value);
    w.is_primitive = w.order_of_two == nt::totient(w.value);
    return w;
}

}  // namespace

const char* to_string(TheoremTag t) {
    return t == TheoremTag::Thm1 ? "thm1" : "thm2";
}

const char* to_string(WitnessError e) {
    switch (e) {
        case WitnessError::None: return "ok";
        case WitnessError::NotDivisible: return "prime power does not divide n";
        case WitnessError::PrimeTooLarge: return "p exceeds ceil(log2 n)";
        case WitnessError::TotientTooLarge: return "totient(p^k) is not below ceil(log2 n)";
        case WitnessError::NotPrimitiveRoot: return "2 is not a primitive root";
    }
    return "?";
}

WitnessResult check_thm1_preconditions(i64 n, u64 p) {
    require_even_n(n);
    require_odd_prime(p);
    WitnessResult r;
    r.witness = make_witness(p, 1);
    if (static_cast<u64>(n) % p != 0)
        r.error = WitnessError::NotDivisible;
    else if (p > static_cast<u64>(nt::ceil_log2(static_cast<u64>(n))))
        r.error = WitnessError::PrimeTooLarge;
    else if (!r.witness.is_primitive)
        r.error = WitnessError::NotPrimitiveRoot;
    return r;
}

WitnessResult check_thm2_preconditions(i64 n, u64 p, int k) {
    require_even_n(n);
    require_odd_prime(p);
    if (k < 2) throw std::invalid_argument("check_thm2_preconditions: k must be >= 2");
    WitnessResult r;
    r.witness = make_witness(p, k);
    if (static_cast<u64>(n) % r.witness.value != 0)
        r.error = WitnessError::NotDivisible;
    else if (nt::totient(r.witness.value) >= static_cast<u64>(nt::ceil_log2(static_cast<u64>(n))))
        r.error = WitnessError::TotientTooLarge;
    else if (!r.witness.is_primitive)
        r.error = WitnessError::NotPrimitiveRoot;
    return r;
}

ConstructionResult construct_thm1(i64 n, const nt::PrimePowerWitness& w) {
    if (w.exponent != 1)
        throw std::invalid_argument("construct_thm1: witness must have exponent 1");
    WitnessResult check = check_thm1_preconditions(n, w.prime);
    if (!check.ok())
        throw std::invalid_argument(std::string("construct_thm1: invalid witness: ") +
                                    to_string(check.error));
    const i64 p = static_cast<i64>(w.prime);
    const i64 blocks = n / (2 * p);
    ConstructionResult res;
    res.set = VertexSet(n);
    for (i64 l = 0; l < blocks; ++l) res.set.add(2 * p * l);            // even family
    for (i64 l = 1; l <= blocks; ++l) res.set.add(2 * p * l - 1);       // odd family
    res.witness = check.witness;
    res.claimed_size = n / p;
    res.tag = TheoremTag::Thm1;
    if (res.set.size() != res.claimed_size)
        throw std::logic_error("construct_thm1: size mismatch");
    return res;
}

ConstructionResult construct_thm2(i64 n, const nt::PrimePowerWitness& w) {
    if (w.exponent < 2)
        throw std::invalid_argument("construct_thm2: witness must have exponent >= 2");
    WitnessResult check = check_thm2_preconditions(n, w.prime, w.exponent);
    if (!check.ok())
        throw std::invalid_argument(std::string("construct_thm2: invalid witness: ") +
                                    to_string(check.error));
    const i64 q = static_cast<i64>(w.value);  // p^k
    const i64 blocks = n / q;
    ConstructionResult res;
    res.set = VertexSet(n);
    for (i64 l = 0; l < blocks; ++l) res.set.add(q * l);
    for (i64 l = 1; l <= blocks; ++l) res.set.add(q * l - 1);  // l = n/p^k lands on n-1
    res.witness = check.witness;
    res.claimed_size = 2 * n / q;
    res.tag = TheoremTag::Thm2;
    if (res.set.size() != res.claimed_size)
        throw std::logic_error("construct_thm2: size mismatch");
    return res;
}

std::vector<nt::PrimePowerWitness> thm1_witnesses(i64 n) {
    require_even_n(n);
    std::vector<nt::PrimePowerWitness> out;
    for (auto [p, e] : nt::factorize(static_cast<u64>(n)).factors) {
        (void)e;
        if (p == 2) continue;
        WitnessResult r = check_thm1_preconditions(n, p);
        if (r.ok()) out.push_back(r.witness);
    }
    return out;
}

std::vector<nt::PrimePowerWitness> thm2_witnesses(i64 n) {
    require_even_n(n);
    std::vector<nt::PrimePowerWitness> out;
    for (auto [p, e] : nt::factorize(static_cast<u64>(n)).factors) {
        if (p == 2) continue;
        for (int k = 2; k <= e; ++k) {
            WitnessResult r = check_thm2_preconditions(n, p, k);
            if (r.ok()) out.push_back(r.witness);
        }
    }
    return out;
}

verify::BoundReport best_bound(i64 n) {
    require_even_n(n);
    verify::BoundReport report;
    report.n = n;
    report.degree = nt::floor_log2(static_cast<u64>(n));
    report.lower_berge = verify::berge_lower(n, report.degree);
    report.lower_prop2 = verify::prop2_lower(n, report.degree);
    for (const auto& w : thm1_witnesses(n))
        report.uppers.push_back({n / static_cast<i64>(w.value), verify::BoundSource::Thm1, w});
    for (const auto& w : thm2_witnesses(n))
        report.uppers.push_back({2 * n / static_cast<i64>(w.value), verify::BoundSource::Thm2, w});
    // The cited n/4 bound needs degree >= 5: the exact solver certifies
    // gamma > floor(n/4) at n = 6, 10, 12, 14, 22 and 26, so the quotation
    // cannot cover all even n. From n = 32 the oracle sweep confirms it.
    if (n >= 32)
        report.uppers.push_back({n / 4, verify::BoundSource::QuarterN, std::nullopt});
    report.uppers.push_back({n / 2, verify::BoundSource::HalfN, std::nullopt});
    return report;
}

}  // namespace knodel::construct
