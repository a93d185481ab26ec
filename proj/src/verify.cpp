#include "knodel/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace knodel::verify {

Certificate certify(const KnodelGraph& g, const VertexSet& d) {
    const i64 n = g.vertex_count();
    if (d.universe() != n)
        throw std::invalid_argument("certify: set universe does not match graph");

    Certificate cert;
    cert.undominated = VertexSet(n);
    cert.dominating = true;
    cert.independent = true;
    cert.perfect = true;

    for (i64 v = 0; v < n; ++v) {
        int in_d = 0;
        for (int t = 1; t <= g.degree(); ++t)
            if (d.contains(g.neighbor_via(v, t))) ++in_d;
        if (d.contains(v)) {
            if (in_d > 0) cert.independent = false;
            if (v % 2 == 0)
                ++cert.even_count;
            else
                ++cert.odd_count;
        } else {
            if (in_d == 0) {
                cert.dominating = false;
                cert.undominated.add(v);
            }
            if (in_d != 1) cert.perfect = false;
        }
    }
    cert.efficient = cert.perfect && cert.independent;
    return cert;
}

i64 berge_lower(i64 n, int degree) {
    if (n < 1 || degree < 0) throw std::invalid_argument("berge_lower: bad arguments");
    return (n + degree) / (degree + 1);
}

std::optional<i64> prop2_lower(i64 n, int degree) {
    if (n < 2 || n % 2 != 0 || degree < 2)
        throw std::invalid_argument("prop2_lower: requires even n and degree >= 2");
    const i64 q = n / (degree + 1);
    const i64 r = n % (degree + 1);
    if (q % 2 == 0 && r >= 4) return q + 2;  // q = 2j, bound is 2j + 2
    return std::nullopt;
}

Prop1Result prop1_check(const KnodelGraph& g, const VertexSet& d) {
    const i64 n = g.vertex_count();
    const int k = g.degree();
    if (n % (k + 1) != 0)
        throw std::invalid_argument("prop1_check: n/(degree+1) is not an integer");
    if (d.size() != n / (k + 1))
        throw std::invalid_argument("prop1_check: set size is not n/(degree+1)");
    Certificate cert = certify(g, d);
    if (!cert.dominating)
        throw std::invalid_argument("prop1_check: set is not dominating");
    Prop1Result r;
    r.efficient = cert.efficient;
    r.even_size = d.size() % 2 == 0;
    r.equal_split = cert.even_count == cert.odd_count;
    return r;
}

const char* to_string(BoundSource s) {
    switch (s) {
        case BoundSource::Thm1: return "thm1";
        case BoundSource::Thm2: return "thm2";
        case BoundSource::QuarterN: return "n/4";
        case BoundSource::HalfN: return "n/2";
    }
    return "?";
}

std::string UpperBound::provenance() const {
    std::string s = to_string(source);
    if (witness) {
        s += "(p=" + std::to_string(witness->prime);
        if (witness->exponent > 1) s += "^" + std::to_string(witness->exponent);
        s += ")";
    }
    return s;
}

i64 BoundReport::best_lower() const {
    return std::max(lower_berge, lower_prop2.value_or(0));
}

const UpperBound& BoundReport::best_upper() const {
    if (uppers.empty()) throw std::logic_error("BoundReport: no upper bounds");
    auto rank = [](BoundSource s) {
        switch (s) {
            case BoundSource::Thm1: return 0;
            case BoundSource::Thm2: return 1;
            case BoundSource::QuarterN: return 2;
            case BoundSource::HalfN: return 3;
        }
        return 4;
    };
    const UpperBound* best = &uppers.front();
    for (const auto& ub : uppers)
        if (ub.value < best->value ||
            (ub.value == best->value && rank(ub.source) < rank(best->source)))
            best = &ub;
    return *best;
}

bool BoundReport::sandwich_ok() const {
    if (!gamma_exact) return true;
    return best_lower() <= *gamma_exact && *gamma_exact <= best_upper().value;
}

}  // namespace knodel::verify
