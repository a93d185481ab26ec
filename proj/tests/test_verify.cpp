#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knodel/construct.hpp"
#include "knodel/verify.hpp"

using namespace knodel;

namespace {

VertexSet make_set(i64 n, std::initializer_list<i64> vs) {
    VertexSet s(n);
    for (i64 v : vs) s.add(v);
    return s;
}

}  // namespace

TEST_CASE("certify on stated instances") {
    auto g8 = KnodelGraph::build(8);
    auto cert = verify::certify(g8, make_set(8, {0, 5}));
    CHECK(cert.dominating);
    CHECK(cert.perfect);
    CHECK(cert.independent);
    CHECK(cert.efficient);
    CHECK(cert.even_count == 1);
    CHECK(cert.odd_count == 1);
    CHECK(cert.undominated.empty());

    auto g6 = KnodelGraph::build(6);
    auto cert6 = verify::certify(g6, make_set(6, {0}));
    CHECK_FALSE(cert6.dominating);
    CHECK(cert6.undominated.to_vector() == std::vector<i64>{2, 4, 5});

    VertexSet full(6);
    for (i64 v = 0; v < 6; ++v) full.add(v);
    auto certf = verify::certify(g6, full);
    CHECK(certf.dominating);
    CHECK_FALSE(certf.independent);

    CHECK_THROWS_AS(verify::certify(g6, VertexSet(8)), std::invalid_argument);
}

TEST_CASE("certify consistency on random sets") {
    std::mt19937 rng(1234);
    for (i64 n : {6, 8, 12, 20, 34, 64, 100}) {
        auto g = KnodelGraph::build(n);
        std::uniform_int_distribution<i64> size_dist(0, n / 2);
        std::uniform_int_distribution<i64> v_dist(0, n - 1);
        for (int it = 0; it < 60; ++it) {
            VertexSet d(n);
            const i64 target = size_dist(rng);
            while (d.size() < target) d.add(v_dist(rng));
            auto cert = verify::certify(g, d);
            if (cert.perfect) CHECK(cert.dominating);
            CHECK(cert.efficient == (cert.perfect && cert.independent));
            CHECK(cert.dominating == cert.undominated.empty());
            CHECK(cert.even_count + cert.odd_count == d.size());
            // every reported undominated vertex really is uncovered
            for (i64 u : cert.undominated.to_vector()) {
                CHECK_FALSE(d.contains(u));
                for (i64 w : g.neighbor_list(u)) CHECK_FALSE(d.contains(w));
            }
        }
    }
}

TEST_CASE("berge lower bound") {
    CHECK(verify::berge_lower(20, 4) == 4);
    CHECK(verify::berge_lower(6, 2) == 2);
    CHECK(verify::berge_lower(76, 6) == 11);
    CHECK(verify::berge_lower(1, 0) == 1);
    CHECK_THROWS_AS(verify::berge_lower(0, 3), std::invalid_argument);
}

TEST_CASE("proposition 2 lower bound") {
    CHECK(verify::prop2_lower(76, 6) == 12);  // 76 = 10*7 + 6
    CHECK_FALSE(verify::prop2_lower(20, 4).has_value());  // exact division
    CHECK_FALSE(verify::prop2_lower(78, 6).has_value());  // 78 = 11*7 + 1, odd quotient
    CHECK_FALSE(verify::prop2_lower(30, 4).has_value());  // 30 = 6*5 + 0
    CHECK(verify::prop2_lower(118, 6) == 18);             // 118 = 16*7 + 6
    CHECK_THROWS_AS(verify::prop2_lower(75, 6), std::invalid_argument);
    CHECK_THROWS_AS(verify::prop2_lower(76, 1), std::invalid_argument);
}

TEST_CASE("proposition 2 strictly improves the berge bound where it applies") {
    for (i64 n = 6; n <= 4096; n += 2) {
        const int k = nt::floor_log2(static_cast<nt::u64>(n));
        if (k < 2) continue;
        if (auto p2 = verify::prop2_lower(n, k)) {
            CHECK(*p2 == verify::berge_lower(n, k) + 1);
            CHECK(n % (k + 1) >= 4);
        }
    }
}

TEST_CASE("proposition 1 necessary conditions") {
    auto g8 = KnodelGraph::build(8);
    auto r = verify::prop1_check(g8, make_set(8, {0, 5}));
    CHECK(r.efficient);
    CHECK(r.even_size);
    CHECK(r.equal_split);
    CHECK(r.ok());

    // antipodal pair on the 6-cycle KG_6
    auto g6 = KnodelGraph::build(6);
    CHECK(verify::prop1_check(g6, make_set(6, {1, 4})).ok());

    // theorem-1 set at the tight bound n/(degree+1) = 4
    auto g20 = KnodelGraph::build(20);
    auto thm = construct::construct_thm1(20, construct::check_thm1_preconditions(20, 5).witness);
    CHECK(verify::prop1_check(g20, thm.set).ok());

    // precondition violations are rejected
    CHECK_THROWS_AS(verify::prop1_check(g8, make_set(8, {0, 1})), std::invalid_argument);  // not dominating
    CHECK_THROWS_AS(verify::prop1_check(g8, make_set(8, {0, 3, 5})), std::invalid_argument);  // wrong size
    auto g10 = KnodelGraph::build(10);
    CHECK_THROWS_AS(verify::prop1_check(g10, make_set(10, {0, 5})), std::invalid_argument);  // 10/4 not integral
}

TEST_CASE("bound report accessors") {
    verify::BoundReport r;
    r.n = 76;
    r.degree = 6;
    r.lower_berge = 11;
    r.lower_prop2 = 12;
    r.uppers.push_back({19, verify::BoundSource::QuarterN, std::nullopt});
    r.uppers.push_back({38, verify::BoundSource::HalfN, std::nullopt});
    CHECK(r.best_lower() == 12);
    CHECK(r.best_upper().value == 19);
    CHECK(r.sandwich_ok());  // vacuous without gamma
    r.gamma_exact = 13;
    CHECK(r.sandwich_ok());
    r.gamma_exact = 11;  // below the prop2 bound
    CHECK_FALSE(r.sandwich_ok());
    r.gamma_exact = 20;  // above every upper bound
    CHECK_FALSE(r.sandwich_ok());

    nt::PrimePowerWitness w;
    w.prime = 5;
    w.exponent = 1;
    verify::UpperBound ub{4, verify::BoundSource::Thm1, w};
    CHECK(ub.provenance() == "thm1(p=5)");
    w.exponent = 2;
    verify::UpperBound ub2{16, verify::BoundSource::Thm2, w};
    CHECK(ub2.provenance() == "thm2(p=5^2)");
}
