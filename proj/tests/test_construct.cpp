#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knodel/construct.hpp"
#include "knodel/verify.hpp"

using namespace knodel;
using construct::WitnessError;

TEST_CASE("theorem 1 precondition checker") {
    auto ok = construct::check_thm1_preconditions(20, 5);
    REQUIRE(ok.ok());
    CHECK(ok.witness.prime == 5);
    CHECK(ok.witness.exponent == 1);
    CHECK(ok.witness.order_of_two == 4);
    CHECK(ok.witness.is_primitive);

    CHECK(construct::check_thm1_preconditions(20, 7).error == WitnessError::NotDivisible);
    // 7168 = 2^10 * 7: divisible and small enough, but 2 has order 3 mod 7
    CHECK(construct::check_thm1_preconditions(7168, 7).error == WitnessError::NotPrimitiveRoot);
    // 10 = 2 * 5: 5 > ceil(log2 10) = 4
    CHECK(construct::check_thm1_preconditions(10, 5).error == WitnessError::PrimeTooLarge);

    CHECK_THROWS_AS(construct::check_thm1_preconditions(20, 9), std::invalid_argument);  // not prime
    CHECK_THROWS_AS(construct::check_thm1_preconditions(20, 2), std::invalid_argument);  // even p
    CHECK_THROWS_AS(construct::check_thm1_preconditions(7, 3), std::invalid_argument);   // odd n
}

TEST_CASE("theorem 1 set on stated instances") {
    auto w = construct::check_thm1_preconditions(20, 5).witness;
    auto res = construct::construct_thm1(20, w);
    CHECK(res.set.to_vector() == std::vector<i64>{0, 9, 10, 19});
    CHECK(res.claimed_size == 4);
    CHECK(res.tag == construct::TheoremTag::Thm1);
    CHECK(verify::certify(KnodelGraph::build(20), res.set).dominating);

    auto w30 = construct::check_thm1_preconditions(30, 5).witness;
    auto res30 = construct::construct_thm1(30, w30);
    CHECK(res30.set.to_vector() == std::vector<i64>{0, 9, 10, 19, 20, 29});
    CHECK(res30.set.size() == 30 / 5);
    CHECK(verify::certify(KnodelGraph::build(30), res30.set).dominating);

    // size n/p by construction at scale
    auto wbig = construct::check_thm1_preconditions(327680, 5).witness;
    CHECK(construct::construct_thm1(327680, wbig).set.size() == 65536);
}

TEST_CASE("theorem 1 rejects invalid witnesses") {
    auto w = construct::check_thm1_preconditions(20, 5).witness;
    CHECK_THROWS_AS(construct::construct_thm1(22, w), std::invalid_argument);  // 5 does not divide 22
    auto w2 = w;
    w2.exponent = 2;
    CHECK_THROWS_AS(construct::construct_thm1(20, w2), std::invalid_argument);
}

TEST_CASE("theorem 2 precondition checker") {
    auto ok = construct::check_thm2_preconditions(1152, 3, 2);
    REQUIRE(ok.ok());
    CHECK(ok.witness.value == 9);
    CHECK(ok.witness.order_of_two == 6);  // 2 primitive mod 9
    CHECK(ok.witness.is_primitive);

    // 72 = 8 * 9: totient(9) = 6 < ceil(log2 72) = 7, so this is a passing case
    CHECK(construct::check_thm2_preconditions(72, 3, 2).ok());
    CHECK(construct::check_thm2_preconditions(72, 3, 3).error == WitnessError::NotDivisible);
    // 36 = 4 * 9: totient(9) = 6 is not < ceil(log2 36) = 6
    CHECK(construct::check_thm2_preconditions(36, 3, 2).error == WitnessError::TotientTooLarge);
    // 49 * 2^38: totient(49) = 42 < 44, but 2 has order 21 mod 49
    CHECK(construct::check_thm2_preconditions(i64{49} << 38, 7, 2).error ==
          WitnessError::NotPrimitiveRoot);
    CHECK_THROWS_AS(construct::check_thm2_preconditions(72, 3, 1), std::invalid_argument);
}

TEST_CASE("theorem 2 set on stated instances") {
    auto w = construct::check_thm2_preconditions(72, 3, 2).witness;
    auto res = construct::construct_thm2(72, w);
    auto v = res.set.to_vector();
    CHECK(res.set.size() == 16);  // 2 * 72 / 9
    CHECK(res.claimed_size == 16);
    CHECK(v.front() == 0);
    CHECK(v.back() == 71);  // l = n/p^k lands on n - 1
    for (i64 x : v) CHECK((x % 9 == 0 || x % 9 == 8));
    CHECK(verify::certify(KnodelGraph::build(72), res.set).dominating);

    auto w1152 = construct::check_thm2_preconditions(1152, 3, 2).witness;
    CHECK(construct::construct_thm2(1152, w1152).set.size() == 256);
}

TEST_CASE("witness enumeration") {
    auto t1 = construct::thm1_witnesses(1152);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].prime == 3);
    auto t2 = construct::thm2_witnesses(1152);
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].value == 9);
    CHECK(construct::thm1_witnesses(64).empty());
    CHECK(construct::thm2_witnesses(64).empty());
    // 2^4 * 3 * 5 * 11 * 13 = 34320, ceil(log2) = 16: all four primes qualify
    auto many = construct::thm1_witnesses(34320);
    REQUIRE(many.size() == 4);
    CHECK(many.back().prime == 13);
}

TEST_CASE("best bound on stated instances") {
    auto b20 = construct::best_bound(20);
    CHECK(b20.best_upper().value == 4);
    CHECK(b20.best_upper().source == verify::BoundSource::Thm1);
    CHECK(b20.best_upper().witness->prime == 5);
    CHECK(b20.lower_berge == 4);

    auto b1024 = construct::best_bound(1024);
    CHECK(b1024.best_upper().value == 256);
    CHECK(b1024.best_upper().source == verify::BoundSource::QuarterN);
    CHECK(b1024.uppers.size() == 2);  // n/4 and n/2 only

    auto b1152 = construct::best_bound(1152);
    CHECK(b1152.best_upper().value == 256);
    CHECK(b1152.best_upper().source == verify::BoundSource::Thm2);
    bool saw_thm1_384 = false;
    for (const auto& ub : b1152.uppers)
        if (ub.source == verify::BoundSource::Thm1 && ub.value == 384) saw_thm1_384 = true;
    CHECK(saw_thm1_384);

    // below n = 32 the n/4 fallback does not apply (gamma exceeds it at
    // n = 6, 10, 12, 14, 22, 26)
    for (i64 n : {6, 22, 26}) {
        for (const auto& ub : construct::best_bound(n).uppers)
            CHECK(ub.source != verify::BoundSource::QuarterN);
    }
    CHECK(construct::best_bound(6).best_upper().value == 2);
    auto b8 = construct::best_bound(8);
    CHECK(b8.best_upper().value == 4);
    CHECK(b8.best_upper().source == verify::BoundSource::HalfN);
}

TEST_CASE("construction sweep: every witness yields a dominating set of the claimed size") {
    for (i64 n = 6; n <= 2000; n += 2) {
        const KnodelGraph g = KnodelGraph::build(n, nt::floor_log2(static_cast<nt::u64>(n)), 0);
        for (const auto& w : construct::thm1_witnesses(n)) {
            auto res = construct::construct_thm1(n, w);
            REQUIRE(res.set.size() == n / static_cast<i64>(w.prime));
            auto cert = verify::certify(g, res.set);
            REQUIRE(cert.dominating);
            // the two families are purely even / purely odd, n/2p of each
            REQUIRE(cert.even_count == n / (2 * static_cast<i64>(w.prime)));
            REQUIRE(cert.odd_count == n / (2 * static_cast<i64>(w.prime)));
        }
        for (const auto& w : construct::thm2_witnesses(n)) {
            auto res = construct::construct_thm2(n, w);
            REQUIRE(res.set.size() == 2 * n / static_cast<i64>(w.value));
            REQUIRE(verify::certify(g, res.set).dominating);
        }
    }
}

TEST_CASE("best bound stays at or below n/4 from 32 up") {
    for (i64 n = 32; n <= 4096; n += 2) {
        auto report = construct::best_bound(n);
        const i64 best = report.best_upper().value;
        REQUIRE(best <= n / 4);
        // strictly better than n/4 exactly when some witness beats it
        i64 best_theorem = n;
        for (const auto& ub : report.uppers)
            if (ub.witness) best_theorem = std::min(best_theorem, ub.value);
        if (best_theorem < n / 4) REQUIRE(best < n / 4);
    }
}
