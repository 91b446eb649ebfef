#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gordual/ring.hpp"

using namespace gordual;

TEST_CASE("make_ring validates input") {
    auto zp2 = CoefficientRing::p_local(2);
    REQUIRE_NOTHROW(make_ring(zp2, {{"v1", 2}}));
    REQUIRE_THROWS_AS(make_ring(zp2, {{"x", 1}, {"x", 2}}), DuplicateNameError);
    REQUIRE_THROWS_AS(make_ring(zp2, {{"x", 0}}), NonPositiveDegreeError);
    REQUIRE_THROWS_AS(make_ring(zp2, {}, {{"u", -2}}), NonPositiveDegreeError);
    /* degree-0 generators are allowed only as formal (symbolic) generators */
    REQUIRE_NOTHROW(make_ring(zp2, {}, {}, {{"u1", 0}}));
    REQUIRE(make_ring(CoefficientRing::prime_field(2), {}).computable());
    REQUIRE(!lubin_tate_ring(2, 3).computable());
}

TEST_CASE("shift calculus reproduces the standard theories") {
    /* H Z_(p): no generators over Z_(p) */
    auto hz = gorenstein_shift_symbolic(make_ring(CoefficientRing::p_local(3), {}));
    REQUIRE(hz.a == -1);
    REQUIRE(hz.b == 0);
    REQUIRE(hz.n == 0);
    REQUIRE(!hz.modulus);

    /* ku = BP<1> at p = 2 */
    auto ku = gorenstein_shift_symbolic(ku_ring());
    REQUIRE(ku.b == -2);
    REQUIRE(ku.n == 1);
    REQUIRE(ku.c == -1);
    REQUIRE(ku.a == -4);

    /* F_2[x] with |x| = 3 */
    auto f2x = gorenstein_shift_symbolic(make_ring(CoefficientRing::prime_field(2), {{"x", 3}}));
    REQUIRE(f2x.b == -3);
    REQUIRE(f2x.n == 1);
    REQUIRE(f2x.c == 0);
    REQUIRE(f2x.a == -4);

    /* Johnson-Wilson E(n+1): shift of BP<n>, modulus 2(p^{n+1}-1) */
    for (long p : {2L, 3L, 5L})
        for (long n = 0; n <= 3; ++n) {
            auto bp = gorenstein_shift_symbolic(bp_ring(p, n));
            REQUIRE(bp.a == -static_cast<long>(bp_degree_sum(p, n)) - n - 1);
            auto en = gorenstein_shift_symbolic(johnson_wilson_ring(p, n + 1));
            REQUIRE(en.a == bp.a);
            REQUIRE(en.modulus);
            REQUIRE(*en.modulus == 2 * (static_cast<long>(pow_int(p, n + 1)) - 1));
        }

    /* Lubin-Tate: shift -n-1, defined mod 2 */
    for (long n = 1; n <= 4; ++n) {
        auto lt = gorenstein_shift_symbolic(lubin_tate_ring(2, n));
        REQUIRE(lt.a == -n - 1);
        REQUIRE(lt.modulus);
        REQUIRE(*lt.modulus == 2);
    }
}

TEST_CASE("bp_degree_sum closed formula equals the explicit sum") {
    REQUIRE(bp_degree_sum(2, 1) == 2);
    REQUIRE(bp_degree_sum(2, 0) == 0);
    REQUIRE(bp_degree_sum(2, 2) == 8);
    for (long p : {2L, 3L, 5L})
        for (long n = 0; n <= 6; ++n) {
            Int expect = 0;
            for (long i = 1; i <= n; ++i) expect += 2 * (pow_int(p, i) - 1);
            REQUIRE(bp_degree_sum(p, n) == expect);
        }
}

TEST_CASE("adjoining a polynomial generator of degree d changes a by -d-1") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> deg(1, 9);
    std::uniform_int_distribution<int> count(0, 3), which(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        auto coeff = which(rng) ? CoefficientRing::p_local(3) : CoefficientRing::prime_field(2);
        std::vector<Generator> gens;
        int n = count(rng);
        for (int i = 0; i < n; ++i) gens.push_back({"x" + std::to_string(i), deg(rng)});
        auto base = gorenstein_shift_symbolic(make_ring(coeff, gens));
        long d = deg(rng);
        gens.push_back({"y", d});
        auto bigger = gorenstein_shift_symbolic(make_ring(coeff, gens));
        REQUIRE(bigger.a == base.a - d - 1);
        REQUIRE(bigger.a == bigger.b + bigger.c - bigger.n);
    }
}
