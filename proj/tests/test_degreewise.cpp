#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gordual/hilbert.hpp"
#include "gordual/matlis.hpp"
#include "support/fixtures.hpp"

using namespace gordual;
using fixtures::el;

TEST_CASE("expand_degreewise on Z_(2)[v1]/(8, v1^2)") {
    auto ring = fixtures::zpv1(2);
    auto m = fixtures::pair_quotient(ring, 3, 2);
    auto dm = expand_degreewise(ring, m, 0, 4);
    REQUIRE(dm.piece(0).exps == std::vector<long>{3});
    REQUIRE(dm.piece(1).exps.empty());
    REQUIRE(dm.piece(2).exps == std::vector<long>{3});
    REQUIRE(dm.piece(3).exps.empty());
    REQUIRE(dm.piece(4).exps.empty());
    REQUIRE(dm.complete_below);
    REQUIRE(dm.complete_above);
    /* v1: iso from 0 to 2, zero from 2 to 4 */
    REQUIRE(*dm.action_image_exp("v1", 0) == 3);
    REQUIRE(*dm.action_image_exp("v1", 2) == 0);
    auto map0 = dm.action_map("v1", 0);
    REQUIRE(map0);
    REQUIRE(map0->rows == 1);
    REQUIRE(map0->cols == 1);
    REQUIRE(reduce_mod_p_power(map0->at(0, 0), 2, 3) != 0);
}

TEST_CASE("expand_degreewise on F_2[x]/(x^2)") {
    auto ring = fixtures::f2x();
    auto m = fixtures::truncated(ring, 2);
    auto dm = expand_degreewise(ring, m, 0, 3);
    REQUIRE(dm.piece(0).exps == std::vector<long>{1});
    REQUIRE(dm.piece(1).exps == std::vector<long>{1});
    REQUIRE(dm.piece(2).exps.empty());
    REQUIRE(*dm.action_image_exp("x", 0) == 1);
    REQUIRE(*dm.action_image_exp("x", 1) == 0);
}

TEST_CASE("expand_degreewise rejects free summands in the window") {
    auto ring = fixtures::zpv1(2);
    auto m = fixtures::mixed_example(ring);
    REQUIRE_THROWS_AS(expand_degreewise(ring, m, 0, 3), NotTorsionOnWindowError);
}

TEST_CASE("zero module expands to all-zero data") {
    auto ring = fixtures::f2x();
    ModulePresentation zero{FreeModule{}, {}};
    auto dm = expand_degreewise(ring, zero, -2, 2);
    for (long d = -2; d <= 2; ++d) REQUIRE(dm.piece(d).exps.empty());
}

TEST_CASE("torsion certificates") {
    auto f2 = fixtures::f2x();
    auto t1 = is_torsion(f2, fixtures::truncated(f2, 3));
    REQUIRE(t1.torsion);
    REQUIRE(t1.killing_powers[0][0] == 3);

    ModulePresentation free_a{FreeModule::rank_one(), {}};
    REQUIRE(!is_torsion(f2, free_a).torsion);

    auto z2 = fixtures::zpv1(2);
    auto t2 = is_torsion(z2, fixtures::pair_quotient(z2, 3, 2));
    REQUIRE(t2.torsion);
    REQUIRE(t2.killing_powers[0][0] == 2);
    REQUIRE(t2.p_powers[0]);
    REQUIRE(*t2.p_powers[0] == 3);

    /* J-torsion but not torsion */
    auto mixed = fixtures::mixed_example(z2);
    REQUIRE(!is_torsion(z2, mixed).torsion);
    REQUIRE(is_j_torsion(z2, mixed).torsion);
}

TEST_CASE("matlis duality mirrors orders and transposes actions") {
    /* (Z/4 at degree 3) -> Z/4 at degree -3 */
    DegreewiseModule m;
    m.lo = 3;
    m.hi = 3;
    m.p = 2;
    m.pieces.push_back({{2}});
    auto d = matlis_dual(m);
    REQUIRE(d.lo == -3);
    REQUIRE(d.hi == -3);
    REQUIRE(d.piece(-3).exps == std::vector<long>{2});

    /* F_2[x]/(x^2): dual lives at degrees -1, 0 with the x-action an iso
     * from -1 to 0 */
    auto ring = fixtures::f2x();
    auto dm = expand_degreewise(ring, fixtures::truncated(ring, 2), 0, 2);
    auto dd = matlis_dual(dm);
    REQUIRE(dd.piece(0).exps == std::vector<long>{1});
    REQUIRE(dd.piece(-1).exps == std::vector<long>{1});
    REQUIRE(*dd.action_image_exp("x", -1) == 1);
}

TEST_CASE("double dual is the identity on orders and action data") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> edist(0, 2), cdist(0, 15), pdist(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        long p = pdist(rng) ? 2 : 3;
        long w = 1 + pdist(rng);
        DegreewiseModule m;
        m.lo = -2;
        m.hi = 2;
        m.p = p;
        for (long d = m.lo; d <= m.hi; ++d) {
            DegreewiseModule::Piece pc;
            int n = edist(rng);
            for (int i = 0; i < n; ++i) pc.exps.push_back(1 + edist(rng));
            std::sort(pc.exps.rbegin(), pc.exps.rend());
            m.pieces.push_back(pc);
        }
        DegreewiseModule::Action act;
        act.gen = "x";
        act.degree = w;
        act.maps.resize(m.hi - m.lo + 1);
        for (long d = m.lo; d + w <= m.hi; ++d) {
            const auto& src = m.piece(d).exps;
            const auto& dst = m.piece(d + w).exps;
            Mat map(dst.size(), src.size());
            for (std::size_t i = 0; i < dst.size(); ++i)
                for (std::size_t j = 0; j < src.size(); ++j) {
                    /* a well-defined entry needs valuation >= dst - src */
                    long need = std::max<long>(dst[i] - src[j], 0);
                    Rational v = Rational(cdist(rng)) * pow_int(p, need);
                    map.at(i, j) = Rational(reduce_mod_p_power(v, p, dst[i]));
                }
            act.maps[d - m.lo] = std::move(map);
        }
        m.actions.push_back(std::move(act));

        auto dd = matlis_dual(matlis_dual(m));
        REQUIRE(dd.lo == m.lo);
        REQUIRE(dd.hi == m.hi);
        for (long d = m.lo; d <= m.hi; ++d) REQUIRE(dd.piece(d).exps == m.piece(d).exps);
        for (long d = m.lo; d + w <= m.hi; ++d) {
            auto a = m.action_map("x", d);
            auto b = dd.action_map("x", d);
            REQUIRE(bool(a) == bool(b));
            if (!a) continue;
            for (std::size_t i = 0; i < a->rows; ++i)
                for (std::size_t j = 0; j < a->cols; ++j)
                    REQUIRE(reduce_mod_p_power(a->at(i, j), p, m.piece(d + w).exps[i]) ==
                            reduce_mod_p_power(b->at(i, j), p, m.piece(d + w).exps[i]));
            REQUIRE(*m.action_image_exp("x", d) == *dd.action_image_exp("x", d));
        }
    }
}

TEST_CASE("hilbert_series guards incomplete degreewise windows") {
    auto ring = fixtures::zpv1(2);
    auto dm = expand_degreewise(ring, fixtures::pair_quotient(ring, 3, 2), 0, 1);
    REQUIRE(!dm.complete_above);  // the module is nonzero in degree 2, past the window
    REQUIRE_THROWS_AS(hilbert_series(dm, 0, 6), InfiniteInWindowError);
    auto full = expand_degreewise(ring, fixtures::pair_quotient(ring, 3, 2), 0, 2);
    REQUIRE(full.complete_above);
    auto h = hilbert_series(full, 0, 10);
    REQUIRE(h.at(2).order_exp == 3);
    REQUIRE(h.at(8).is_zero());
}
