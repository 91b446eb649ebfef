#pragma once

/* Brute-force reference computations for the duality checks, kept separate
 * from the Groebner/Schreyer machinery: resolutions here are written down
 * term by term (Taylor-style, from the lcm lattice of the given terms) and
 * self-validated, and expected module data comes from direct monomial
 * enumeration. Only the exact linear algebra layer is shared. */

#include <map>
#include <vector>

#include "gordual/complex.hpp"
#include "gordual/homology.hpp"
#include "gordual/kmodule.hpp"

namespace oracle {

using namespace gordual;

/* A coefficient-times-monomial term p^a * x^e. */
struct IdealTerm {
    Rational coeff;
    Monomial mono;
};

inline IdealTerm term_lcm(const CoefficientRing& k, const IdealTerm& a, const IdealTerm& b) {
    return IdealTerm{k.coeff_lcm(a.coeff, b.coeff), a.mono.lcm(b.mono)};
}

/* Taylor resolution of A / (u_1, ..., u_r) for terms u_i: F_S free on the
 * subsets S with generator degree |lcm(u_S)|, differential
 *   d(e_S) = sum_t (-1)^t (lcm(u_S) / lcm(u_{S - S[t]})) e_{S - S[t]}.
 * Exact for monomial ideals over a field and for regular sequences; every
 * use below is self-validated degreewise by the caller. */
inline ChainComplex taylor_resolution(const GradedRing& ring, const std::vector<IdealTerm>& terms) {
    const std::size_t r = terms.size();
    std::vector<std::vector<std::vector<int>>> subs(r + 1);
    {
        std::vector<int> cur;
        auto rec = [&](auto&& self, std::size_t start, std::size_t k) -> void {
            if (cur.size() == k) {
                subs[k].push_back(cur);
                return;
            }
            for (std::size_t i = start; i < r; ++i) {
                cur.push_back(static_cast<int>(i));
                self(self, i + 1, k);
                cur.pop_back();
            }
        };
        for (std::size_t k = 0; k <= r; ++k) rec(rec, 0, k);
    }
    auto lcm_of = [&](const std::vector<int>& s) {
        IdealTerm acc{Rational(1), Monomial::one(ring.var_count())};
        for (int i : s) acc = term_lcm(ring.coeff, acc, terms[i]);
        return acc;
    };

    ChainComplex c;
    for (std::size_t k = 0; k <= r; ++k) {
        FreeModule fm;
        for (const auto& s : subs[k]) fm.gen_degrees.push_back(lcm_of(s).mono.degree(ring));
        c.terms.push_back(std::move(fm));
    }
    for (std::size_t k = 1; k <= r; ++k) {
        std::map<std::vector<int>, std::size_t> idx;
        for (std::size_t b = 0; b < subs[k - 1].size(); ++b) idx[subs[k - 1][b]] = b;
        PolyMat d(c.terms[k - 1].rank(), c.terms[k].rank());
        for (std::size_t col = 0; col < subs[k].size(); ++col) {
            IdealTerm whole = lcm_of(subs[k][col]);
            for (std::size_t t = 0; t < subs[k][col].size(); ++t) {
                std::vector<int> rest = subs[k][col];
                rest.erase(rest.begin() + t);
                IdealTerm part = lcm_of(rest);
                Rational coeff = ring.coeff.quotient(whole.coeff, part.coeff);
                if (t % 2 == 1) coeff = ring.coeff.neg(coeff);
                Monomial mono = whole.mono.quotient(part.mono);
                d.at(idx.at(rest), col) = ring_element(ring, {{coeff, mono}});
            }
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

/* Transpose into the Hom complex by hand. */
inline ChainComplex dualize(const ChainComplex& c) {
    ChainComplex h;
    h.cochain = true;
    for (const auto& t : c.terms) {
        FreeModule dual;
        for (long d : t.gen_degrees) dual.gen_degrees.push_back(-d);
        h.terms.push_back(std::move(dual));
    }
    for (const auto& d : c.diffs) h.diffs.push_back(d.transpose());
    return h;
}

/* Frozen degreewise data: invariant-factor exponents per degree. */
using Expected = std::map<long, std::vector<long>>;

/* A / (p^a, v^b) over Z_(p)[v:w]: Z/p^a at degrees 0, w, ..., (b-1)w. */
inline Expected quotient_pair_data(long a, long b, long w) {
    Expected e;
    for (long i = 0; i < b; ++i) e[i * w] = {a};
    return e;
}

/* F_p[x]/(x^k) with |x| = w: one copy of the field at 0, w, ..., (k-1)w. */
inline Expected truncated_poly_data(long k, long w) {
    Expected e;
    for (long i = 0; i < k; ++i) e[i * w] = {1};
    return e;
}

/* F_2[x,y]/(x^2, xy, y^3), |x| = |y| = 1: standard monomials 1; x, y; y^2. */
inline Expected monomial_example_data() {
    return Expected{{0, {1}}, {1, {1, 1}}, {2, {1}}};
}

/* Ext of the dualized hand resolution at one position and degree, through
 * the shared exact linear algebra. */
inline Factors ext_factors_at(const GradedRing& ring, const ChainComplex& dual, long i, long t) {
    const CoefficientRing grp = CoefficientRing::p_local(ring.coeff.p);
    Subquotient h = homology_piece_at(ring, dual, static_cast<std::size_t>(i), t);
    return invariant_factors(grp, h.pres);
}

/* Degreewise validation that the hand resolution resolves the expected
 * module: H_0 matches the expected invariant factors and H_{>0} vanishes. */
inline bool validate_resolution(const GradedRing& ring, const ChainComplex& res,
                                const Expected& expected, long lo, long hi) {
    validate_complex(ring, res);
    const CoefficientRing grp = CoefficientRing::p_local(ring.coeff.p);
    for (long t = lo; t <= hi; ++t) {
        for (std::size_t i = 0; i < res.terms.size(); ++i) {
            Factors f = invariant_factors(grp, homology_piece_at(ring, res, i, t).pres);
            if (i == 0) {
                auto it = expected.find(t);
                std::vector<long> want = it == expected.end() ? std::vector<long>{} : it->second;
                if (f.free_rank != 0 || f.torsion_exps != want) return false;
            } else if (!f.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace oracle
