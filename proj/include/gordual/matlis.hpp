#pragma once

#include "gordual/degreewise.hpp"
#include "gordual/torsion.hpp"

namespace gordual {

/* Expand a finitely presented module into degreewise data on a window.
 * Throws NotTorsionOnWindow when a degree piece has a free summand.
 * Completeness flags come from the torsion certificate when available. */
inline DegreewiseModule expand_degreewise(const GradedRing& ring, const ModulePresentation& m,
                                          long lo, long hi) {
    validate_presentation(ring, m);
    TorsionCertificate cert = is_torsion(ring, m);
    bool below = false, above = false;
    if (auto bounds = torsion_degree_bounds(ring, m, cert)) {
        below = lo <= bounds->lo;
        above = hi >= bounds->hi;
    }
    auto piece_at = [&](long d) {
        KPresentation pres = degree_piece_presentation(ring, m, d);
        return Subquotient{pres, Mat::identity(pres.gens)};
    };
    auto ambient_action = [&](std::size_t g, long d) {
        Element x = ring_monomial(ring, Monomial::var(ring.var_count(), g));
        return mult_matrix_at_degree(ring, m.ambient, x, d);
    };
    return build_degreewise(ring, lo, hi, piece_at, below, above, ambient_action);
}

/* Matlis dual of degreewise data: (M^v)_d is the dual group of M_{-d} (same
 * invariant factors), and the action of x from d to d + |x| is the transpose
 * of M's action from -d-|x| to -d, with entries rescaled by the canonical
 * identification Hom(Z/p^k, Z/p^inf) = Z/p^k. */
inline DegreewiseModule matlis_dual(const DegreewiseModule& m) {
    DegreewiseModule d;
    d.lo = -m.hi;
    d.hi = -m.lo;
    d.p = m.p;
    d.complete_below = m.complete_above;
    d.complete_above = m.complete_below;
    for (long t = d.lo; t <= d.hi; ++t) d.pieces.push_back(m.piece(-t));

    for (const auto& act : m.actions) {
        DegreewiseModule::Action da;
        da.gen = act.gen;
        da.degree = act.degree;
        da.maps.resize(d.hi - d.lo + 1);
        for (long t = d.lo; t <= d.hi; ++t) {
            if (!d.in_window(t + act.degree)) continue;
            auto orig = m.action_map(act.gen, -t - act.degree);
            if (!orig) continue;
            /* orig: M_{-t-w} -> M_{-t}; dual map: dual(M_{-t}) -> dual(M_{-t-w}) */
            const auto& src_exps = m.piece(-t).exps;        // orders b_j of dual source
            const auto& dst_exps = m.piece(-t - act.degree).exps;  // orders a_i of dual target
            Mat out(dst_exps.size(), src_exps.size());
            for (std::size_t i = 0; i < dst_exps.size(); ++i)
                for (std::size_t j = 0; j < src_exps.size(); ++j) {
                    Rational f = orig->at(j, i);
                    long shift = dst_exps[i] - src_exps[j];
                    Rational scaled = shift >= 0 ? Rational(f * pow_int(m.p, shift))
                                                 : Rational(f / pow_int(m.p, -shift));
                    out.at(i, j) = detail::canonical_entry(m.p, dst_exps[i], scaled);
                }
            da.maps[t - d.lo] = std::move(out);
        }
        d.actions.push_back(std::move(da));
    }
    return d;
}

/* Shift: (Sigma^s M)_d = M_{d-s}. */
inline DegreewiseModule shift_degreewise(const DegreewiseModule& m, long s) {
    DegreewiseModule d = m;
    d.lo = m.lo + s;
    d.hi = m.hi + s;
    return d;
}

}  // namespace gordual
