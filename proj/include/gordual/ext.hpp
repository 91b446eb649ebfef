#pragma once

#include "gordual/degreewise.hpp"
#include "gordual/homology.hpp"
#include "gordual/resolution.hpp"

namespace gordual {

/* Homological position where Ext(k, A) concentrates: the variable count,
 * plus one over Z_(p) for the base. */
inline long ext_concentration_index(const GradedRing& ring) {
    return static_cast<long>(ring.var_count()) + (ring.coeff.is_field() ? 0 : 1);
}

/* Ext^i_A(M, A) for i <= max_i, degreewise on [lo, hi]: homology of the
 * dualized free resolution. */
inline BigradedModule ext_into_ring(const GradedRing& ring, const ModulePresentation& m,
                                    long max_i, long lo, long hi) {
    if (max_i < 0) throw Error("ext_into_ring requires max_i >= 0");
    ChainComplex res = free_resolution(ring, m, static_cast<std::size_t>(max_i) + 1);
    ChainComplex dual = hom_complex_into_ring(ring, res);
    BigradedModule h = homology_of_complex(ring, dual, lo, hi);
    /* positions beyond max_i are not certified: drop them */
    for (auto it = h.entries.begin(); it != h.entries.end();)
        it = it->first.first > max_i ? h.entries.erase(it) : std::next(it);
    h.positions = static_cast<std::size_t>(max_i) + 1;
    return h;
}

/* Ext at one homological position as degreewise data with generator
 * actions. Throws NotTorsionOnWindow when a piece has a free summand. */
inline DegreewiseModule ext_degreewise_with_actions(const GradedRing& ring,
                                                    const ModulePresentation& m, long position,
                                                    long lo, long hi) {
    ChainComplex res = free_resolution(ring, m, static_cast<std::size_t>(position) + 1);
    ChainComplex dual = hom_complex_into_ring(ring, res);
    const std::size_t i = static_cast<std::size_t>(position);
    auto piece_at = [&](long d) { return homology_piece_at(ring, dual, i, d); };
    auto ambient_action = [&](std::size_t g, long d) {
        Element x = ring_monomial(ring, Monomial::var(ring.var_count(), g));
        return mult_matrix_at_degree(ring, dual.terms[i], x, d);
    };
    /* out-of-window vanishing is not certified here */
    return build_degreewise(ring, lo, hi, piece_at, false, false, ambient_action);
}

}  // namespace gordual
