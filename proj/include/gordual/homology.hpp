#pragma once

#include <map>
#include <sstream>

#include "gordual/complex.hpp"
#include "gordual/kmodule.hpp"

namespace gordual {

/* Homology of a complex, indexed by (homological position, internal degree).
 * Entries are per-degree invariant factors; only nonzero entries are stored. */
struct BigradedModule {
    long lo = 0, hi = 0;
    std::size_t positions = 0;
    long p = 2;
    bool field = false;
    std::map<std::pair<long, long>, Factors> entries;

    Factors at(long i, long t) const {
        auto it = entries.find({i, t});
        return it == entries.end() ? Factors{} : it->second;
    }

    bool zero_outside(long i) const {
        for (const auto& [key, f] : entries)
            if (key.first != i && !f.is_zero()) return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (const auto& [key, f] : entries) {
            os << "i=" << key.first << "  t=" << key.second << "  ";
            if (field)
                os << "dim " << f.torsion_exps.size() + f.free_rank;
            else
                os << f.to_string(p);
            os << "\n";
        }
        if (entries.empty()) os << "0\n";
        return os.str();
    }
};

namespace detail {

/* Ambient relations for a free-module degree piece: none over Z_(p),
 * p * identity over F_p (group-level view of a vector space). */
inline Mat ambient_relations(const GradedRing& ring, std::size_t dim) {
    if (!ring.coeff.is_field()) return Mat(dim, 0);
    Mat r(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) r.at(i, i) = ring.coeff.p;
    return r;
}

}  // namespace detail

/* Homology of the complex at one position and one internal degree, as a
 * presented module over Z_(p) together with its cycle lift. */
inline Subquotient homology_piece_at(const GradedRing& ring, const ChainComplex& c, std::size_t i,
                                     long t) {
    const CoefficientRing grp = CoefficientRing::p_local(ring.coeff.p);
    const std::size_t mid_dim = term_basis(ring, c.terms[i], t).size();
    Mat incoming(mid_dim, 0), outgoing(0, mid_dim);
    if (const PolyMat* din = c.map_into(i)) {
        const FreeModule& src = c.cochain ? c.terms[i - 1] : c.terms[i + 1];
        incoming = scalar_matrix_at_degree(ring, src, c.terms[i], *din, t);
    }
    if (const PolyMat* dout = c.map_from(i)) {
        const FreeModule& dst = c.cochain ? c.terms[i + 1] : c.terms[i - 1];
        outgoing = scalar_matrix_at_degree(ring, c.terms[i], dst, *dout, t);
    }
    Mat rel_q = detail::ambient_relations(ring, mid_dim);
    Mat rel_s = detail::ambient_relations(ring, outgoing.rows);
    return homology_piece(grp, incoming, rel_q, outgoing, rel_s);
}

/* Homology in every position, degreewise on the window. */
inline BigradedModule homology_of_complex(const GradedRing& ring, const ChainComplex& c, long lo,
                                          long hi) {
    if (lo > hi) throw Error("window lo > hi");
    const CoefficientRing grp = CoefficientRing::p_local(ring.coeff.p);
    BigradedModule out;
    out.lo = lo;
    out.hi = hi;
    out.positions = c.terms.size();
    out.p = ring.coeff.p;
    out.field = ring.coeff.is_field();
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        for (long t = lo; t <= hi; ++t) {
            Subquotient h = homology_piece_at(ring, c, i, t);
            Factors f = invariant_factors(grp, h.pres);
            if (!f.is_zero()) out.entries[{static_cast<long>(i), t}] = f;
        }
    }
    return out;
}

}  // namespace gordual
