#pragma once

#include <map>
#include <sstream>

#include "gordual/degreewise.hpp"

namespace gordual {

/* Per-degree size data: vector-space rank / free rank, plus torsion order
 * exponent for p-local coefficients. Missing degrees in the window are zero. */
struct HilbertData {
    long lo = 0, hi = 0;
    long p = 2;
    bool field = false;

    struct Entry {
        long rank = 0;       // dimension over F_p, free rank over Z_(p)
        long order_exp = 0;  // log_p of the torsion order (Z_(p) case)
        bool is_zero() const { return rank == 0 && order_exp == 0; }
    };
    std::map<long, Entry> entries;

    Entry at(long d) const {
        auto it = entries.find(d);
        return it == entries.end() ? Entry{} : it->second;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (long d = lo; d <= hi; ++d) {
            Entry e = at(d);
            os << d << "  ";
            if (field) {
                os << "dim " << e.rank;
            } else {
                if (e.rank > 0) os << "free rank " << e.rank << (e.order_exp ? " + " : "");
                if (e.order_exp > 0 || e.rank == 0)
                    os << "order " << Int(pow_int(p, e.order_exp)).str();
            }
            os << "\n";
        }
        return os.str();
    }
};

inline HilbertData hilbert_series(const GradedRing& ring, const ModulePresentation& m, long lo,
                                  long hi) {
    if (lo > hi) throw Error("window lo > hi");
    validate_presentation(ring, m);
    const CoefficientRing grp = CoefficientRing::p_local(ring.coeff.p);
    HilbertData h;
    h.lo = lo;
    h.hi = hi;
    h.p = ring.coeff.p;
    h.field = ring.coeff.is_field();
    for (long d = lo; d <= hi; ++d) {
        Factors f = invariant_factors(grp, degree_piece_presentation(ring, m, d));
        HilbertData::Entry e;
        if (h.field) {
            e.rank = static_cast<long>(f.torsion_exps.size());
        } else {
            e.rank = f.free_rank;
            e.order_exp = f.order_exp();
        }
        if (!e.is_zero()) h.entries[d] = e;
    }
    return h;
}

/* Degreewise case: finite orders per degree. Degrees outside the window of
 * the data are an error unless the completeness flags say zero. */
inline HilbertData hilbert_series(const DegreewiseModule& m, long lo, long hi) {
    if (lo > hi) throw Error("window lo > hi");
    HilbertData h;
    h.lo = lo;
    h.hi = hi;
    h.p = m.p;
    h.field = false;
    for (long d = lo; d <= hi; ++d) {
        if (!m.in_window(d)) {
            if ((d < m.lo && !m.complete_below) || (d > m.hi && !m.complete_above))
                throw InfiniteInWindowError(d);
            continue;
        }
        HilbertData::Entry e;
        e.order_exp = m.piece(d).order_exp();
        if (!e.is_zero()) h.entries[d] = e;
    }
    return h;
}

}  // namespace gordual
