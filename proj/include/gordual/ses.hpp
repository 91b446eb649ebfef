#pragma once

#include <sstream>

#include "gordual/hilbert.hpp"
#include "gordual/torsion.hpp"

namespace gordual {

/* Composition factors of the short exact sequence at the level of the base
 * ring K = Z_(p):
 *
 *   0 -> Sigma^a Ext_K(M, K) -> R^* -> Sigma^{a+1} Hom_K(M, K) -> 0
 *
 * Per internal degree u, the Ext contribution is the torsion part of the
 * K-module M_{a-u} and the Hom contribution is K^r with r the free rank of
 * M_{a+1-u}. Extension data is not computed; only the factors are. */
struct SesReport {
    long a = 0;
    long lo = 0, hi = 0;
    long p = 2;

    struct Row {
        long u;                       // internal degree of R^*
        std::vector<long> ext_exps;   // torsion invariant factors
        long hom_rank = 0;            // free rank of the Hom term
        bool is_zero() const { return ext_exps.empty() && hom_rank == 0; }
    };
    std::vector<Row> rows;

    const Row* row(long u) const {
        for (const auto& r : rows)
            if (r.u == u) return &r;
        return nullptr;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "K-level factors with shifts a = " << a << " (Ext term) and a+1 = " << a + 1
           << " (Hom term)\n";
        os << "degree | Ext_K part | Hom_K part | predicted piece\n";
        for (const auto& r : rows) {
            if (r.is_zero()) continue;
            Factors ext;
            ext.torsion_exps = r.ext_exps;
            Factors whole = ext;
            whole.free_rank = r.hom_rank;
            os << r.u << " | " << ext.to_string(p) << " | ";
            if (r.hom_rank == 0)
                os << "0";
            else
                os << "Z(" << p << ")^" << r.hom_rank;
            os << " | " << whole.to_string(p) << "\n";
        }
        return os.str();
    }
};

/* Degreewise K-level data for the short exact sequence. Requires Z_(p)
 * coefficients and a J-power-torsion module (J the ideal of positive-degree
 * variables; p-torsion is not required). */
inline SesReport k_level_ses(const GradedRing& ring, const ModulePresentation& m, long lo,
                             long hi) {
    if (ring.coeff.is_field())
        throw UnsupportedCoefficientsError("K-level sequence requires Z_(p) coefficients");
    if (lo > hi) throw Error("window lo > hi");
    TorsionCertificate cert = is_j_torsion(ring, m);
    if (!cert.torsion) throw NotJTorsionError(cert.missing);

    SesReport rep;
    rep.a = gorenstein_shift_symbolic(ring).a;
    rep.lo = lo;
    rep.hi = hi;
    rep.p = ring.coeff.p;
    const CoefficientRing grp = CoefficientRing::p_local(ring.coeff.p);

    for (long u = lo; u <= hi; ++u) {
        SesReport::Row row;
        row.u = u;
        Factors ext_src = invariant_factors(grp, degree_piece_presentation(ring, m, rep.a - u));
        row.ext_exps = ext_src.torsion_exps;
        Factors hom_src =
            invariant_factors(grp, degree_piece_presentation(ring, m, rep.a + 1 - u));
        row.hom_rank = hom_src.free_rank;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace gordual
