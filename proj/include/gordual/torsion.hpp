#pragma once

#include <optional>
#include <sstream>
#include <vector>

#include "gordual/groebner.hpp"

namespace gordual {

/* Certificate for (J-)torsionness: per ambient generator, the recorded
 * killing powers read off the leading-term ideal of the relations. */
struct TorsionCertificate {
    bool torsion = false;
    /* killing_powers[g]: for each ring variable, the exponent k with
     * x_i^k * e_g reducible (unit lead); p_powers[g]: exponent of p (only
     * over Z_(p) with check_p). */
    std::vector<std::vector<long>> killing_powers;
    std::vector<std::optional<long>> p_powers;
    std::string missing;  // human-readable reason when not torsion

    std::string to_string(const GradedRing& ring, const FreeModule& fm) const {
        std::ostringstream os;
        for (std::size_t g = 0; g < killing_powers.size(); ++g) {
            os << fm.gen_name(g) << ": ";
            bool first = true;
            if (g < p_powers.size() && p_powers[g]) {
                os << ring.coeff.p << "^" << *p_powers[g];
                first = false;
            }
            for (std::size_t i = 0; i < killing_powers[g].size(); ++i) {
                if (!first) os << ", ";
                os << ring.var_name(i) << "^" << killing_powers[g][i];
                first = false;
            }
            os << "\n";
        }
        return os.str();
    }
};

namespace detail {

inline TorsionCertificate torsion_certificate(const GradedRing& ring,
                                              const ModulePresentation& m, bool check_p) {
    GroebnerBasis gb = buchberger(ring, m);
    TorsionCertificate cert;
    cert.torsion = true;
    cert.killing_powers.assign(m.ambient.rank(), std::vector<long>(ring.var_count(), 0));
    cert.p_powers.assign(m.ambient.rank(), std::nullopt);
    for (std::size_t g = 0; g < m.ambient.rank(); ++g) {
        for (const auto& e : gb.elems) {
            const Term& lt = e.leading();
            if (lt.comp != static_cast<int>(g)) continue;
            if (lt.mono.is_one()) {
                long v = ring.coeff.is_field() ? 0 : *ring.coeff.valuation(lt.coeff);
                if (!cert.p_powers[g] || v < *cert.p_powers[g]) cert.p_powers[g] = v;
                continue;
            }
            if (!ring.coeff.is_unit(lt.coeff)) continue;
            if (auto pp = lt.mono.pure_power()) {
                auto& k = cert.killing_powers[g][pp->first];
                if (k == 0 || pp->second < k) k = pp->second;
            }
        }
        for (std::size_t i = 0; i < ring.var_count(); ++i)
            if (cert.killing_powers[g][i] == 0) {
                cert.torsion = false;
                cert.missing = "no unit power of " + ring.var_name(i) + " kills generator " +
                               m.ambient.gen_name(g);
                return cert;
            }
        if (check_p && !ring.coeff.is_field() && !cert.p_powers[g]) {
            cert.torsion = false;
            cert.missing =
                "no power of " + std::to_string(ring.coeff.p) + " kills generator " +
                m.ambient.gen_name(g);
            return cert;
        }
    }
    return cert;
}

}  // namespace detail

/* Torsion over the maximal ideal: each generator is killed by a power of
 * each variable and, over Z_(p), by a power of p. */
inline TorsionCertificate is_torsion(const GradedRing& ring, const ModulePresentation& m) {
    return detail::torsion_certificate(ring, m, true);
}

/* Torsion over J = (positive-degree variables) only; p-torsion not required. */
inline TorsionCertificate is_j_torsion(const GradedRing& ring, const ModulePresentation& m) {
    return detail::torsion_certificate(ring, m, false);
}

/* Degree bounds of a torsion module read off the certificate: the module is
 * zero outside [min generator degree, computed upper bound]. */
struct DegreeBounds {
    long lo, hi;
};

inline std::optional<DegreeBounds> torsion_degree_bounds(const GradedRing& ring,
                                                         const ModulePresentation& m,
                                                         const TorsionCertificate& cert) {
    if (!cert.torsion) return std::nullopt;
    if (m.ambient.rank() == 0) return DegreeBounds{0, 0};
    long lo = m.ambient.gen_degrees[0], hi = m.ambient.gen_degrees[0];
    for (std::size_t g = 0; g < m.ambient.rank(); ++g) {
        long base = m.ambient.gen_degrees[g];
        lo = std::min(lo, base);
        long top = base;
        for (std::size_t i = 0; i < ring.var_count(); ++i)
            top += (cert.killing_powers[g][i] - 1) * ring.var_degree(i);
        hi = std::max(hi, top);
    }
    return DegreeBounds{lo, hi};
}

}  // namespace gordual
