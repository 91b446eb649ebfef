#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gordual/linalg.hpp"

namespace gordual {

/* Invariant-factor data of a finitely generated Z_(p)-module:
 * free rank plus torsion orders p^{k_1} >= p^{k_2} >= ... (exponents). */
struct Factors {
    long free_rank = 0;
    std::vector<long> torsion_exps;  // descending

    bool is_zero() const { return free_rank == 0 && torsion_exps.empty(); }
    bool is_finite() const { return free_rank == 0; }

    long order_exp() const {
        long s = 0;
        for (long k : torsion_exps) s += k;
        return s;
    }

    bool operator==(const Factors& o) const {
        return free_rank == o.free_rank && torsion_exps == o.torsion_exps;
    }
    bool operator!=(const Factors& o) const { return !(*this == o); }

    std::string to_string(long p) const {
        if (is_zero()) return "0";
        std::string s;
        auto app = [&](const std::string& x) {
            if (!s.empty()) s += " + ";
            s += x;
        };
        if (free_rank > 0) {
            std::string base = "Z(" + std::to_string(p) + ")";
            app(free_rank == 1 ? base : base + "^" + std::to_string(free_rank));
        }
        long i = 0;
        while (i < static_cast<long>(torsion_exps.size())) {
            long j = i;
            while (j < static_cast<long>(torsion_exps.size()) && torsion_exps[j] == torsion_exps[i])
                ++j;
            std::string cyc = "Z/" + Int(pow_int(p, torsion_exps[i])).str();
            app(j - i == 1 ? cyc : cyc + "^" + std::to_string(j - i));
            i = j;
        }
        return s;
    }
};

/* Finitely presented module over Z_(p): coker(rel) on `gens` generators.
 * Prime-field data embeds by adding p * identity to the relations. */
struct KPresentation {
    std::size_t gens = 0;
    Mat rel;  // gens x (number of relations)

    static KPresentation free_module(std::size_t n) { return KPresentation{n, Mat(n, 0)}; }
};

inline Factors invariant_factors(const CoefficientRing& k, const KPresentation& m) {
    SnfResult s = smith_normal_form(k, m.rel);
    Factors f;
    f.free_rank = static_cast<long>(m.gens) - static_cast<long>(s.rank());
    for (long v : s.diag_vals)
        if (v > 0) f.torsion_exps.push_back(v);
    std::sort(f.torsion_exps.rbegin(), f.torsion_exps.rend());
    return f;
}

/* A subquotient H = span(lift) / (im incoming + relations), presented on the
 * columns of `lift` as generators; `lift` expresses them in the ambient
 * coordinates of the middle term. */
struct Subquotient {
    KPresentation pres;
    Mat lift;  // ambient_dim x pres.gens
};

/* Homology at Q of  P --incoming--> Q --outgoing--> S  where Q has ambient
 * relations rel_q and S has rel_s (their generators' defining relations).
 * incoming: dim_q x a, outgoing: dim_s x dim_q. */
inline Subquotient homology_piece(const CoefficientRing& k, const Mat& incoming, const Mat& rel_q,
                                  const Mat& outgoing, const Mat& rel_s) {
    const std::size_t q = rel_q.rows;
    Mat b = outgoing.hcat(rel_s);
    Mat w = kernel_basis(k, b);
    Mat lift = w.top_rows(q);
    Mat denom = incoming.hcat(rel_q);
    auto z = solve(k, lift, denom);
    if (!z) throw InternalError("homology: boundaries do not lie among cycles");
    Mat rel = z->hcat(kernel_basis(k, lift));
    return Subquotient{KPresentation{lift.cols, std::move(rel)}, std::move(lift)};
}

/* Matrix of the map H -> H2 induced by the ambient map X on generator
 * coordinates; X must carry cycles to cycles. */
inline Mat induced_map(const CoefficientRing& k, const Subquotient& h, const Subquotient& h2,
                       const Mat& x) {
    Mat img = x.mul(h.lift);
    auto y = solve(k, h2.lift, img);
    if (!y) throw InternalError("induced map does not preserve cycles");
    return *y;
}

/* Is the induced map an isomorphism?  For finitely generated modules over
 * Z_(p): equal invariant factors plus surjectivity suffices. */
inline bool is_isomorphism(const CoefficientRing& k, const KPresentation& src,
                           const KPresentation& dst, const Mat& map) {
    if (invariant_factors(k, src) != invariant_factors(k, dst)) return false;
    KPresentation coker{dst.gens, map.hcat(dst.rel)};
    return invariant_factors(k, coker).is_zero();
}

/* log_p of the image order of a map into a finite module. */
inline long image_order_exp(const CoefficientRing& k, const KPresentation& dst, const Mat& map) {
    Factors fd = invariant_factors(k, dst);
    if (!fd.is_finite()) throw InternalError("image_order_exp on infinite target");
    KPresentation coker{dst.gens, map.hcat(dst.rel)};
    Factors fc = invariant_factors(k, coker);
    return fd.order_exp() - fc.order_exp();
}

/* Invariant factors of the image of a map into a presented module: the
 * subgroup generated by the columns of `map` inside coker(dst.rel). */
inline Factors image_factors(const CoefficientRing& k, const KPresentation& dst, const Mat& map) {
    Mat w = kernel_basis(k, map.hcat(dst.rel));
    Mat rel = w.top_rows(map.cols);
    return invariant_factors(k, KPresentation{map.cols, std::move(rel)});
}

/* Canonical decomposition of a presented module: coordinates in which the
 * relations are diagonal. Rows with unit diagonal are dropped; `kept` lists
 * the surviving canonical coordinates with their torsion exponent (or -1 for
 * a free coordinate). */
struct CanonicalForm {
    Factors factors;
    std::vector<std::size_t> kept;
    std::vector<long> kept_exps;  // -1 marks a free coordinate
    Mat to_canonical;             // full gens x gens transform U
    Mat from_canonical;           // U^{-1}
};

inline CanonicalForm canonical_form(const CoefficientRing& k, const KPresentation& m) {
    SnfResult s = smith_normal_form(k, m.rel);
    CanonicalForm c;
    c.to_canonical = s.u;
    c.from_canonical = s.uinv;
    for (std::size_t i = 0; i < m.gens; ++i) {
        long v = i < s.diag_vals.size() ? s.diag_vals[i] : -1;
        if (v == 0) continue;  // unit relation: trivial summand
        c.kept.push_back(i);
        c.kept_exps.push_back(v);
        if (v < 0)
            ++c.factors.free_rank;
        else
            c.factors.torsion_exps.push_back(v);
    }
    std::sort(c.factors.torsion_exps.rbegin(), c.factors.torsion_exps.rend());
    return c;
}

}  // namespace gordual
