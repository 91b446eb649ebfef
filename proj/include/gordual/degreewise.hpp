#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "gordual/groebner.hpp"
#include "gordual/homology.hpp"

namespace gordual {

/* Windowed degree-by-degree description of a torsion graded module: a finite
 * abelian p-group per degree plus an action matrix per ring generator.
 *
 * The group at degree d is Z/p^{k_1} + ... with exponents descending; the
 * action of a generator of degree w is an integer matrix from the canonical
 * generators at d to those at d + w, entries reduced mod the target orders.
 * Completeness flags record whether the module is known zero outside the
 * window. */
struct DegreewiseModule {
    long lo = 0, hi = 0;
    long p = 2;
    bool complete_below = true, complete_above = true;

    struct Piece {
        std::vector<long> exps;  // descending torsion exponents
        std::size_t count() const { return exps.size(); }
        long order_exp() const {
            long s = 0;
            for (long k : exps) s += k;
            return s;
        }
        bool operator==(const Piece& o) const { return exps == o.exps; }
    };

    struct Action {
        std::string gen;
        long degree;
        /* maps[d - lo]: piece(d) -> piece(d + degree); present when both
         * endpoints lie in the window. */
        std::vector<std::optional<Mat>> maps;
    };

    std::vector<Piece> pieces;
    std::vector<Action> actions;

    bool in_window(long d) const { return d >= lo && d <= hi; }

    const Piece& piece(long d) const {
        static const Piece zero{};
        return in_window(d) ? pieces[d - lo] : zero;
    }

    const Action* action(const std::string& gen) const {
        for (const auto& a : actions)
            if (a.gen == gen) return &a;
        return nullptr;
    }

    std::optional<Mat> action_map(const std::string& gen, long d) const {
        const Action* a = action(gen);
        if (!a || !in_window(d)) return std::nullopt;
        return a->maps[d - lo];
    }

    KPresentation piece_presentation(long d) const {
        const Piece& pc = piece(d);
        Mat rel(pc.count(), pc.count());
        for (std::size_t i = 0; i < pc.count(); ++i) rel.at(i, i) = pow_int(p, pc.exps[i]);
        return KPresentation{pc.count(), std::move(rel)};
    }

    /* log_p of the image order of the generator action out of degree d. */
    std::optional<long> action_image_exp(const std::string& gen, long d) const {
        const Action* a = action(gen);
        if (!a) return std::nullopt;
        auto m = action_map(gen, d);
        if (!m) return std::nullopt;
        CoefficientRing k = CoefficientRing::p_local(p);
        return image_order_exp(k, piece_presentation(d + a->degree), *m);
    }

    std::string piece_string(long d) const {
        const Piece& pc = piece(d);
        Factors f;
        f.torsion_exps = pc.exps;
        return f.to_string(p);
    }
};

namespace detail {

/* Reduce a p-local rational to an integer residue mod p^k (k >= 1). */
inline Rational canonical_entry(long p, long k, const Rational& x) {
    if (k <= 0) return x;
    return Rational(reduce_mod_p_power(x, p, k));
}

}  // namespace detail

/* Assemble a DegreewiseModule from per-degree subquotients in ambient
 * coordinates. `ambient_action(gen_index, d)` returns the ambient matrix of
 * the generator action from the degree-d ambient space. Free summands inside
 * the window raise NotTorsionOnWindow. */
inline DegreewiseModule build_degreewise(
    const GradedRing& ring, long lo, long hi, const std::function<Subquotient(long)>& piece_at,
    bool complete_below, bool complete_above,
    const std::function<Mat(std::size_t, long)>& ambient_action) {
    if (lo > hi) throw Error("window lo > hi");
    const CoefficientRing grp = CoefficientRing::p_local(ring.coeff.p);
    DegreewiseModule dm;
    dm.lo = lo;
    dm.hi = hi;
    dm.p = ring.coeff.p;
    dm.complete_below = complete_below;
    dm.complete_above = complete_above;

    std::vector<Subquotient> subq;
    std::vector<CanonicalForm> canon;
    for (long d = lo; d <= hi; ++d) {
        subq.push_back(piece_at(d));
        canon.push_back(canonical_form(grp, subq.back().pres));
        const CanonicalForm& c = canon.back();
        if (c.factors.free_rank > 0) throw NotTorsionOnWindowError(d);
        DegreewiseModule::Piece pc;
        /* canonical coordinates are ordered by ascending exponent; report
         * descending */
        std::vector<long> exps = c.kept_exps;
        std::sort(exps.rbegin(), exps.rend());
        pc.exps = std::move(exps);
        dm.pieces.push_back(std::move(pc));
    }

    for (std::size_t g = 0; g < ring.var_count(); ++g) {
        DegreewiseModule::Action act;
        act.gen = ring.var_name(g);
        act.degree = ring.var_degree(g);
        act.maps.resize(hi - lo + 1);
        for (long d = lo; d <= hi; ++d) {
            long d2 = d + act.degree;
            if (!dm.in_window(d2)) continue;
            const Subquotient& src = subq[d - lo];
            const Subquotient& dst = subq[d2 - lo];
            Mat x = ambient_action(g, d);
            Mat y = induced_map(grp, src, dst, x);
            /* to canonical coordinates on both sides, sorted desc by exponent */
            const CanonicalForm& cs = canon[d - lo];
            const CanonicalForm& cd = canon[d2 - lo];
            Mat yc = cd.to_canonical.mul(y).mul(cs.from_canonical);
            auto order_desc = [](const CanonicalForm& c) {
                std::vector<std::size_t> idx(c.kept.size());
                for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
                std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
                    return c.kept_exps[a] > c.kept_exps[b];
                });
                return idx;
            };
            auto si = order_desc(cs);
            auto di = order_desc(cd);
            Mat out(di.size(), si.size());
            for (std::size_t i = 0; i < di.size(); ++i)
                for (std::size_t j = 0; j < si.size(); ++j)
                    out.at(i, j) = detail::canonical_entry(
                        dm.p, cd.kept_exps[di[i]], yc.at(cd.kept[di[i]], cs.kept[si[j]]));
            act.maps[d - lo] = std::move(out);
        }
        dm.actions.push_back(std::move(act));
    }
    return dm;
}

/* Degree piece of a presented module as a presented group on the monomial
 * basis of the ambient free module: relations are the degree-d monomial
 * multiples of the module relations (plus p * identity over F_p). */
inline KPresentation degree_piece_presentation(const GradedRing& ring,
                                               const ModulePresentation& m, long d) {
    auto basis = term_basis(ring, m.ambient, d);
    auto idx = detail::basis_index(basis);
    std::vector<std::vector<Rational>> cols;
    for (const auto& r : m.relations) {
        if (r.is_zero()) continue;
        long rd = element_degree(ring, m.ambient, r);
        for (const auto& mono : monomials_of_degree(ring, d - rd)) {
            std::vector<Rational> col(basis.size(), Rational(0));
            for (const auto& t : r.terms) {
                auto it = idx.find({t.mono.mul(mono).exps, t.comp});
                if (it == idx.end()) throw InternalError("relation term missing from basis");
                col[it->second] += t.coeff;
            }
            cols.push_back(std::move(col));
        }
    }
    std::size_t extra = ring.coeff.is_field() ? basis.size() : 0;
    Mat rel(basis.size(), cols.size() + extra);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < basis.size(); ++i)
            rel.at(i, j) = ring.coeff.normalize(cols[j][i]);
    for (std::size_t j = 0; j < extra; ++j) rel.at(j, cols.size() + j) = ring.coeff.p;
    return KPresentation{basis.size(), std::move(rel)};
}

}  // namespace gordual
