#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gordual/presentation.hpp"

namespace gordual {

/* Completed Groebner basis of a submodule of a free graded module.
 *
 * Over F_p this is a reduced basis in the classical sense; over Z_(p) it is
 * a strong basis: membership and normal forms use coefficient divisibility,
 * leading coefficients are normalized to p^k. Since Z_(p) is a DVR, any two
 * coefficients are comparable under divisibility, so G-polynomials reduce to
 * zero on the nose and S-pairs suffice. */
struct GroebnerBasis {
    FreeModule ambient;
    std::vector<Element> elems;
    bool strong = false;  // true over Z_(p)
};

namespace detail {

/* One strong-division step target: first basis element whose leading term
 * divides `t` (monomial divisibility plus coefficient divisibility). */
inline std::optional<std::size_t> find_reducer(const GradedRing& ring,
                                               const std::vector<Element>& basis, const Term& t) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Term& lt = basis[i].leading();
        if (lt.comp != t.comp) continue;
        if (!lt.mono.divides(t.mono)) continue;
        if (!ring.coeff.divides(lt.coeff, t.coeff)) continue;
        return i;
    }
    return std::nullopt;
}

/* Scale so the leading coefficient is 1 (field) or p^k (Z_(p)). */
inline Element normalize_lead(const GradedRing& ring, const Element& e) {
    if (e.is_zero()) return e;
    return scale(ring, e, ring.coeff.inverse(ring.coeff.unit_part(e.leading().coeff)));
}

}  // namespace detail

/* Record of one division: v = sum quotients[i] * basis[i] + remainder. */
struct DivisionRecord {
    std::vector<std::pair<std::size_t, Element>> quotients;  // basis index, ring element
};

/* Full normal form: no term of the remainder is strongly divisible by any
 * leading term of the basis. */
inline Element normal_form(const GradedRing& ring, const FreeModule& fm,
                           const std::vector<Element>& basis, Element v,
                           DivisionRecord* record = nullptr) {
    std::vector<Term> remainder;
    while (!v.is_zero()) {
        const Term t = v.leading();
        auto i = detail::find_reducer(ring, basis, t);
        if (!i) {
            remainder.push_back(t);
            v.terms.erase(v.terms.begin());
            continue;
        }
        const Element& g = basis[*i];
        Rational c = ring.coeff.quotient(t.coeff, g.leading().coeff);
        Monomial m = t.mono.quotient(g.leading().mono);
        v = axpy(ring, fm, v, ring.coeff.neg(c), m, g);
        if (record) record->quotients.push_back({*i, ring_element(ring, {{c, m}})});
    }
    Element out;
    out.terms = std::move(remainder);
    return out;
}

inline Element normal_form(const GradedRing& ring, const GroebnerBasis& gb, const Element& v) {
    for (const auto& t : v.terms)
        if (t.comp < 0 || static_cast<std::size_t>(t.comp) >= gb.ambient.rank())
            throw AmbientMismatchError("element component out of range");
    return normal_form(ring, gb.ambient, gb.elems, v);
}

namespace detail {

struct Pair {
    long degree;  // internal degree of the S-pair lcm term
    std::size_t i, j;
};

inline bool pair_less(const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

/* S-pair data for basis elements with the same leading component. */
struct SPair {
    Rational ci, cj;
    Monomial mi, mj;  // S = ci*mi*g_i - cj*mj*g_j
    long degree;
};

inline SPair make_spair(const GradedRing& ring, const FreeModule& fm, const Element& gi,
                        const Element& gj) {
    const Term& a = gi.leading();
    const Term& b = gj.leading();
    Monomial gamma = a.mono.lcm(b.mono);
    Rational c = ring.coeff.coeff_lcm(a.coeff, b.coeff);
    SPair s;
    s.ci = ring.coeff.quotient(c, a.coeff);
    s.cj = ring.coeff.quotient(c, b.coeff);
    s.mi = gamma.quotient(a.mono);
    s.mj = gamma.quotient(b.mono);
    s.degree = gamma.degree(ring) + fm.gen_degrees[a.comp];
    return s;
}

}  // namespace detail

/* Buchberger completion. Deterministic: pairs are processed in (degree,
 * insertion index) order, and the result is minimalized, tail-reduced and
 * sorted by leading term. */
inline GroebnerBasis buchberger(const GradedRing& ring, const FreeModule& fm,
                                const std::vector<Element>& gens) {
    if (!ring.computable())
        throw UnsupportedCoefficientsError("ring has symbolic-only generators");
    GroebnerBasis gb{fm, {}, !ring.coeff.is_field()};
    auto& basis = gb.elems;

    std::vector<detail::Pair> pairs;
    auto add_elem = [&](Element e) {
        e = detail::normalize_lead(ring, e);
        std::size_t idx = basis.size();
        for (std::size_t i = 0; i < idx; ++i) {
            if (basis[i].leading().comp != e.leading().comp) continue;
            /* Product criterion: only valid in the ideal case (rank one)
             * over a field; it fails for genuine module elements. */
            if (ring.coeff.is_field() && fm.rank() == 1 &&
                !basis[i].leading().mono.has_common_factor(e.leading().mono))
                continue;
            detail::SPair s = detail::make_spair(ring, fm, basis[i], e);
            pairs.push_back({s.degree, i, idx});
        }
        basis.push_back(std::move(e));
        std::sort(pairs.begin(), pairs.end(), detail::pair_less);
    };

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!is_homogeneous(ring, fm, g))
            throw NonHomogeneousError("generator " + to_string(ring, fm, g));
        Element r = normal_form(ring, fm, basis, g);
        if (!r.is_zero()) add_elem(std::move(r));
    }

    while (!pairs.empty()) {
        detail::Pair p = pairs.front();
        pairs.erase(pairs.begin());
        detail::SPair s = detail::make_spair(ring, fm, basis[p.i], basis[p.j]);
        Element spoly = add(ring, fm, mul_scalar_term(ring, basis[p.i], s.ci, s.mi),
                            mul_scalar_term(ring, negate(ring, basis[p.j]), s.cj, s.mj));
        Element r = normal_form(ring, fm, basis, spoly);
        if (!r.is_zero()) add_elem(std::move(r));
    }

    /* Minimalize: drop elements whose leading term another leading term
     * strongly divides, then tail-reduce against the rest. */
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Term &ti = basis[i].leading(), &tj = basis[j].leading();
            if (tj.comp != ti.comp || !tj.mono.divides(ti.mono) ||
                !ring.coeff.divides(tj.coeff, ti.coeff))
                continue;
            bool mutual = ti.mono == tj.mono && ring.coeff.divides(ti.coeff, tj.coeff);
            if (!mutual || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Element> kept;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) kept.push_back(basis[i]);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Element> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Element head;
        head.terms = {kept[i].leading()};
        Element tail = kept[i];
        tail.terms.erase(tail.terms.begin());
        tail = normal_form(ring, fm, others, tail);
        kept[i] = add(ring, fm, head, tail);
    }
    std::sort(kept.begin(), kept.end(), [&](const Element& x, const Element& y) {
        return compare_terms(ring, fm, x.leading(), y.leading()) < 0;
    });
    gb.elems = std::move(kept);
    return gb;
}

inline GroebnerBasis buchberger(const GradedRing& ring, const ModulePresentation& m) {
    return buchberger(ring, m.ambient, m.relations);
}

/* Syzygies of the basis elements, by reducing every S-pair to zero and
 * recording the division. The output presents the syzygy module on one
 * generator per basis element, in that element's internal degree. */
inline ModulePresentation syzygies(const GradedRing& ring, const GroebnerBasis& gb) {
    FreeModule fm_syz;
    for (const auto& g : gb.elems) fm_syz.gen_degrees.push_back(element_degree(ring, gb.ambient, g));

    ModulePresentation out{fm_syz, {}};
    std::vector<detail::Pair> pairs;
    for (std::size_t i = 0; i < gb.elems.size(); ++i)
        for (std::size_t j = i + 1; j < gb.elems.size(); ++j) {
            if (gb.elems[i].leading().comp != gb.elems[j].leading().comp) continue;
            detail::SPair s = detail::make_spair(ring, gb.ambient, gb.elems[i], gb.elems[j]);
            pairs.push_back({s.degree, i, j});
        }
    std::sort(pairs.begin(), pairs.end(), detail::pair_less);

    for (const auto& p : pairs) {
        detail::SPair s = detail::make_spair(ring, gb.ambient, gb.elems[p.i], gb.elems[p.j]);
        Element spoly = add(ring, gb.ambient, mul_scalar_term(ring, gb.elems[p.i], s.ci, s.mi),
                            mul_scalar_term(ring, negate(ring, gb.elems[p.j]), s.cj, s.mj));
        DivisionRecord rec;
        Element r = normal_form(ring, gb.ambient, gb.elems, spoly, &rec);
        if (!r.is_zero())
            throw InternalError("S-pair does not reduce to zero against a completed basis");
        std::vector<Term> terms;
        terms.push_back(Term{s.ci, s.mi, static_cast<int>(p.i)});
        terms.push_back(Term{ring.coeff.neg(s.cj), s.mj, static_cast<int>(p.j)});
        for (const auto& [idx, q] : rec.quotients)
            for (const auto& t : q.terms)
                terms.push_back(Term{ring.coeff.neg(t.coeff), t.mono, static_cast<int>(idx)});
        Element syz = normalize_terms(ring, fm_syz, std::move(terms));
        if (!syz.is_zero()) out.relations.push_back(std::move(syz));
    }
    return out;
}

}  // namespace gordual
