#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "gordual/monomial.hpp"

namespace gordual {

/* A free graded module, described by its generator degrees. Generator names
 * are optional display data. */
struct FreeModule {
    std::vector<long> gen_degrees;
    std::vector<std::string> gen_names;

    static FreeModule rank_one() { return FreeModule{{0}, {}}; }

    std::size_t rank() const { return gen_degrees.size(); }

    std::string gen_name(std::size_t i) const {
        if (i < gen_names.size()) return gen_names[i];
        return "e" + std::to_string(i);
    }
};

struct Term {
    Rational coeff;
    Monomial mono;
    int comp;

    long degree(const GradedRing& ring, const FreeModule& fm) const {
        return mono.degree(ring) + fm.gen_degrees[comp];
    }
};

/* Term order: graded reverse lexicographic refined by module position.
 * Compare by total internal degree, then by component (lower index greater),
 * then revlex on the exponent vector. Returns >0 when a > b. */
inline int compare_terms(const GradedRing& ring, const FreeModule& fm, const Term& a,
                         const Term& b) {
    long da = a.degree(ring, fm), db = b.degree(ring, fm);
    if (da != db) return da < db ? -1 : 1;
    if (a.comp != b.comp) return a.comp > b.comp ? -1 : 1;
    for (std::size_t i = a.mono.exps.size(); i-- > 0;) {
        if (a.mono.exps[i] != b.mono.exps[i])
            return a.mono.exps[i] > b.mono.exps[i] ? -1 : 1;
    }
    return 0;
}

/* Element of a free graded module: terms sorted descending, leading first. */
struct Element {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& leading() const {
        if (terms.empty()) throw InternalError("leading term of zero element");
        return terms.front();
    }
};

/* Sort, merge equal module monomials, and drop zero coefficients. */
inline Element normalize_terms(const GradedRing& ring, const FreeModule& fm,
                               std::vector<Term> ts) {
    for (auto& t : ts) t.coeff = ring.coeff.normalize(t.coeff);
    std::sort(ts.begin(), ts.end(), [&](const Term& x, const Term& y) {
        return compare_terms(ring, fm, x, y) > 0;
    });
    Element out;
    for (auto& t : ts) {
        if (t.coeff == 0) continue;
        if (!out.terms.empty() && out.terms.back().comp == t.comp &&
            out.terms.back().mono == t.mono) {
            out.terms.back().coeff = ring.coeff.add(out.terms.back().coeff, t.coeff);
            if (out.terms.back().coeff == 0) out.terms.pop_back();
        } else {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

inline Element add(const GradedRing& ring, const FreeModule& fm, const Element& a,
                   const Element& b) {
    std::vector<Term> ts = a.terms;
    ts.insert(ts.end(), b.terms.begin(), b.terms.end());
    return normalize_terms(ring, fm, std::move(ts));
}

inline Element scale(const GradedRing& ring, const Element& a, const Rational& c) {
    Element out;
    Rational cn = ring.coeff.normalize(c);
    if (cn == 0) return out;
    out.terms = a.terms;
    for (auto& t : out.terms) t.coeff = ring.coeff.mul(t.coeff, cn);
    out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                   [](const Term& t) { return t.coeff == 0; }),
                    out.terms.end());
    return out;
}

inline Element negate(const GradedRing& ring, const Element& a) {
    return scale(ring, a, Rational(-1));
}

/* Multiply by a coefficient times a monomial (component unchanged). */
inline Element mul_scalar_term(const GradedRing& ring, const Element& a, const Rational& c,
                               const Monomial& m) {
    Element out;
    Rational cn = ring.coeff.normalize(c);
    if (cn == 0) return out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) {
        Rational nc = ring.coeff.mul(t.coeff, cn);
        if (nc == 0) continue;
        out.terms.push_back(Term{nc, t.mono.mul(m), t.comp});
    }
    return out;
}

inline Element axpy(const GradedRing& ring, const FreeModule& fm, const Element& a,
                    const Rational& c, const Monomial& m, const Element& b) {
    return add(ring, fm, a, mul_scalar_term(ring, b, c, m));
}

/* Ring elements are elements of the rank-one free module in degree 0. */
inline Element ring_element(const GradedRing& ring, std::vector<std::pair<Rational, Monomial>> ts) {
    std::vector<Term> terms;
    for (auto& [c, m] : ts) terms.push_back(Term{c, m, 0});
    return normalize_terms(ring, FreeModule::rank_one(), std::move(terms));
}

inline Element ring_monomial(const GradedRing& ring, const Monomial& m, Rational c = 1) {
    return ring_element(ring, {{c, m}});
}

/* Product of two ring elements. */
inline Element ring_mul(const GradedRing& ring, const Element& a, const Element& b) {
    std::vector<Term> ts;
    for (const auto& s : a.terms)
        for (const auto& t : b.terms)
            ts.push_back(Term{ring.coeff.mul(s.coeff, t.coeff), s.mono.mul(t.mono), 0});
    return normalize_terms(ring, FreeModule::rank_one(), std::move(ts));
}

inline bool is_homogeneous(const GradedRing& ring, const FreeModule& fm, const Element& a) {
    if (a.is_zero()) return true;
    long d = a.terms.front().degree(ring, fm);
    for (const auto& t : a.terms)
        if (t.degree(ring, fm) != d) return false;
    return true;
}

/* Internal degree of a homogeneous nonzero element. */
inline long element_degree(const GradedRing& ring, const FreeModule& fm, const Element& a) {
    if (a.is_zero()) throw InternalError("degree of zero element");
    if (!is_homogeneous(ring, fm, a))
        throw NonHomogeneousError(std::string("mixed degrees in element"));
    return a.terms.front().degree(ring, fm);
}

inline std::string to_string(const GradedRing& ring, const FreeModule& fm, const Element& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (const auto& t : a.terms) {
        if (!s.empty()) s += " + ";
        std::string c = ring.coeff.to_string(t.coeff);
        if (c != "1" || t.mono.is_one()) s += c;
        if (!t.mono.is_one()) {
            if (s.size() && s.back() != ' ' && c != "1") s += "*";
            s += t.mono.to_string(ring);
        }
        if (fm.rank() > 1 || !fm.gen_names.empty()) s += "*" + fm.gen_name(t.comp);
    }
    return s;
}

}  // namespace gordual
