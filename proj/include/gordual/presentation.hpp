#pragma once

#include <string>
#include <vector>

#include "gordual/element.hpp"

namespace gordual {

/* Finitely presented graded module: a free ambient module and a list of
 * homogeneous relations inside it. */
struct ModulePresentation {
    FreeModule ambient;
    std::vector<Element> relations;
};

inline void validate_presentation(const GradedRing& ring, const ModulePresentation& m) {
    for (const auto& r : m.relations) {
        for (const auto& t : r.terms)
            if (t.comp < 0 || static_cast<std::size_t>(t.comp) >= m.ambient.rank())
                throw AmbientMismatchError("relation component out of range");
        if (!is_homogeneous(ring, m.ambient, r))
            throw NonHomogeneousError("relation " + to_string(ring, m.ambient, r));
    }
}

/* A / (elems): quotient of the rank-one free module by ring elements. */
inline ModulePresentation quotient_module(const GradedRing& ring,
                                          const std::vector<Element>& elems) {
    ModulePresentation m{FreeModule::rank_one(), elems};
    validate_presentation(ring, m);
    return m;
}

/* The residue field k = A / (p, x_1, ..., x_n) as a module presentation. */
inline ModulePresentation residue_field_module(const GradedRing& ring) {
    std::vector<Element> rels;
    if (!ring.coeff.is_field())
        rels.push_back(ring_element(ring, {{Rational(ring.coeff.p), Monomial::one(ring.var_count())}}));
    for (std::size_t i = 0; i < ring.var_count(); ++i)
        rels.push_back(ring_monomial(ring, Monomial::var(ring.var_count(), i)));
    return quotient_module(ring, rels);
}

}  // namespace gordual
