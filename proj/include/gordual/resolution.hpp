#pragma once

#include "gordual/complex.hpp"
#include "gordual/groebner.hpp"

namespace gordual {

namespace detail {
/* Columns of the differential are the given elements of the free module. */
inline PolyMat elements_as_matrix(const GradedRing& ring, const FreeModule& target,
                                  const std::vector<Element>& elems) {
    const FreeModule one = FreeModule::rank_one();
    PolyMat d(target.rank(), elems.size());
    for (std::size_t c = 0; c < elems.size(); ++c)
        for (const auto& t : elems[c].terms)
            d.at(t.comp, c) =
                add(ring, one, d.at(t.comp, c), ring_element(ring, {{t.coeff, t.mono}}));
    return d;
}
}  // namespace detail

/* Free resolution F_length -> ... -> F_0 with H_0 = M, built by iterated
 * Groebner bases and Schreyer syzygies. Not necessarily minimal. */
inline ChainComplex free_resolution(const GradedRing& ring, const ModulePresentation& m,
                                    std::size_t length) {
    if (!ring.computable())
        throw UnsupportedCoefficientsError("ring has symbolic-only generators");
    validate_presentation(ring, m);
    ChainComplex c;
    c.terms.push_back(m.ambient);
    std::vector<Element> rels = m.relations;
    for (std::size_t step = 0; step < length; ++step) {
        GroebnerBasis gb = buchberger(ring, c.terms.back(), rels);
        FreeModule next;
        for (const auto& g : gb.elems)
            next.gen_degrees.push_back(element_degree(ring, c.terms.back(), g));
        c.diffs.push_back(detail::elements_as_matrix(ring, c.terms.back(), gb.elems));
        c.terms.push_back(next);
        rels = gb.elems.empty() ? std::vector<Element>{} : syzygies(ring, gb).relations;
    }
    return c;
}

/* Split off scalar unit entries of the differentials (Gaussian elimination
 * on the complex). A homotopy equivalence, so homology is unchanged; output
 * complexes are smaller and usually minimal. After the basis change that
 * isolates the unit, the adjacent differentials lose the corresponding
 * row/column with no further adjustment. */
inline ChainComplex minimize_complex(const GradedRing& ring, ChainComplex c) {
    if (c.cochain) throw InternalError("minimize_complex expects a chain complex");
    const FreeModule one = FreeModule::rank_one();
    auto is_scalar_unit = [&](const Element& e) {
        return e.terms.size() == 1 && e.terms[0].mono.is_one() &&
               ring.coeff.is_unit(e.terms[0].coeff);
    };
    auto drop_gen = [](FreeModule& fm, std::size_t idx) {
        fm.gen_degrees.erase(fm.gen_degrees.begin() + idx);
        if (idx < fm.gen_names.size()) fm.gen_names.erase(fm.gen_names.begin() + idx);
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < c.diffs.size() && !changed; ++k) {
            PolyMat& a = c.diffs[k];  // terms[k+1] -> terms[k]
            for (std::size_t r = 0; r < a.rows && !changed; ++r)
                for (std::size_t col = 0; col < a.cols && !changed; ++col) {
                    if (!is_scalar_unit(a.at(r, col))) continue;
                    const Rational uinv = ring.coeff.inverse(a.at(r, col).terms[0].coeff);

                    PolyMat a2(a.rows - 1, a.cols - 1);
                    for (std::size_t i = 0, i2 = 0; i < a.rows; ++i) {
                        if (i == r) continue;
                        for (std::size_t j = 0, j2 = 0; j < a.cols; ++j) {
                            if (j == col) continue;
                            Element corr =
                                ring_mul(ring, a.at(i, col), scale(ring, a.at(r, j), uinv));
                            a2.at(i2, j2) = add(ring, one, a.at(i, j), negate(ring, corr));
                            ++j2;
                        }
                        ++i2;
                    }
                    if (k + 1 < c.diffs.size()) {
                        /* incoming differential into terms[k+1]: drop row col */
                        PolyMat& b = c.diffs[k + 1];
                        PolyMat b2(b.rows - 1, b.cols);
                        for (std::size_t i = 0, i2 = 0; i < b.rows; ++i) {
                            if (i == col) continue;
                            for (std::size_t j = 0; j < b.cols; ++j) b2.at(i2, j) = b.at(i, j);
                            ++i2;
                        }
                        c.diffs[k + 1] = std::move(b2);
                    }
                    if (k >= 1) {
                        /* outgoing differential from terms[k]: drop column r */
                        PolyMat& d0 = c.diffs[k - 1];
                        PolyMat d2(d0.rows, d0.cols - 1);
                        for (std::size_t i = 0; i < d0.rows; ++i)
                            for (std::size_t j = 0, j2 = 0; j < d0.cols; ++j) {
                                if (j == r) continue;
                                d2.at(i, j2++) = d0.at(i, j);
                            }
                        c.diffs[k - 1] = std::move(d2);
                    }
                    drop_gen(c.terms[k], r);
                    drop_gen(c.terms[k + 1], col);
                    c.diffs[k] = std::move(a2);
                    changed = true;
                }
        }
    }
    return c;
}

}  // namespace gordual
