#pragma once

#include "gordual/presentation.hpp"

namespace fixtures {

using namespace gordual;

inline GradedRing f2x(long w = 1) {
    return make_ring(CoefficientRing::prime_field(2), {{"x", w}});
}
inline GradedRing f2xy() {
    return make_ring(CoefficientRing::prime_field(2), {{"x", 1}, {"y", 1}});
}
inline GradedRing f3xy() {
    return make_ring(CoefficientRing::prime_field(3), {{"x", 2}, {"y", 4}});
}
inline GradedRing zpv1(long p) {
    return make_ring(CoefficientRing::p_local(p), {{"v1", 2 * p - 2}});
}

inline Element el(const GradedRing& ring, std::vector<std::pair<long, std::vector<int>>> terms) {
    std::vector<std::pair<Rational, Monomial>> ts;
    for (auto& [c, e] : terms) ts.push_back({Rational(c), Monomial{e}});
    return ring_element(ring, std::move(ts));
}

/* A/(x^k) over a one-variable ring. */
inline ModulePresentation truncated(const GradedRing& ring, int k) {
    return quotient_module(ring, {el(ring, {{1, {k}}})});
}

/* A/(p^a, v^b) over Z_(p)[v]. */
inline ModulePresentation pair_quotient(const GradedRing& ring, long pexp, int vexp) {
    long pa = 1;
    for (long i = 0; i < pexp; ++i) pa *= ring.coeff.p;
    return quotient_module(ring, {el(ring, {{pa, {0}}}), el(ring, {{1, {vexp}}})});
}

/* F_2[x,y]/(x^2, xy, y^3). */
inline ModulePresentation monomial_example(const GradedRing& ring) {
    return quotient_module(
        ring, {el(ring, {{1, {2, 0}}}), el(ring, {{1, {1, 1}}}), el(ring, {{1, {0, 3}}})});
}

/* Z_(2)[v1]/(v1^2, 2 v1): degree 0 free over K, degree 2 torsion. */
inline ModulePresentation mixed_example(const GradedRing& ring) {
    return quotient_module(ring, {el(ring, {{1, {2}}}), el(ring, {{2, {1}}})});
}

}  // namespace fixtures
