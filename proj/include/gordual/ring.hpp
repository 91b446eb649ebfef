#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gordual/rational.hpp"

namespace gordual {

struct Generator {
    std::string name;
    long degree;
};

/* A graded polynomial ring over F_p or Z_(p).
 *
 * Polynomial generators are the computational variables; they must have
 * strictly positive degree. Laurent and formal generators exist only for the
 * symbolic shift calculus: a ring carrying either is not usable by the
 * Groebner engine. */
struct GradedRing {
    CoefficientRing coeff;
    std::vector<Generator> polynomial_gens;
    std::vector<Generator> laurent_gens;
    std::vector<Generator> formal_gens;

    std::size_t var_count() const { return polynomial_gens.size(); }

    long var_degree(std::size_t i) const { return polynomial_gens[i].degree; }

    const std::string& var_name(std::size_t i) const { return polynomial_gens[i].name; }

    std::optional<std::size_t> find_var(const std::string& name) const {
        for (std::size_t i = 0; i < polynomial_gens.size(); ++i)
            if (polynomial_gens[i].name == name) return i;
        return std::nullopt;
    }

    long max_var_degree() const {
        long m = 0;
        for (const auto& g : polynomial_gens) m = std::max(m, g.degree);
        return m;
    }

    /* True when the Groebner/homological engines can run on this ring. */
    bool computable() const { return laurent_gens.empty() && formal_gens.empty(); }
};

inline GradedRing make_ring(CoefficientRing coeff, std::vector<Generator> gens,
                            std::vector<Generator> laurent = {},
                            std::vector<Generator> formal = {}) {
    std::set<std::string> seen;
    auto check_name = [&](const Generator& g) {
        if (!seen.insert(g.name).second) throw DuplicateNameError(g.name);
    };
    for (const auto& g : gens) {
        check_name(g);
        if (g.degree <= 0) throw NonPositiveDegreeError(g.name, g.degree);
    }
    for (const auto& g : laurent) {
        check_name(g);
        if (g.degree <= 0) throw NonPositiveDegreeError(g.name, g.degree);
    }
    for (const auto& g : formal) check_name(g);
    return GradedRing{coeff, std::move(gens), std::move(laurent), std::move(formal)};
}

/* Result of the symbolic shift calculus.
 *
 * b is the internal-degree shift, n the generator count over the base, c the
 * base shift, and a = b + c - n. When Laurent generators are present the
 * shift is only defined mod `modulus`. */
struct ShiftResult {
    long b;
    long n;
    long c;
    long a;
    std::optional<long> modulus;
};

inline ShiftResult gorenstein_shift_symbolic(const GradedRing& ring) {
    long b = 0, n = 0;
    for (const auto& g : ring.polynomial_gens) {
        b -= g.degree;
        ++n;
    }
    for (const auto& g : ring.formal_gens) {
        b -= g.degree;
        ++n;
    }
    long c = ring.coeff.base_shift();
    std::optional<long> modulus;
    if (!ring.laurent_gens.empty()) {
        long m = 0;
        for (const auto& g : ring.laurent_gens) m = std::gcd(m, g.degree);
        modulus = m;
    }
    return ShiftResult{b, n, c, b + c - n, modulus};
}

/* D = sum of the generator degrees 2(p^i - 1), i = 1..n, by the closed
 * formula 2((p^{n+1}-1)/(p-1) - (n+1)). */
inline Int bp_degree_sum(long p, long n) {
    if (!is_prime(p)) throw UnsupportedCoefficientsError(std::to_string(p) + " is not prime");
    if (n < 0) throw Error("bp_degree_sum requires n >= 0");
    Int geom = (pow_int(p, n + 1) - 1) / (p - 1);
    return 2 * (geom - (n + 1));
}

/* Coefficient rings of the standard chromatic theories, for the shift CLI
 * and the test fixtures. */
inline GradedRing bp_ring(long p, long n) {
    std::vector<Generator> gens;
    for (long i = 1; i <= n; ++i)
        gens.push_back({"v" + std::to_string(i), 2 * static_cast<long>(pow_int(p, i)) - 2});
    return make_ring(CoefficientRing::p_local(p), std::move(gens));
}

inline GradedRing ku_ring() { return bp_ring(2, 1); }

/* Johnson-Wilson E(m): Z_(p)[v1..v_{m-1}] with v_m adjoined invertibly. */
inline GradedRing johnson_wilson_ring(long p, long m) {
    if (m < 1) throw Error("johnson_wilson_ring requires m >= 1");
    std::vector<Generator> gens;
    for (long i = 1; i < m; ++i)
        gens.push_back({"v" + std::to_string(i), 2 * static_cast<long>(pow_int(p, i)) - 2});
    std::vector<Generator> laurent{
        {"v" + std::to_string(m), 2 * static_cast<long>(pow_int(p, m)) - 2}};
    return make_ring(CoefficientRing::p_local(p), std::move(gens), std::move(laurent));
}

/* Lubin-Tate theory: a base of shift -1 with n formal degree-0 generators
 * and an invertible generator of degree 2. The Witt-vector base is carried
 * symbolically only. */
inline GradedRing lubin_tate_ring(long p, long n) {
    std::vector<Generator> formal;
    for (long i = 1; i <= n; ++i) formal.push_back({"u" + std::to_string(i), 0});
    return make_ring(CoefficientRing::p_local(p), {}, {{"u", 2}}, std::move(formal));
}

}  // namespace gordual
