#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gordual/ring.hpp"

namespace gordual {

/* Exponent vector over the ring's polynomial generators. */
struct Monomial {
    std::vector<int> exps;

    static Monomial one(std::size_t nvars) { return Monomial{std::vector<int>(nvars, 0)}; }

    static Monomial var(std::size_t nvars, std::size_t i, int e = 1) {
        Monomial m = one(nvars);
        m.exps[i] = e;
        return m;
    }

    bool is_one() const {
        for (int e : exps)
            if (e != 0) return false;
        return true;
    }

    long degree(const GradedRing& ring) const {
        long d = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * ring.var_degree(i);
        return d;
    }

    Monomial mul(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > o.exps[i]) return false;
        return true;
    }

    /* this / o, defined when o divides this. */
    Monomial quotient(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            r.exps[i] -= o.exps[i];
            if (r.exps[i] < 0) throw InternalError("inexact monomial quotient");
        }
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = std::max(r.exps[i], o.exps[i]);
        return r;
    }

    bool has_common_factor(const Monomial& o) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0 && o.exps[i] > 0) return true;
        return false;
    }

    /* If the monomial is x_i^k for a single i with k >= 1, returns (i, k). */
    std::optional<std::pair<std::size_t, int>> pure_power() const {
        std::optional<std::pair<std::size_t, int>> found;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (found) return std::nullopt;
            found = {i, exps[i]};
        }
        return found;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string to_string(const GradedRing& ring) const {
        std::string s;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += ring.var_name(i);
            if (exps[i] != 1) s += "^" + std::to_string(exps[i]);
        }
        return s.empty() ? "1" : s;
    }
};

namespace detail {
inline void enumerate_monomials(const GradedRing& ring, long d, std::size_t i, Monomial& cur,
                                std::vector<Monomial>& out) {
    if (i == ring.var_count()) {
        if (d == 0) out.push_back(cur);
        return;
    }
    long w = ring.var_degree(i);
    for (long e = 0; e * w <= d; ++e) {
        cur.exps[i] = static_cast<int>(e);
        enumerate_monomials(ring, d - e * w, i + 1, cur, out);
    }
    cur.exps[i] = 0;
}
}  // namespace detail

/* All monomials of a given internal degree, in a fixed lexicographic
 * enumeration order. Empty for negative degrees. */
inline std::vector<Monomial> monomials_of_degree(const GradedRing& ring, long d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur = Monomial::one(ring.var_count());
    detail::enumerate_monomials(ring, d, 0, cur, out);
    return out;
}

}  // namespace gordual
