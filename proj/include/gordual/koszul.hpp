#pragma once

#include <vector>

#include "gordual/complex.hpp"

namespace gordual {

namespace detail {
inline void subsets_of_size(std::size_t s, std::size_t k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < s; ++i) {
            cur.push_back(static_cast<int>(i));
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}
}  // namespace detail

/* Koszul complex on homogeneous ring elements y_1..y_s: the exterior-algebra
 * shaped chain complex with F_i free of rank C(s, i), generator e_S in
 * degree sum_{j in S} |y_j|, and d(e_S) = sum_t (-1)^t y_{S[t]} e_{S - S[t]}
 * over the positions t of S in increasing order. */
inline ChainComplex koszul_complex(const GradedRing& ring, const std::vector<Element>& elems) {
    const FreeModule one = FreeModule::rank_one();
    if (elems.empty()) throw Error("koszul_complex requires at least one element");
    std::vector<long> degs;
    for (const auto& y : elems) {
        if (y.is_zero() || !is_homogeneous(ring, one, y))
            throw NonHomogeneousError("Koszul input " + to_string(ring, one, y));
        degs.push_back(element_degree(ring, one, y));
    }
    const std::size_t s = elems.size();

    ChainComplex c;
    std::vector<std::vector<std::vector<int>>> subsets(s + 1);
    for (std::size_t i = 0; i <= s; ++i) {
        detail::subsets_of_size(s, i, subsets[i]);
        FreeModule fm;
        for (const auto& sub : subsets[i]) {
            long d = 0;
            std::string name = "e{";
            for (std::size_t t = 0; t < sub.size(); ++t) {
                d += degs[sub[t]];
                name += (t ? "," : "") + std::to_string(sub[t] + 1);
            }
            name += "}";
            fm.gen_degrees.push_back(d);
            fm.gen_names.push_back(name);
        }
        c.terms.push_back(std::move(fm));
    }

    for (std::size_t i = 1; i <= s; ++i) {
        PolyMat d(c.terms[i - 1].rank(), c.terms[i].rank());
        std::map<std::vector<int>, std::size_t> target_idx;
        for (std::size_t r = 0; r < subsets[i - 1].size(); ++r) target_idx[subsets[i - 1][r]] = r;
        for (std::size_t col = 0; col < subsets[i].size(); ++col) {
            const auto& sub = subsets[i][col];
            for (std::size_t t = 0; t < sub.size(); ++t) {
                std::vector<int> rest = sub;
                rest.erase(rest.begin() + t);
                std::size_t row = target_idx.at(rest);
                Element y = t % 2 == 0 ? elems[sub[t]] : negate(ring, elems[sub[t]]);
                d.at(row, col) = add(ring, one, d.at(row, col), y);
            }
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

}  // namespace gordual
