#pragma once

#include <map>
#include <vector>

#include "gordual/element.hpp"
#include "gordual/linalg.hpp"

namespace gordual {

/* Matrix of ring elements (entries live in the rank-one free module). */
struct PolyMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Element> e;

    PolyMat() = default;
    PolyMat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}

    Element& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const Element& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    bool is_zero() const {
        for (const auto& x : e)
            if (!x.is_zero()) return false;
        return true;
    }

    PolyMat transpose() const {
        PolyMat t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    PolyMat mul(const GradedRing& ring, const PolyMat& o) const {
        if (cols != o.rows) throw InternalError("polynomial matrix product shape mismatch");
        PolyMat r(rows, o.cols);
        const FreeModule one = FreeModule::rank_one();
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < o.cols; ++j) {
                Element acc;
                for (std::size_t k = 0; k < cols; ++k)
                    acc = add(ring, one, acc, ring_mul(ring, at(i, k), o.at(k, j)));
                r.at(i, j) = std::move(acc);
            }
        return r;
    }
};

/* Finite complex of free graded modules with degree-0 differentials.
 *
 * Chain complexes (cochain = false): diffs[i] maps terms[i+1] -> terms[i].
 * Cochain complexes: diffs[i] maps terms[i] -> terms[i+1]. */
struct ChainComplex {
    bool cochain = false;
    std::vector<FreeModule> terms;
    std::vector<PolyMat> diffs;

    std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }

    /* Differential whose source is terms[i]; nullptr at the end. */
    const PolyMat* map_from(std::size_t i) const {
        if (!cochain) return i >= 1 && i - 1 < diffs.size() ? &diffs[i - 1] : nullptr;
        return i < diffs.size() ? &diffs[i] : nullptr;
    }

    /* Differential whose target is terms[i]; nullptr at the end. */
    const PolyMat* map_into(std::size_t i) const {
        if (!cochain) return i < diffs.size() ? &diffs[i] : nullptr;
        return i >= 1 && i - 1 < diffs.size() ? &diffs[i - 1] : nullptr;
    }

    const FreeModule& source_of(std::size_t diff_idx) const {
        return cochain ? terms[diff_idx] : terms[diff_idx + 1];
    }
    const FreeModule& target_of(std::size_t diff_idx) const {
        return cochain ? terms[diff_idx + 1] : terms[diff_idx];
    }
};

/* d o d = 0 and per-entry homogeneity, as exact checks. */
inline void validate_complex(const GradedRing& ring, const ChainComplex& c) {
    const FreeModule one = FreeModule::rank_one();
    for (std::size_t i = 0; i < c.diffs.size(); ++i) {
        const FreeModule& src = c.source_of(i);
        const FreeModule& dst = c.target_of(i);
        if (c.diffs[i].rows != dst.rank() || c.diffs[i].cols != src.rank())
            throw InternalError("differential shape mismatch");
        for (std::size_t r = 0; r < c.diffs[i].rows; ++r)
            for (std::size_t j = 0; j < c.diffs[i].cols; ++j) {
                const Element& entry = c.diffs[i].at(r, j);
                if (entry.is_zero()) continue;
                long want = src.gen_degrees[j] - dst.gen_degrees[r];
                if (element_degree(ring, one, entry) != want)
                    throw NonHomogeneousError("differential entry has wrong degree");
            }
    }
    for (std::size_t i = 0; i + 1 < c.diffs.size(); ++i) {
        PolyMat prod = c.cochain ? c.diffs[i + 1].mul(ring, c.diffs[i])
                                 : c.diffs[i].mul(ring, c.diffs[i + 1]);
        if (!prod.is_zero()) throw InternalError("d o d != 0");
    }
}

/* Hom(-, A): generator degrees negate, matrices transpose, indexing becomes
 * cohomological. Hom(Sigma^s A, A) = Sigma^{-s} A. */
inline ChainComplex hom_complex_into_ring(const GradedRing& ring, const ChainComplex& c) {
    if (c.cochain) throw InternalError("hom_complex_into_ring expects a chain complex");
    (void)ring;
    ChainComplex h;
    h.cochain = true;
    for (const auto& t : c.terms) {
        FreeModule dual;
        dual.gen_names = t.gen_names;
        for (long d : t.gen_degrees) dual.gen_degrees.push_back(-d);
        h.terms.push_back(std::move(dual));
    }
    for (const auto& d : c.diffs) h.diffs.push_back(d.transpose());
    return h;
}

/* Monomial basis of the internal-degree-d piece of a free module, ordered by
 * component then by monomial enumeration order. */
struct BasisElement {
    Monomial mono;
    int comp;
};

inline std::vector<BasisElement> term_basis(const GradedRing& ring, const FreeModule& fm, long d) {
    std::vector<BasisElement> out;
    for (std::size_t j = 0; j < fm.rank(); ++j)
        for (auto& m : monomials_of_degree(ring, d - fm.gen_degrees[j]))
            out.push_back({m, static_cast<int>(j)});
    return out;
}

namespace detail {
inline std::map<std::pair<std::vector<int>, int>, std::size_t> basis_index(
    const std::vector<BasisElement>& basis) {
    std::map<std::pair<std::vector<int>, int>, std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[{basis[i].mono.exps, basis[i].comp}] = i;
    return idx;
}
}  // namespace detail

/* Scalar matrix of a degree-0 polynomial matrix on degree-d monomial bases. */
inline Mat scalar_matrix_at_degree(const GradedRing& ring, const FreeModule& src,
                                   const FreeModule& dst, const PolyMat& pm, long d) {
    auto sb = term_basis(ring, src, d);
    auto db = term_basis(ring, dst, d);
    auto idx = detail::basis_index(db);
    Mat out(db.size(), sb.size());
    for (std::size_t c = 0; c < sb.size(); ++c) {
        for (std::size_t i = 0; i < dst.rank(); ++i) {
            const Element& entry = pm.at(i, sb[c].comp);
            for (const auto& t : entry.terms) {
                auto it = idx.find({t.mono.mul(sb[c].mono).exps, static_cast<int>(i)});
                if (it == idx.end()) throw InternalError("image term missing from target basis");
                out.at(it->second, c) = ring.coeff.add(out.at(it->second, c), t.coeff);
            }
        }
    }
    return out;
}

/* Scalar matrix of multiplication by a homogeneous ring element, from the
 * degree-d basis to the degree-(d + |y|) basis of the same free module. */
inline Mat mult_matrix_at_degree(const GradedRing& ring, const FreeModule& fm, const Element& y,
                                 long d) {
    long w = element_degree(ring, FreeModule::rank_one(), y);
    auto sb = term_basis(ring, fm, d);
    auto db = term_basis(ring, fm, d + w);
    auto idx = detail::basis_index(db);
    Mat out(db.size(), sb.size());
    for (std::size_t c = 0; c < sb.size(); ++c)
        for (const auto& t : y.terms) {
            auto it = idx.find({t.mono.mul(sb[c].mono).exps, sb[c].comp});
            if (it == idx.end()) throw InternalError("image term missing from target basis");
            out.at(it->second, c) = ring.coeff.add(out.at(it->second, c), t.coeff);
        }
    return out;
}

}  // namespace gordual
