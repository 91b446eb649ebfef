#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gordual/rational.hpp"

namespace gordual {

/* Dense matrix with exact rational entries, row-major. */
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Mat mul(const Mat& o) const {
        if (cols != o.rows) throw InternalError("matrix product shape mismatch");
        Mat r(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                if (at(i, k) == 0) continue;
                for (std::size_t j = 0; j < o.cols; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    /* Horizontal concatenation [this | o]. */
    Mat hcat(const Mat& o) const {
        if (o.rows != rows && o.cols != 0 && rows != 0)
            throw InternalError("hcat shape mismatch");
        Mat r(rows, cols + o.cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
        }
        return r;
    }

    Mat top_rows(std::size_t n) const {
        Mat r(n, cols);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
        return r;
    }

    Mat column(std::size_t j) const {
        Mat c(rows, 1);
        for (std::size_t i = 0; i < rows; ++i) c.at(i, 0) = at(i, j);
        return c;
    }
};

/* Smith normal form over the coefficient base: U * A * V = D with U, V
 * invertible and D diagonal. Over Z_(p) the diagonal entries are p^{k_1} |
 * p^{k_2} | ...; over F_p they are 1. diag_vals holds the exponents k_i. */
struct SnfResult {
    Mat d, u, uinv, v, vinv;
    std::vector<long> diag_vals;
    std::size_t rank() const { return diag_vals.size(); }
};

inline SnfResult smith_normal_form(const CoefficientRing& k, Mat w) {
    const std::size_t m = w.rows, n = w.cols;
    SnfResult r;
    r.u = Mat::identity(m);
    r.uinv = Mat::identity(m);
    r.v = Mat::identity(n);
    r.vinv = Mat::identity(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(w.at(i, c), w.at(j, c));
        for (std::size_t c = 0; c < m; ++c) std::swap(r.u.at(i, c), r.u.at(j, c));
        for (std::size_t c = 0; c < m; ++c) std::swap(r.uinv.at(c, i), r.uinv.at(c, j));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < m; ++c) std::swap(w.at(c, i), w.at(c, j));
        for (std::size_t c = 0; c < n; ++c) std::swap(r.v.at(c, i), r.v.at(c, j));
        for (std::size_t c = 0; c < n; ++c) std::swap(r.vinv.at(i, c), r.vinv.at(j, c));
    };
    /* row_i -= f * row_t, with the inverse transform tracked. Working entries
     * are re-normalized so that mod-p zeros are recognized in field mode. */
    auto row_axpy = [&](std::size_t i, std::size_t t, const Rational& f) {
        if (f == 0) return;
        for (std::size_t c = 0; c < n; ++c) w.at(i, c) = k.normalize(w.at(i, c) - f * w.at(t, c));
        for (std::size_t c = 0; c < m; ++c) r.u.at(i, c) -= f * r.u.at(t, c);
        for (std::size_t c = 0; c < m; ++c) r.uinv.at(c, t) += f * r.uinv.at(c, i);
    };
    auto col_axpy = [&](std::size_t j, std::size_t t, const Rational& f) {
        if (f == 0) return;
        for (std::size_t c = 0; c < m; ++c) w.at(c, j) = k.normalize(w.at(c, j) - f * w.at(c, t));
        for (std::size_t c = 0; c < n; ++c) r.v.at(c, j) -= f * r.v.at(c, t);
        for (std::size_t c = 0; c < n; ++c) r.vinv.at(t, c) += f * r.vinv.at(j, c);
    };
    auto scale_row = [&](std::size_t i, const Rational& f) {
        for (std::size_t c = 0; c < n; ++c) w.at(i, c) = k.normalize(w.at(i, c) * f);
        for (std::size_t c = 0; c < m; ++c) r.u.at(i, c) = k.normalize(r.u.at(i, c) * f);
        Rational g = k.inverse(f);
        for (std::size_t c = 0; c < m; ++c) r.uinv.at(c, i) = k.normalize(r.uinv.at(c, i) * g);
    };

    for (auto& x : w.a) x = k.normalize(x);
    std::size_t t = 0;
    while (t < m && t < n) {
        /* pivot of minimal valuation in the remaining block */
        std::optional<long> best;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                auto v = k.valuation(w.at(i, j));
                if (v && (!best || *v < *best)) {
                    best = *v;
                    pi = i;
                    pj = j;
                }
            }
        if (!best) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        scale_row(t, k.inverse(k.unit_part(w.at(t, t))));
        const Rational pivot = w.at(t, t);
        for (std::size_t i = t + 1; i < m; ++i) row_axpy(i, t, k.quotient(w.at(i, t), pivot));
        for (std::size_t j = t + 1; j < n; ++j) col_axpy(j, t, k.quotient(w.at(t, j), pivot));
        r.diag_vals.push_back(*best);
        ++t;
    }
    for (auto& x : w.a) x = k.normalize(x);
    for (auto& x : r.u.a) x = k.normalize(x);
    for (auto& x : r.uinv.a) x = k.normalize(x);
    for (auto& x : r.v.a) x = k.normalize(x);
    for (auto& x : r.vinv.a) x = k.normalize(x);
    r.d = std::move(w);
    return r;
}

inline std::size_t rank(const CoefficientRing& k, const Mat& a) {
    return smith_normal_form(k, a).rank();
}

/* Basis of { x : A x = 0 }, as columns. Over Z_(p) the kernel of a map of
 * free modules is free, so this is a genuine basis. */
inline Mat kernel_basis(const CoefficientRing& k, const Mat& a) {
    SnfResult s = smith_normal_form(k, a);
    std::size_t rk = s.rank();
    Mat out(a.cols, a.cols - rk);
    for (std::size_t j = rk; j < a.cols; ++j)
        for (std::size_t i = 0; i < a.cols; ++i) out.at(i, j - rk) = s.v.at(i, j);
    return out;
}

/* Solve A X = B over the base; nullopt when no solution exists. */
inline std::optional<Mat> solve(const CoefficientRing& k, const Mat& a, const Mat& b) {
    if (a.rows != b.rows) throw InternalError("solve shape mismatch");
    SnfResult s = smith_normal_form(k, a);
    Mat ub = s.u.mul(b);
    for (auto& x : ub.a) x = k.normalize(x);
    Mat y(a.cols, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < b.cols; ++j) {
            if (i < s.rank()) {
                const Rational& d = s.d.at(i, i);
                if (!k.divides(d, ub.at(i, j))) return std::nullopt;
                y.at(i, j) = k.quotient(ub.at(i, j), d);
            } else if (ub.at(i, j) != 0) {
                return std::nullopt;
            }
        }
    }
    Mat x = s.v.mul(y);
    for (auto& e : x.a) e = k.normalize(e);
    return x;
}

}  // namespace gordual
