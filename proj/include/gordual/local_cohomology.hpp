#pragma once

#include <map>

#include "gordual/degreewise.hpp"
#include "gordual/homology.hpp"

namespace gordual {

struct LocalCohomology {
    BigradedModule h;
    long stabilized_at = 0;  // Koszul power whose values are reported
};

namespace detail {

/* Koszul-power tower for H^*_I(M): cohomological Koszul complexes on
 * (y_1^t, ..., y_s^t) with the standard multiplication comparison maps.
 * Everything is expanded degreewise into presented groups over Z_(p). */
class KoszulTower {
public:
    KoszulTower(const GradedRing& ring, const ModulePresentation& m,
                const std::vector<Element>& ys, long lo, long hi)
        : ring_(ring), m_(m), ys_(ys), lo_(lo), hi_(hi) {
        const FreeModule one = FreeModule::rank_one();
        for (const auto& y : ys_) weights_.push_back(element_degree(ring_, one, y));
        const std::size_t s = ys_.size();
        subs_.resize(s + 1);
        for (std::size_t i = 0; i <= s; ++i) subsets_of_size(s, i, subs_[i]);
        for (std::size_t i = 0; i <= s; ++i) {
            sub_weight_.emplace_back();
            for (const auto& sub : subs_[i]) {
                long w = 0;
                for (int j : sub) w += weights_[j];
                sub_weight_.back().push_back(w);
            }
        }
    }

    std::size_t positions() const { return subs_.size(); }

    using Level = std::map<std::pair<long, long>, Subquotient>;

    Level build_level(long t) {
        Level level;
        for (long i = 0; i < static_cast<long>(positions()); ++i)
            for (long d = lo_; d <= hi_; ++d) {
                Mat incoming = i > 0 ? delta(i - 1, d, t) : Mat(ambient_dim(i, d, t), 0);
                Mat outgoing = i + 1 < static_cast<long>(positions())
                                   ? delta(i, d, t)
                                   : Mat(0, ambient_dim(i, d, t));
                Mat rel_q = block_rel(i, d, t);
                Mat rel_s = i + 1 < static_cast<long>(positions())
                                ? block_rel(i + 1, d, t)
                                : Mat(0, 0);
                level[{i, d}] =
                    homology_piece(CoefficientRing::p_local(ring_.coeff.p), incoming, rel_q,
                                   outgoing, rel_s);
            }
        return level;
    }

    /* Comparison map C(y^t) -> C(y^{t+1}): on the S-component,
     * multiplication by prod_{j in S} y_j. */
    Mat transition(long i, long d, long t) {
        std::vector<Mat> blocks;
        for (std::size_t b = 0; b < subs_[i].size(); ++b) {
            Element prod = ring_element(ring_, {{Rational(1), Monomial::one(ring_.var_count())}});
            for (int j : subs_[i][b]) prod = ring_mul(ring_, prod, ys_[j]);
            blocks.push_back(mult_matrix_at_degree(ring_, m_.ambient, prod, d + t * sub_weight_[i][b]));
        }
        return block_diag(blocks);
    }

private:
    static void subsets_of_size(std::size_t s, std::size_t k,
                                std::vector<std::vector<int>>& out) {
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

    const KPresentation& m_piece(long degree) {
        auto it = mcache_.find(degree);
        if (it == mcache_.end())
            it = mcache_.emplace(degree, degree_piece_presentation(ring_, m_, degree)).first;
        return it->second;
    }

    const Element& y_power(std::size_t j, long t) {
        auto key = std::make_pair(j, t);
        auto it = ypow_.find(key);
        if (it == ypow_.end()) {
            Element e = ring_element(ring_, {{Rational(1), Monomial::one(ring_.var_count())}});
            for (long r = 0; r < t; ++r) e = ring_mul(ring_, e, ys_[j]);
            it = ypow_.emplace(key, std::move(e)).first;
        }
        return it->second;
    }

    std::size_t ambient_dim(long i, long d, long t) {
        std::size_t n = 0;
        for (std::size_t b = 0; b < subs_[i].size(); ++b)
            n += m_piece(d + t * sub_weight_[i][b]).gens;
        return n;
    }

    static Mat block_diag(const std::vector<Mat>& blocks) {
        std::size_t r = 0, c = 0;
        for (const auto& b : blocks) {
            r += b.rows;
            c += b.cols;
        }
        Mat out(r, c);
        std::size_t ro = 0, co = 0;
        for (const auto& b : blocks) {
            for (std::size_t i = 0; i < b.rows; ++i)
                for (std::size_t j = 0; j < b.cols; ++j) out.at(ro + i, co + j) = b.at(i, j);
            ro += b.rows;
            co += b.cols;
        }
        return out;
    }

    /* Ambient relations at position i: block diagonal of the M-piece
     * presentations of each subset component. */
    Mat block_rel(long i, long d, long t) {
        std::vector<Mat> blocks;
        for (std::size_t b = 0; b < subs_[i].size(); ++b)
            blocks.push_back(m_piece(d + t * sub_weight_[i][b]).rel);
        return block_diag(blocks);
    }

    /* Differential position i -> i+1 at degree d: block (T, S) for
     * T = S u {j} is (-1)^{#{l in S : l < j}} times the y_j^t action. */
    Mat delta(long i, long d, long t) {
        const auto& src = subs_[i];
        const auto& dst = subs_[i + 1];
        std::map<std::vector<int>, std::size_t> dst_idx;
        for (std::size_t b = 0; b < dst.size(); ++b) dst_idx[dst[b]] = b;

        std::vector<std::size_t> src_off(src.size() + 1, 0), dst_off(dst.size() + 1, 0);
        for (std::size_t b = 0; b < src.size(); ++b)
            src_off[b + 1] = src_off[b] + m_piece(d + t * sub_weight_[i][b]).gens;
        for (std::size_t b = 0; b < dst.size(); ++b)
            dst_off[b + 1] = dst_off[b] + m_piece(d + t * sub_weight_[i + 1][b]).gens;

        Mat out(dst_off.back(), src_off.back());
        for (std::size_t b = 0; b < src.size(); ++b) {
            const auto& sub = src[b];
            for (std::size_t j = 0; j < ys_.size(); ++j) {
                if (std::find(sub.begin(), sub.end(), static_cast<int>(j)) != sub.end()) continue;
                std::vector<int> tset = sub;
                tset.insert(std::lower_bound(tset.begin(), tset.end(), static_cast<int>(j)),
                            static_cast<int>(j));
                std::size_t db = dst_idx.at(tset);
                long before = static_cast<long>(
                    std::count_if(sub.begin(), sub.end(), [&](int l) { return l < static_cast<int>(j); }));
                Mat blk = mult_matrix_at_degree(ring_, m_.ambient, y_power(j, t),
                                                d + t * sub_weight_[i][b]);
                Rational sign = before % 2 == 0 ? 1 : -1;
                for (std::size_t r = 0; r < blk.rows; ++r)
                    for (std::size_t cc = 0; cc < blk.cols; ++cc)
                        out.at(dst_off[db] + r, src_off[b] + cc) =
                            ring_.coeff.normalize(sign * blk.at(r, cc));
            }
        }
        return out;
    }

    const GradedRing& ring_;
    const ModulePresentation& m_;
    std::vector<Element> ys_;
    long lo_, hi_;
    std::vector<long> weights_;
    std::vector<std::vector<std::vector<int>>> subs_;
    std::vector<std::vector<long>> sub_weight_;
    std::map<long, KPresentation> mcache_;
    std::map<std::pair<std::size_t, long>, Element> ypow_;
};

/* Leading-term primality check: the ideal must contain, per leading terms, a
 * unit power of each variable and (over Z_(p)) a power of p. */
inline void check_primary(const GradedRing& ring, const std::vector<Element>& ys) {
    GroebnerBasis gb = buchberger(ring, FreeModule::rank_one(), ys);
    for (std::size_t i = 0; i < ring.var_count(); ++i) {
        bool found = false;
        for (const auto& g : gb.elems) {
            const Term& lt = g.leading();
            if (!ring.coeff.is_unit(lt.coeff)) continue;
            if (lt.mono.is_one()) {
                found = true;
                break;
            }
            auto pp = lt.mono.pure_power();
            if (pp && pp->first == i) {
                found = true;
                break;
            }
        }
        if (!found)
            throw NotPrimaryIdealError("no unit power of " + ring.var_name(i) +
                                       " among the leading terms");
    }
    if (!ring.coeff.is_field()) {
        bool found = false;
        for (const auto& g : gb.elems)
            if (g.leading().mono.is_one()) {
                found = true;
                break;
            }
        if (!found)
            throw NotPrimaryIdealError("no power of " + std::to_string(ring.coeff.p) +
                                       " among the leading terms");
    }
}

}  // namespace detail

/* Local cohomology H^i_I(M) degreewise on [lo, hi], as the colimit of the
 * cohomological Koszul complexes on (y_1^t, ..., y_s^t).
 *
 * The colimit value in the window is detected through eventual images: the
 * value of a degree piece is im(H(t) -> H(T)) once that image has stopped
 * shrinking as the span grows (the same factors already appear in H(T-1))
 * and stopped growing as t does (starting from t+1 gives the same image).
 * When the comparison maps become isomorphisms level-to-level this reduces
 * to "two successive levels agree"; it also resolves towers whose junk dies
 * only in the colimit (multiplication by p on a torsion module). Genuinely
 * divisible colimits never satisfy the t-stability condition and hit the
 * cap, raising NoStabilization. */
inline LocalCohomology local_cohomology(const GradedRing& ring, const ModulePresentation& m,
                                        const std::vector<Element>& ideal_gens, long lo, long hi,
                                        long t_max = 16) {
    if (lo > hi) throw Error("window lo > hi");
    if (t_max < 3) throw Error("stabilization cap must be at least 3");
    validate_presentation(ring, m);
    const FreeModule one = FreeModule::rank_one();
    for (const auto& y : ideal_gens)
        if (y.is_zero() || !is_homogeneous(ring, one, y))
            throw NonHomogeneousError("ideal generator");
    detail::check_primary(ring, ideal_gens);

    const CoefficientRing grp = CoefficientRing::p_local(ring.coeff.p);
    detail::KoszulTower tower(ring, m, ideal_gens, lo, hi);

    std::vector<detail::KoszulTower::Level> levels;  // levels[t-1] = H(K(y^t))
    levels.push_back(tower.build_level(1));

    /* induced comparison maps level t -> t+1 on homology generators; the big
     * ambient matrices are consulted once per level, composites stay small */
    std::vector<std::map<std::pair<long, long>, Mat>> steps;
    auto image_at = [&](const std::pair<long, long>& key, long from, long to) {
        Mat acc = steps[from - 1].at(key);
        for (long t = from + 1; t < to; ++t) acc = steps[t - 1].at(key).mul(acc);
        return image_factors(grp, levels[to - 1].at(key).pres, acc);
    };

    for (long cap = 2; cap <= t_max; ++cap) {
        levels.push_back(tower.build_level(cap));
        steps.emplace_back();
        for (auto& [key, h] : levels[cap - 2]) {
            Mat trans = tower.transition(key.first, key.second, cap - 1);
            steps.back()[key] = induced_map(grp, h, levels[cap - 1].at(key), trans);
        }
        if (cap < 3) continue;
        for (long t = cap - 2; t >= 1; --t) {
            bool ok = true;
            std::map<std::pair<long, long>, Factors> values;
            for (auto& [key, h] : levels[t - 1]) {
                Factors shorter = image_at(key, t, cap - 1);
                Factors full = image_at(key, t, cap);
                Factors later = image_at(key, t + 1, cap);
                if (shorter != full || later != full) {
                    ok = false;
                    break;
                }
                if (!full.is_zero()) values[key] = full;
            }
            if (ok) {
                LocalCohomology out;
                out.stabilized_at = cap;
                out.h.lo = lo;
                out.h.hi = hi;
                out.h.positions = tower.positions();
                out.h.p = ring.coeff.p;
                out.h.field = ring.coeff.is_field();
                out.h.entries = std::move(values);
                return out;
            }
        }
    }
    throw NoStabilizationError(t_max);
}

/* The maximal ideal (p where applicable, then the variables). */
inline std::vector<Element> maximal_ideal_gens(const GradedRing& ring) {
    std::vector<Element> ys;
    if (!ring.coeff.is_field())
        ys.push_back(ring_element(ring, {{Rational(ring.coeff.p), Monomial::one(ring.var_count())}}));
    for (std::size_t i = 0; i < ring.var_count(); ++i)
        ys.push_back(ring_monomial(ring, Monomial::var(ring.var_count(), i)));
    return ys;
}

}  // namespace gordual
