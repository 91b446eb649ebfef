#pragma once

#include <sstream>

#include <json.hpp>

#include "gordual/ext.hpp"
#include "gordual/matlis.hpp"

namespace gordual {

/* Degree-by-degree comparison of Ext^n_A(M, A) against the shifted Matlis
 * dual Sigma^b M^v, including per-generator action ranks. The comparison
 * contract is: equal invariant factors per degree, equal image orders of the
 * generator actions per degree. */
struct UctReport {
    bool verdict = false;
    bool concentrated = false;
    long n = 0, b = 0, a = 0;
    long lo = 0, hi = 0;
    long p = 2;
    std::vector<std::pair<long, long>> stray;  // nonzero Ext entries off the column

    struct Row {
        long t;
        std::vector<long> lhs_exps, rhs_exps;
        bool match;
    };
    std::vector<Row> rows;

    struct ActionRow {
        std::string gen;
        long t;
        long lhs_exp, rhs_exp;
        bool match;
    };
    std::vector<ActionRow> actions;

    std::string to_text() const {
        std::ostringstream os;
        auto factors_str = [&](const std::vector<long>& exps) {
            Factors f;
            f.torsion_exps = exps;
            return f.to_string(p);
        };
        os << "UCT check: Ext^" << n << "(M, A) vs Sigma^" << b << " M^v   (a = " << a << ")\n";
        os << "concentration at i = " << n << ": " << (concentrated ? "yes" : "NO");
        if (!stray.empty()) {
            os << "  stray entries:";
            for (auto& [i, t] : stray) os << " (i=" << i << ",t=" << t << ")";
        }
        os << "\n";
        os << "degree | LHS invariant factors | RHS invariant factors | verdict\n";
        for (const auto& r : rows) {
            os << r.t << " | " << factors_str(r.lhs_exps) << " | " << factors_str(r.rhs_exps)
               << " | " << (r.match ? "ok" : "MISMATCH") << "\n";
        }
        os << "action ranks (log_p of image order)\n";
        os << "gen | from degree | LHS | RHS | verdict\n";
        for (const auto& r : actions)
            os << r.gen << " | " << r.t << " | " << r.lhs_exp << " | " << r.rhs_exp << " | "
               << (r.match ? "ok" : "MISMATCH") << "\n";
        os << "verdict: " << (verdict ? "PASS" : "FAIL") << "\n";
        return os.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["verdict"] = verdict;
        j["concentrated"] = concentrated;
        j["n"] = n;
        j["b"] = b;
        j["a"] = a;
        j["window"] = {lo, hi};
        j["p"] = p;
        j["degrees"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            row["t"] = r.t;
            row["lhs"] = r.lhs_exps;
            row["rhs"] = r.rhs_exps;
            row["match"] = r.match;
            j["degrees"].push_back(row);
        }
        j["actions"] = nlohmann::ordered_json::array();
        for (const auto& r : actions) {
            nlohmann::ordered_json row;
            row["gen"] = r.gen;
            row["t"] = r.t;
            row["lhs"] = r.lhs_exp;
            row["rhs"] = r.rhs_exp;
            row["match"] = r.match;
            j["actions"].push_back(row);
        }
        return j;
    }
};

/* Verify Ext^i_A(M, A) = Sigma^b M^v concentrated at i = n for a torsion
 * module M, degreewise on [lo, hi]. */
inline UctReport uct_verify(const GradedRing& ring, const ModulePresentation& m, long lo,
                            long hi) {
    if (lo > hi) throw Error("window lo > hi");
    TorsionCertificate cert = is_torsion(ring, m);
    if (!cert.torsion) throw NotTorsionError(cert.missing);

    UctReport rep;
    ShiftResult shift = gorenstein_shift_symbolic(ring);
    rep.n = ext_concentration_index(ring);
    rep.b = shift.b;
    rep.a = shift.a;
    rep.lo = lo;
    rep.hi = hi;
    rep.p = ring.coeff.p;
    const long w = std::max<long>(ring.max_var_degree(), 1);

    /* concentration on a window padded enough to see everything the shifted
     * dual can see */
    const long pad_lo = lo - w, pad_hi = hi + w;
    BigradedModule ext = ext_into_ring(ring, m, rep.n + 1, pad_lo, pad_hi);
    rep.concentrated = true;
    for (const auto& [key, f] : ext.entries)
        if (key.first != rep.n && !f.is_zero()) {
            rep.concentrated = false;
            rep.stray.push_back(key);
        }

    DegreewiseModule lhs = ext_degreewise_with_actions(ring, m, rep.n, pad_lo, pad_hi);
    DegreewiseModule mdata =
        expand_degreewise(ring, m, rep.b - pad_hi - w, rep.b - pad_lo + w);
    DegreewiseModule rhs = shift_degreewise(matlis_dual(mdata), rep.b);

    rep.verdict = rep.concentrated;
    for (long t = lo; t <= hi; ++t) {
        UctReport::Row row;
        row.t = t;
        row.lhs_exps = lhs.piece(t).exps;
        row.rhs_exps = rhs.piece(t).exps;
        row.match = row.lhs_exps == row.rhs_exps;
        rep.verdict = rep.verdict && row.match;
        rep.rows.push_back(std::move(row));
    }
    for (std::size_t g = 0; g < ring.var_count(); ++g) {
        const std::string& gen = ring.var_name(g);
        for (long t = lo; t <= hi; ++t) {
            auto le = lhs.action_image_exp(gen, t);
            auto re = rhs.action_image_exp(gen, t);
            UctReport::ActionRow row;
            row.gen = gen;
            row.t = t;
            row.lhs_exp = le.value_or(0);
            row.rhs_exp = re.value_or(0);
            row.match = row.lhs_exp == row.rhs_exp;
            rep.verdict = rep.verdict && row.match;
            rep.actions.push_back(std::move(row));
        }
    }
    return rep;
}

}  // namespace gordual
