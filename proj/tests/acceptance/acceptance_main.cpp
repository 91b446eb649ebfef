/* End-to-end acceptance suite: one pass/fail line per criterion, nonzero
 * exit when anything fails. Takes the CLI binary path as argv[1]. */

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "gordual/chart_ops.hpp"
#include "gordual/dsl.hpp"
#include "gordual/gorenstein.hpp"
#include "gordual/koszul.hpp"
#include "gordual/local_cohomology.hpp"
#include "gordual/ses.hpp"
#include "gordual/uct.hpp"
#include "support/oracle.hpp"

using namespace gordual;

namespace {

std::string g_cli;
const std::string kFixtures = GORDUAL_FIXTURES_DIR;
int g_failures = 0;

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw Error("cannot spawn: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

CliResult run_shell(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw Error("cannot spawn: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void check(bool cond, const std::string& what) {
    if (!cond) throw Error("check failed: " + what);
}

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
        body();
    } catch (const std::exception& e) {
        failure = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && elapsed > budget_seconds)
        failure = "runtime " + std::to_string(elapsed) + "s exceeds budget " +
                  std::to_string(budget_seconds) + "s";
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (failure.empty() ? "PASS" : "FAIL") << " criterion " << number << ": " << label
         << " (" << elapsed << "s)";
    if (!failure.empty()) line << "\n     " << failure;
    std::cout << line.str() << "\n";
    if (!failure.empty()) ++g_failures;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/* ---- criterion bodies ---------------------------------------------- */

void shift_table() {
    auto hz = run_cli("shift --bp 3 0");
    check(hz.exit_code == 0 && contains(hz.out, "a=-1"), "HZ_(p) shift a = -1");
    auto ku = run_cli("shift --bp 2 1");
    check(ku.exit_code == 0 && contains(ku.out, "D=2") && contains(ku.out, "a=-4"),
          "ku: D = 2, a = -4");
    for (long p : {2L, 3L, 5L})
        for (long n = 0; n <= 6; ++n) {
            Int sum = 0;
            for (long i = 1; i <= n; ++i) sum += 2 * (pow_int(p, i) - 1);
            check(bp_degree_sum(p, n) == sum, "closed formula vs explicit sum");
            ShiftResult bp = gorenstein_shift_symbolic(bp_ring(p, n));
            check(bp.a == -static_cast<long>(sum) - n - 1, "a = -D - n - 1");
            ShiftResult en = gorenstein_shift_symbolic(johnson_wilson_ring(p, n + 1));
            check(en.a == bp.a, "E(n+1) shift equals BP<n> shift");
            check(en.modulus && *en.modulus == 2 * (static_cast<long>(pow_int(p, n + 1)) - 1),
                  "E(n+1) modulus");
        }
    auto en = run_cli("shift --en 2 2");
    check(en.exit_code == 0 && contains(en.out, "a=-4") && contains(en.out, "modulus=6"),
          "E(2) at p=2 via the CLI");
    for (long n = 1; n <= 4; ++n) {
        auto lt = run_cli("shift --lubin-tate " + std::to_string(n));
        check(lt.exit_code == 0 && contains(lt.out, "a=" + std::to_string(-n - 1)) &&
                  contains(lt.out, "modulus=2"),
              "Lubin-Tate shift -n-1 mod 2");
    }
}

void gorenstein_ten_rings() {
    auto r = run_cli("check-gorenstein -m " + kFixtures + "/rings10.gor");
    check(r.exit_code == 0, "verifier exit code");
    std::size_t matches = 0, pos = 0;
    while ((pos = r.out.find("[match]", pos)) != std::string::npos) {
        ++matches;
        pos += 7;
    }
    check(matches == 10, "all ten rings observed and matching the symbolic shift");
}

void uct_fixtures() {
    DslProgram prog = parse_dsl(read_file(kFixtures + "/uct_modules.gor"));
    check(prog.modules.size() >= 8, "at least eight fixture modules");

    /* brute-force oracle inputs: the quotient terms of each fixture */
    struct OracleCase {
        std::string module;
        std::vector<oracle::IdealTerm> terms;
        oracle::Expected data;
    };
    auto mono1 = [](int e) { return Monomial{{e}}; };
    std::vector<OracleCase> cases = {
        {"K", {{1, mono1(1)}}, oracle::truncated_poly_data(1, 1)},
        {"T2", {{1, mono1(2)}}, oracle::truncated_poly_data(2, 1)},
        {"T5", {{1, mono1(5)}}, oracle::truncated_poly_data(5, 1)},
        {"MXY",
         {{1, Monomial{{2, 0}}}, {1, Monomial{{1, 1}}}, {1, Monomial{{0, 3}}}},
         oracle::monomial_example_data()},
        {"T3", {{1, mono1(3)}}, oracle::truncated_poly_data(3, 2)},
        {"M8", {{8, mono1(0)}, {1, mono1(2)}}, oracle::quotient_pair_data(3, 2, 2)},
        {"M2", {{2, mono1(0)}, {1, mono1(3)}}, oracle::quotient_pair_data(1, 3, 2)},
        {"M4", {{4, mono1(0)}, {2, mono1(1)}, {1, mono1(2)}}, oracle::Expected{{0, {2}}, {2, {1}}}},
        {"M9", {{9, mono1(0)}, {1, mono1(2)}}, oracle::quotient_pair_data(2, 2, 4)},
    };
    for (const auto& c : cases) {
        const auto* named = prog.find_module(c.module);
        check(named != nullptr, "fixture module " + c.module);
        const GradedRing& ring = prog.rings[named->ring_index].ring;
        const long n = ext_concentration_index(ring);
        long span = 0;
        for (auto& [d, e] : c.data) span = std::max(span, d);

        /* oracle: hand-validated resolution, explicit Hom complex, SNF */
        auto hand = oracle::taylor_resolution(ring, c.terms);
        check(oracle::validate_resolution(ring, hand, c.data, 0, span + 4),
              c.module + ": hand resolution resolves the module");
        auto dual = oracle::dualize(hand);
        BigradedModule engine =
            ext_into_ring(ring, named->pres, n + 1, -span - 2 * ring.max_var_degree() - 2, 2);
        for (long i = 0; i <= n + 1; ++i)
            for (long t = engine.lo; t <= engine.hi; ++t) {
                Factors want = i < static_cast<long>(dual.terms.size())
                                   ? oracle::ext_factors_at(ring, dual, i, t)
                                   : Factors{};
                check(engine.at(i, t) == want,
                      c.module + ": engine Ext equals the oracle at (i=" + std::to_string(i) +
                          ", t=" + std::to_string(t) + ")");
            }

        /* the CLI verifier agrees and passes */
        auto r = run_cli("uct-verify -m " + kFixtures + "/uct_modules.gor --module " + c.module +
                         " --window " + std::to_string(-span - 2 * ring.max_var_degree() - 2) +
                         " 2");
        check(r.exit_code == 0, c.module + ": uct-verify exit code");
        check(contains(r.out, "verdict: PASS"), c.module + ": verdict line");
    }
}

void local_cohomology_checks() {
    auto ring = make_ring(CoefficientRing::prime_field(2), {{"x", 1}, {"y", 1}});
    ModulePresentation a{FreeModule::rank_one(), {}};
    LocalCohomology lc = local_cohomology(ring, a, maximal_ideal_gens(ring), -10, 2);
    for (long t = -10; t <= 2; ++t) {
        check(lc.h.at(0, t).is_zero() && lc.h.at(1, t).is_zero(),
              "H^i m(F_2[x,y]) vanishes for i != 2");
        long want = -2 - t >= 0 ? -1 - t : 0;  // dim A_{b-t}, b = -2
        check(static_cast<long>(lc.h.at(2, t).torsion_exps.size()) == want,
              "dim H^2 equals dim A_{b-t} at t=" + std::to_string(t));
    }

    /* torsion fixtures: concentrated in position 0 and equal to the module */
    DslProgram prog = parse_dsl(read_file(kFixtures + "/uct_modules.gor"));
    for (const std::string name : {"T2", "MXY", "M8", "M4"}) {
        const auto* named = prog.find_module(name);
        const GradedRing& r = prog.rings[named->ring_index].ring;
        const CoefficientRing grp = CoefficientRing::p_local(r.coeff.p);
        LocalCohomology h = local_cohomology(r, named->pres, maximal_ideal_gens(r), -2, 8);
        for (const auto& [key, f] : h.h.entries)
            check(key.first == 0, name + ": concentrated in cohomological degree 0");
        for (long t = -2; t <= 8; ++t) {
            Factors direct = invariant_factors(grp, degree_piece_presentation(r, named->pres, t));
            check(h.h.at(0, t) == direct, name + ": H^0 equals the module at t=" +
                                              std::to_string(t));
        }
    }

    /* the CLI front end agrees */
    auto cli = run_cli("local-cohomology -m " + kFixtures + "/uct_modules.gor --module T2 " +
                       "--window -2 4");
    check(cli.exit_code == 0 && contains(cli.out, "i=0  t=0  dim 1"), "CLI local cohomology");
}

void chart_duality() {
    std::string cmd = g_cli + " chart dual " + kFixtures + "/fig2.chart --shift -4 | " + g_cli +
                      " chart compare - " + kFixtures + "/fig1.chart";
    auto piped = run_shell(cmd);
    check(piped.exit_code == 0, "pipeline exit code");
    check(piped.out.empty(), "empty diff");

    auto dual = run_cli("chart dual " + kFixtures + "/fig2.chart --shift -4");
    check(dual.exit_code == 0, "dual exit code");
    check(contains(dual.out, "dot 34 0\n"), "anchor dot (30,7) lands at (34,0)");
}

void ses_factors() {
    auto r = run_cli("ses-k -m " + kFixtures + "/mixed.gor --window -10 0");
    check(r.exit_code == 0, "ses-k exit code");
    check(contains(r.out, "-6 | Z/2 | 0 | Z/2"), "Ext contribution at degree -6");
    check(contains(r.out, "-3 | 0 | Z(2)^1 | Z(2)"), "Hom contribution at degree -3");

    /* factor orders multiply consistently against the module's own pieces */
    DslProgram prog = parse_dsl(read_file(kFixtures + "/mixed.gor"));
    const auto* named = prog.find_module("M");
    const GradedRing& ring = prog.rings[named->ring_index].ring;
    const CoefficientRing grp = CoefficientRing::p_local(2);
    SesReport rep = k_level_ses(ring, named->pres, -10, 0);
    for (const auto& row : rep.rows) {
        Factors ext_src = invariant_factors(grp, degree_piece_presentation(ring, named->pres,
                                                                           rep.a - row.u));
        Factors hom_src = invariant_factors(grp, degree_piece_presentation(ring, named->pres,
                                                                           rep.a + 1 - row.u));
        check(row.ext_exps == ext_src.torsion_exps && row.hom_rank == hom_src.free_rank,
              "row factors decompose the module pieces at degree " + std::to_string(row.u));
    }

    /* p-torsion fixtures agree with the uct orders (up to the homological
     * suspension between the Ext-column grading and the R^* grading) */
    DslProgram uc = parse_dsl(read_file(kFixtures + "/uct_modules.gor"));
    for (const std::string name : {"M8", "M2", "M9"}) {
        const auto* m = uc.find_module(name);
        const GradedRing& r2 = uc.rings[m->ring_index].ring;
        SesReport ses = k_level_ses(r2, m->pres, -16, 0);
        UctReport uct = uct_verify(r2, m->pres, -16, 2);
        check(uct.verdict, name + ": uct passes");
        for (const auto& row : ses.rows) {
            check(row.hom_rank == 0, name + ": no Hom term for p-torsion input");
            for (const auto& urow : uct.rows)
                if (urow.t == row.u + uct.n)
                    check(urow.lhs_exps == row.ext_exps,
                          name + ": ses orders match uct at u=" + std::to_string(row.u));
        }
    }
}

void property_suites() {
    std::mt19937 rng(2026);
    /* d o d = 0 on generated complexes: Koszul complexes and resolutions */
    {
        auto ring = make_ring(CoefficientRing::p_local(2), {{"x", 1}, {"y", 2}});
        std::uniform_int_distribution<int> cdist(-4, 4);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Element> elems = {
                parse_ring_element(ring, std::to_string(2 * (1 + (trial % 3)))),
                ring_element(ring, {{Rational(cdist(rng)), Monomial{{1, 0}}}}),
                ring_element(ring, {{Rational(1), Monomial{{0, 1}}},
                                    {Rational(cdist(rng) * 2), Monomial{{2, 0}}}}),
            };
            std::vector<Element> clean;
            for (auto& e : elems)
                if (!e.is_zero()) clean.push_back(e);
            validate_complex(ring, koszul_complex(ring, clean));
            ModulePresentation m = quotient_module(ring, clean);
            validate_complex(ring, free_resolution(ring, m, 3));
        }
    }
    /* Matlis double-dual identity on 50 random degreewise modules */
    {
        std::uniform_int_distribution<int> edist(0, 2), cdist(0, 15);
        for (int trial = 0; trial < 50; ++trial) {
            long p = trial % 2 ? 2 : 3;
            DegreewiseModule m;
            m.lo = -2;
            m.hi = 2;
            m.p = p;
            for (long d = m.lo; d <= m.hi; ++d) {
                DegreewiseModule::Piece pc;
                int k = edist(rng);
                for (int i = 0; i < k; ++i) pc.exps.push_back(1 + edist(rng));
                std::sort(pc.exps.rbegin(), pc.exps.rend());
                m.pieces.push_back(pc);
            }
            DegreewiseModule::Action act;
            act.gen = "x";
            act.degree = 1;
            act.maps.resize(5);
            for (long d = m.lo; d + 1 <= m.hi; ++d) {
                const auto& src = m.piece(d).exps;
                const auto& dst = m.piece(d + 1).exps;
                Mat map(dst.size(), src.size());
                for (std::size_t i = 0; i < dst.size(); ++i)
                    for (std::size_t j = 0; j < src.size(); ++j) {
                        long need = std::max<long>(dst[i] - src[j], 0);
                        map.at(i, j) = Rational(
                            reduce_mod_p_power(Rational(cdist(rng)) * pow_int(p, need), p, dst[i]));
                    }
                act.maps[d - m.lo] = std::move(map);
            }
            m.actions.push_back(std::move(act));
            DegreewiseModule dd = matlis_dual(matlis_dual(m));
            for (long d = m.lo; d <= m.hi; ++d)
                check(dd.piece(d).exps == m.piece(d).exps, "double dual orders");
            for (long d = m.lo; d + 1 <= m.hi; ++d) {
                auto a = m.action_image_exp("x", d);
                auto b = dd.action_image_exp("x", d);
                check(a && b && *a == *b, "double dual action ranks");
            }
        }
    }
    /* Groebner membership soundness on 100 random combinations */
    {
        std::uniform_int_distribution<int> cdist(-6, 6), mdist(0, 11);
        int done = 0;
        while (done < 100) {
            bool plocal = done % 2;
            auto ring = make_ring(plocal ? CoefficientRing::p_local(2)
                                         : CoefficientRing::prime_field(3),
                                  {{"x", 1}, {"y", 1}});
            const FreeModule one = FreeModule::rank_one();
            std::vector<Element> gens = {
                ring_element(ring, {{Rational(cdist(rng)), Monomial{{2, 0}}},
                                    {Rational(cdist(rng)), Monomial{{1, 1}}}}),
                ring_element(ring, {{Rational(cdist(rng)), Monomial{{0, 3}}}}),
                ring_element(ring, {{Rational(2 * cdist(rng)), Monomial{{1, 0}}}}),
            };
            std::vector<Element> clean;
            for (auto& g : gens)
                if (!g.is_zero()) clean.push_back(g);
            if (clean.empty()) continue;
            auto gb = buchberger(ring, one, clean);
            Element comb;
            for (const auto& g : clean) {
                long need = 6 - element_degree(ring, one, g);
                auto monos = monomials_of_degree(ring, need);
                if (monos.empty()) continue;
                comb = add(ring, one, comb,
                           mul_scalar_term(ring, g, Rational(cdist(rng)),
                                           monos[mdist(rng) % monos.size()]));
            }
            check(normal_form(ring, one, gb.elems, comb).is_zero(), "membership soundness");
            ++done;
        }
    }
    /* parse / emit round trips are byte-exact */
    {
        for (const std::string name : {"fig1.chart", "fig2.chart"}) {
            Chart c = parse_chart(read_file(kFixtures + "/" + name));
            std::string once = emit_chart(c);
            check(emit_chart(parse_chart(once)) == once, name + " round trip");
        }
        DslProgram prog = parse_dsl(read_file(kFixtures + "/uct_modules.gor"));
        check(prog.modules.size() == 9, "dsl fixture parses");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion(1, "shift table reproduction", 1.0, shift_table);
    criterion(2, "Gorenstein checker vs symbolic prediction (10 rings)", 30.0,
              gorenstein_ten_rings);
    criterion(3, "duality verification on torsion fixtures vs brute-force oracle", 120.0,
              uct_fixtures);
    criterion(4, "local cohomology: top concentration and torsion fixtures", 60.0,
              local_cohomology_checks);
    criterion(5, "chart duality pipeline with anchor (30,7) -> (34,0)", 1.0, chart_duality);
    criterion(6, "base-ring level composition factors", 10.0, ses_factors);
    criterion(7, "property suites (d o d, double dual, membership, round trips)", 120.0,
              property_suites);

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
