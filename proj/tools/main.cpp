#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gordual/chart_ops.hpp"
#include "gordual/dsl.hpp"
#include "gordual/gorenstein.hpp"
#include "gordual/hilbert.hpp"
#include "gordual/local_cohomology.hpp"
#include "gordual/ses.hpp"
#include "gordual/uct.hpp"

namespace {

using namespace gordual;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in.good()) throw SyntaxError(0, 0, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out.good()) throw SyntaxError(0, 0, "cannot open " + path + " for writing");
    out << text;
}

struct ModuleSelection {
    const DslProgram::NamedModule* mod;
    const GradedRing* ring;
};

ModuleSelection select_module(const DslProgram& prog, const std::string& name) {
    if (prog.modules.empty()) throw SyntaxError(0, 0, "input declares no modules");
    const DslProgram::NamedModule* m = nullptr;
    if (name.empty()) {
        m = &prog.modules.front();
    } else {
        m = prog.find_module(name);
        if (!m) throw SyntaxError(0, 0, "no module named " + name);
    }
    return {m, &prog.rings[m->ring_index].ring};
}

void print_shift(const std::string& label, const ShiftResult& s) {
    std::cout << label << ": b=" << s.b << " n=" << s.n << " c=" << s.c << " a=" << s.a;
    if (s.modulus) std::cout << " modulus=" << *s.modulus;
    std::cout << "\n";
}

int run_shift(const std::string& dsl_path, const std::vector<long>& bp,
              const std::vector<long>& en, long lubin_tate, long prime) {
    if (!bp.empty()) {
        long p = bp[0], n = bp[1];
        ShiftResult s = gorenstein_shift_symbolic(bp_ring(p, n));
        std::cout << "BP<" << n << "> at p=" << p << ": D=" << bp_degree_sum(p, n) << " ";
        print_shift("shift", s);
    }
    if (!en.empty()) {
        long p = en[0], m = en[1];
        ShiftResult s = gorenstein_shift_symbolic(johnson_wilson_ring(p, m));
        std::cout << "E(" << m << ") at p=" << p << ": ";
        print_shift("shift", s);
    }
    if (lubin_tate >= 0) {
        ShiftResult s = gorenstein_shift_symbolic(lubin_tate_ring(prime, lubin_tate));
        std::cout << "Lubin-Tate n=" << lubin_tate << ": ";
        print_shift("shift", s);
    }
    if (!dsl_path.empty()) {
        DslProgram prog = parse_dsl(read_input(dsl_path));
        for (const auto& r : prog.rings)
            print_shift("ring " + r.name, gorenstein_shift_symbolic(r.ring));
    }
    return kExitPass;
}

int run_check_gorenstein(const std::string& dsl_path, std::optional<long> max_i,
                         std::optional<std::pair<long, long>> window) {
    DslProgram prog = parse_dsl(read_input(dsl_path));
    if (prog.rings.empty()) throw SyntaxError(0, 0, "input declares no rings");
    bool all_ok = true;
    for (const auto& r : prog.rings) {
        std::cout << "== ring " << r.name << " ==\n";
        GorensteinReport rep = gorenstein_check(r.ring, max_i, window);
        std::cout << rep.to_string(r.ring);
        all_ok = all_ok && rep.gorenstein && rep.matches_symbolic;
    }
    return all_ok ? kExitPass : kExitVerificationFailed;
}

int run_ext(const DslProgram& prog, const std::string& module, long max_i, long lo, long hi) {
    auto sel = select_module(prog, module);
    long mi = max_i >= 0 ? max_i : ext_concentration_index(*sel.ring) + 1;
    std::cout << "Ext(M, A) for module " << sel.mod->name << ", positions 0.." << mi
              << ", window [" << lo << ", " << hi << "]\n";
    BigradedModule ext = ext_into_ring(*sel.ring, sel.mod->pres, mi, lo, hi);
    std::cout << ext.to_string();
    return kExitPass;
}

int run_local_cohomology(const std::string& dsl_path, const std::string& module,
                         const std::vector<std::string>& ideal, long lo, long hi, long t_max) {
    DslProgram prog = parse_dsl(read_input(dsl_path));
    const GradedRing* ring = nullptr;
    ModulePresentation pres{FreeModule::rank_one(), {}};
    std::string name = "A";
    if (prog.modules.empty()) {
        if (prog.rings.empty()) throw SyntaxError(0, 0, "input declares no rings");
        ring = &prog.rings.front().ring;  // the ring as a module over itself
    } else {
        auto sel = select_module(prog, module);
        ring = sel.ring;
        pres = sel.mod->pres;
        name = sel.mod->name;
    }
    std::vector<Element> gens;
    for (const auto& text : ideal) gens.push_back(parse_ring_element(*ring, text));
    if (gens.empty()) gens = maximal_ideal_gens(*ring);
    LocalCohomology lc = local_cohomology(*ring, pres, gens, lo, hi, t_max);
    std::cout << "local cohomology of " << name << " on [" << lo << ", " << hi
              << "], stabilized at Koszul power " << lc.stabilized_at << " (cap " << t_max
              << ")\n";
    std::cout << lc.h.to_string();
    return kExitPass;
}

int run_matlis(const std::string& dsl_path, const std::string& module, long lo, long hi) {
    DslProgram prog = parse_dsl(read_input(dsl_path));
    auto sel = select_module(prog, module);
    DegreewiseModule dm = expand_degreewise(*sel.ring, sel.mod->pres, lo, hi);
    DegreewiseModule dual = matlis_dual(dm);
    std::cout << "Matlis dual of " << sel.mod->name << " on [" << dual.lo << ", " << dual.hi
              << "]\n";
    for (long d = dual.lo; d <= dual.hi; ++d)
        std::cout << d << "  " << dual.piece_string(d) << "\n";
    for (const auto& act : dual.actions)
        for (long d = dual.lo; d <= dual.hi; ++d)
            if (auto e = dual.action_image_exp(act.gen, d))
                std::cout << act.gen << ": " << d << " -> " << d + act.degree
                          << "  image order exp " << *e << "\n";
    return kExitPass;
}

int run_uct(const std::string& dsl_path, const std::string& module, long lo, long hi,
            const std::string& format) {
    DslProgram prog = parse_dsl(read_input(dsl_path));
    auto sel = select_module(prog, module);
    UctReport rep = uct_verify(*sel.ring, sel.mod->pres, lo, hi);
    if (format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    return rep.verdict ? kExitPass : kExitVerificationFailed;
}

int run_ses(const std::string& dsl_path, const std::string& module, long lo, long hi) {
    DslProgram prog = parse_dsl(read_input(dsl_path));
    auto sel = select_module(prog, module);
    SesReport rep = k_level_ses(*sel.ring, sel.mod->pres, lo, hi);
    std::cout << "module " << sel.mod->name << " on [" << lo << ", " << hi << "]\n";
    std::cout << rep.to_text();
    return kExitPass;
}

int run_chart_dual(const std::string& path, long shift, const std::string& out) {
    Chart c = parse_chart(read_input(path));
    write_output(out, emit_chart(dual_chart(c, shift)));
    return kExitPass;
}

int run_chart_compare(const std::string& a_path, const std::string& b_path) {
    Chart a = parse_chart(read_input(a_path));
    Chart b = parse_chart(read_input(b_path));
    ChartDiff diff = compare_charts(a, b);
    std::cout << diff.to_string();
    return diff.empty() ? kExitPass : kExitVerificationFailed;
}

int run_chart_render(const std::string& path, const std::string& out) {
    Chart c = parse_chart(read_input(path));
    write_output(out, emit_chart_svg(c));
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gorenstein duality checks for graded polynomial coefficient rings"};
    app.require_subcommand(1);

    std::string dsl_path, module, format = "text", chart_in, chart_in2, chart_out;
    std::vector<long> window{-12, 4};
    std::vector<long> bp, en;
    long lubin_tate = -1, prime = 2, max_i = -1, t_max = 16, chart_shift = 0;
    std::vector<std::string> ideal;

    auto add_module_opts = [&](CLI::App* cmd) {
        cmd->add_option("-m,--dsl", dsl_path, "input file (ring/module declarations)")
            ->required();
        cmd->add_option("--module", module, "module name (default: first declared)");
        cmd->add_option("--window", window, "degree window lo hi")->expected(2);
    };

    auto* shift = app.add_subcommand("shift", "symbolic Gorenstein shift calculator");
    shift->add_option("--dsl", dsl_path, "input file with ring declarations");
    shift->add_option("--bp", bp, "p n: coefficients of BP<n>")->expected(2);
    shift->add_option("--en", en, "p m: Johnson-Wilson E(m)")->expected(2);
    shift->add_option("--lubin-tate", lubin_tate, "n: Lubin-Tate theory of height n");
    shift->add_option("--prime", prime, "prime for --lubin-tate (default 2)");

    auto* gor = app.add_subcommand("check-gorenstein", "Ext(k, A) concentration check");
    gor->add_option("-m,--dsl", dsl_path, "input file with ring declarations")->required();
    gor->add_option("--max-i", max_i, "largest homological position to compute");
    gor->add_option("--window", window, "degree window lo hi")->expected(2);

    auto* ext = app.add_subcommand("ext", "Ext(M, A) degreewise");
    add_module_opts(ext);
    ext->add_option("--max-i", max_i, "largest homological position (default n+1)");

    auto* lc = app.add_subcommand("local-cohomology", "H^*_I(M) via Koszul powers");
    add_module_opts(lc);
    lc->add_option("--ideal", ideal, "ideal generators (default: the maximal ideal)");
    lc->add_option("--t-max", t_max, "stabilization cap (default 16)");

    auto* matlis = app.add_subcommand("matlis-dual", "degreewise Matlis dual");
    add_module_opts(matlis);

    auto* uct = app.add_subcommand("uct-verify", "verify Ext^n(M, A) = Sigma^b M^v");
    add_module_opts(uct);
    uct->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* ses = app.add_subcommand("ses-k", "base-ring level Hom/Ext composition factors");
    add_module_opts(ses);

    auto* chart = app.add_subcommand("chart", "Adams-style chart utilities");
    chart->require_subcommand(1);
    auto* cdual = chart->add_subcommand("dual", "dualize a chart");
    cdual->add_option("input", chart_in, "chart file or - for stdin")->required();
    cdual->add_option("--shift", chart_shift, "Gorenstein shift a")->required();
    cdual->add_option("-o,--output", chart_out, "output file (default stdout)");
    auto* ccomp = chart->add_subcommand("compare", "diff two charts as module data");
    ccomp->add_option("first", chart_in, "chart file or -")->required();
    ccomp->add_option("second", chart_in2, "chart file or -")->required();
    auto* crender = chart->add_subcommand("render", "render a chart as SVG");
    crender->add_option("input", chart_in, "chart file or -")->required();
    crender->add_option("-o,--output", chart_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (window.size() != 2 || window[0] > window[1])
            throw SyntaxError(0, 0, "window lo must not exceed hi");
        if (t_max <= 0) throw SyntaxError(0, 0, "caps must be positive");
        if (*shift) {
            if (bp.empty() && en.empty() && lubin_tate < 0 && dsl_path.empty())
                throw SyntaxError(0, 0, "shift needs --bp, --en, --lubin-tate or --dsl");
            return run_shift(dsl_path, bp, en, lubin_tate, prime);
        }
        if (*gor)
            return run_check_gorenstein(
                dsl_path, max_i >= 0 ? std::optional<long>(max_i) : std::nullopt,
                gor->count("--window") > 0
                    ? std::optional<std::pair<long, long>>({window[0], window[1]})
                    : std::nullopt);
        if (*ext) {
            DslProgram prog = parse_dsl(read_input(dsl_path));
            return run_ext(prog, module, max_i, window[0], window[1]);
        }
        if (*lc) return run_local_cohomology(dsl_path, module, ideal, window[0], window[1], t_max);
        if (*matlis) return run_matlis(dsl_path, module, window[0], window[1]);
        if (*uct) return run_uct(dsl_path, module, window[0], window[1], format);
        if (*ses) return run_ses(dsl_path, module, window[0], window[1]);
        if (*chart) {
            if (*cdual) return run_chart_dual(chart_in, chart_shift, chart_out);
            if (*ccomp) return run_chart_compare(chart_in, chart_in2);
            if (*crender) return run_chart_render(chart_in, chart_out);
        }
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InhomogeneousRelationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
