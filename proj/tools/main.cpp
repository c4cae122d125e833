#include "angle_persist/emit.hpp"
#include "angle_persist/hilbert.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace angp;

namespace {

struct CommonArgs {
    std::string input;
    std::string field = "q";
    std::vector<long> degrees;
    long max_periods = 0;
    long ngrid = 256;
    std::string output;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_field = true) {
    cmd->add_option("input", a.input, "input complex (json)")->required();
    if (with_field) cmd->add_option("--field", a.field, "coefficients: q or fp:PRIME");
    cmd->add_option("--max-periods", a.max_periods, "window growth cap (periods per side)")
        ->check(CLI::Range(4L, 100000L));
    cmd->add_option("-o,--output", a.output, "output path (default stdout)");
}

std::vector<long> resolve_degrees(const CommonArgs& a, const ComplexWithMap& c) {
    if (!a.degrees.empty()) return a.degrees;
    std::vector<long> out;
    for (long r = 0; r <= c.dim(); ++r) out.push_back(r);
    return out;
}

void write_out(const CommonArgs& a, const std::string& text) {
    if (a.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(a.output);
    if (!f) throw std::runtime_error("cannot write " + a.output);
    f << text;
}

std::vector<Configuration> run_configs(const CommonArgs& a, const ComplexWithMap& c,
                                       const FieldDesc& f) {
    ConfigOptions opts;
    opts.max_periods = a.max_periods;
    std::vector<Configuration> cfgs;
    for (long r : resolve_degrees(a, c)) cfgs.push_back(configuration(c, f, r, opts));
    return cfgs;
}

int dispatch(const std::string& sub, const CommonArgs& a, long slope_window, long duality_n) {
    ComplexWithMap c = load_complex_file(a.input);
    c.validate();
    if (sub == "validate") {
        std::cout << "ok\n";
        return 0;
    }
    FieldDesc f = parse_field(a.field);
    if (sub == "betti") {
        std::vector<NovikovInvariants> invs;
        for (long r : resolve_degrees(a, c)) invs.push_back(novikov_invariants(c, r, f));
        write_out(a, betti_json(invs, f));
        return 0;
    }
    if (sub == "config") {
        write_out(a, configuration_json(run_configs(a, c, f)));
        return 0;
    }
    if (sub == "poly") {
        write_out(a, poly_json(run_configs(a, c, f)));
        return 0;
    }
    if (sub == "plot") {
        write_out(a, configuration_svg(run_configs(a, c, f)));
        return 0;
    }
    if (sub == "modules") {
        ConfigOptions opts;
        opts.max_periods = a.max_periods;
        std::vector<ModuleRefinement> refs;
        for (long r : resolve_degrees(a, c)) refs.push_back(module_refinement(c, f, r, opts));
        write_out(a, modules_json(refs));
        return 0;
    }
    if (sub == "hilbert") {
        if (!f.is_rational())
            throw std::runtime_error("hilbert reports need rational coefficients (--field q)");
        ConfigOptions opts;
        opts.max_periods = a.max_periods;
        std::ostringstream os;
        for (long r : resolve_degrees(a, c)) {
            ModuleRefinement ref = module_refinement(c, f, r, opts);
            std::vector<PointwiseProjector> projs;
            for (const auto& e : ref.entries) projs.push_back(PointwiseProjector{e.L, e.Lprime});
            os << "degree " << r << ": " << projs.size() << " entries\n";
            for (size_t i = 0; i < projs.size(); ++i) {
                VnDimension vd = vn_dimension(projs[i], a.ngrid);
                os << "  entry " << i << ": vn_dim " << vd.value << " (mult "
                   << ref.entries[i].point.multiplicity << ", singular nodes "
                   << vd.singular_nodes << (vd.unreliable ? ", UNRELIABLE" : "") << ")\n";
            }
            if (!projs.empty()) {
                OrthogonalityReport rep = orthogonality_report(projs, a.ngrid);
                os << "  idempotent dev " << rep.max_idempotent_dev << ", self-adjoint dev "
                   << rep.max_self_adjoint_dev << ", cross product " << rep.max_cross_product
                   << ", sum-identity dev " << rep.max_sum_identity_dev << "\n";
            }
        }
        write_out(a, os.str());
        return 0;
    }
    if (sub == "oracle-check") {
        std::vector<OracleReport> reps;
        int rc = 0;
        for (long r : resolve_degrees(a, c)) {
            OracleReport rep = oracle_delta(c, r, {3, 4, 5}, f);
            reps.push_back(rep);
            reps.push_back(oracle_betti_slope(c, r, slope_window, f));
            Configuration cfg = configuration(c, f, r, {});
            std::map<std::pair<Rational, Rational>, long> mine;
            for (const auto& p : cfg.points) mine[{p.a, p.b}] = p.multiplicity;
            if (!rep.stabilized || mine != rep.stable_support) {
                std::cerr << "oracle mismatch in degree " << r << "\n";
                rc = 2;
            }
        }
        write_out(a, oracle_json(reps));
        return rc;
    }
    if (sub == "duality") {
        auto cfgs = run_configs(a, c, f);
        DualityReport rep = duality_check(cfgs, duality_n, duality_n >= 0);
        if (!rep.applicable) {
            std::cout << "not applicable\n";
            return 0;
        }
        std::cout << (rep.mismatches.empty() ? "pass" : "mismatches found") << "\n";
        return rep.mismatches.empty() ? 0 : 2;
    }
    throw std::runtime_error("unknown subcommand " + sub);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Refined Novikov-Betti invariants of angle-valued maps"};
    app.require_subcommand(1);

    std::map<std::string, CommonArgs> args;
    long slope_window = 6;
    long duality_n = -1;
    for (const char* name : {"validate", "betti", "config", "poly", "modules", "hilbert",
                             "oracle-check", "plot", "duality"}) {
        CLI::App* cmd = app.add_subcommand(name);
        CommonArgs& a = args[name];
        add_common(cmd, a, std::string(name) != "validate");
        if (std::string(name) != "validate")
            cmd->add_option("--deg", a.degrees, "degrees to compute (default: all)");
        if (std::string(name) == "hilbert")
            cmd->add_option("--grid", a.ngrid, "quadrature nodes")->check(CLI::Range(16L, 1L << 20));
        if (std::string(name) == "oracle-check")
            cmd->add_option("--slope-window", slope_window, "window size for the dimension slope");
        if (std::string(name) == "duality")
            cmd->add_option("--manifold-dim", duality_n, "declare X a closed n-manifold");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::string sub = app.get_subcommands().front()->get_name();
    try {
        return dispatch(sub, args[sub], slope_window, duality_n);
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const TerminationError& e) {
        std::cerr << "termination failure: " << e.what() << "\n";
        return 2;
    } catch (const CertificateError& e) {
        std::cerr << "certificate failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
