#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "pdmcs/numerics.hpp"
#include "pdmcs/verify.hpp"

namespace {

using namespace pdmcs;

struct CommonOpts {
    std::string reference = "harmonic";
    std::string profile = "constant";
    double gamma = 1.0;
    std::string grid_spec;  // xmin:xmax:n, empty -> per-problem suggestion
    std::vector<std::string> alpha_specs;
    int n_max = 40;
    int k = 5;
    std::string format = "json";
    std::string out_path;
    bool dump_density = false;
    bool timing = false;
};

ReferenceKind parse_reference(const std::string& s) {
    if (s == "harmonic") return ReferenceKind::Harmonic;
    if (s == "nonlinear") return ReferenceKind::CarinenaNonlinear;
    throw CLI::ValidationError("--reference must be harmonic or nonlinear");
}

MassProfile parse_profile(const std::string& s, double gamma) {
    if (s == "constant") return MassProfile::constant();
    if (s == "case1") return MassProfile::rational_case1(gamma);
    if (s == "case2") return MassProfile::cosh_case2(gamma);
    throw CLI::ValidationError("--profile must be constant, case1 or case2");
}

Grid parse_grid(const std::string& spec) {
    double a, b;
    int n;
    char c1, c2;
    std::istringstream is(spec);
    if (!(is >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':')
        throw CLI::ValidationError("--grid must be xmin:xmax:n");
    if (n % 2 == 0)
        throw CLI::ValidationError("--grid: n_points must be odd (Simpson quadrature)");
    return Grid(a, b, n);
}

Complex parse_alpha(const std::string& spec) {
    double re, im;
    char c;
    std::istringstream is(spec);
    if (!(is >> re >> c >> im) || c != ',')
        throw CLI::ValidationError("--alpha must be re,im");
    return Complex(re, im);
}

void echo_config(Report& rep, const CommonOpts& o, const Grid& grid) {
    rep.config.emplace_back("reference", o.reference);
    rep.config.emplace_back("profile", o.profile);
    rep.config.emplace_back("gamma", format_g12(o.gamma));
    rep.config.emplace_back("grid", format_g12(grid.x_min) + ":" +
                                        format_g12(grid.x_max) + ":" +
                                        std::to_string(grid.n_points));
}

void emit(const Report& rep, const CommonOpts& o) {
    const std::string body =
        o.format == "csv" ? to_csv(rep) : to_json(rep, o.timing);
    if (o.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream os(o.out_path, std::ios::binary);
        os << body;
    }
}

int report_exit(const Report& rep) { return rep.failed() == 0 ? 0 : 1; }

int run_spectrum(const CommonOpts& o) {
    PdmProblem problem =
        make_problem(parse_profile(o.profile, o.gamma), parse_reference(o.reference));
    const Grid grid =
        o.grid_spec.empty() ? Grid(-10.0, 10.0, 2001) : parse_grid(o.grid_spec);

    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.command = "spectrum";
    echo_config(rep, o, grid);
    rep.config.emplace_back("k", std::to_string(o.k));

    for (const auto& row : spectrum_report(problem, grid, o.k))
        rep.add(check("level n=" + std::to_string(row.n) + " |E_discrete - " +
                          format_g12(row.analytic) + "|",
                      row.gap, 1e-3));
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(rep, o);
    return report_exit(rep);
}

int run_coherent(const CommonOpts& o) {
    PdmProblem problem =
        make_problem(parse_profile(o.profile, o.gamma), parse_reference(o.reference));
    const Grid grid =
        o.grid_spec.empty() ? problem.suggested_grid() : parse_grid(o.grid_spec);
    LadderSystem ls = build_ladder(problem);
    const bool harmonic = problem.reference.kind == ReferenceKind::Harmonic;

    std::vector<Complex> alphas;
    for (const auto& s : o.alpha_specs) alphas.push_back(parse_alpha(s));

    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.command = "coherent";
    echo_config(rep, o, grid);
    {
        std::string a = "[";
        for (size_t i = 0; i < alphas.size(); ++i)
            a += std::string(i ? ", " : "") + "[" + format_g12(alphas[i].real()) + ", " +
                 format_g12(alphas[i].imag()) + "]";
        rep.config.emplace_back("alphas", a + "]");
        rep.config.emplace_back("n_max", std::to_string(o.n_max));
    }

    const double sqrt2 = std::sqrt(2.0);
    std::vector<std::vector<CheckRecord>> slots(alphas.size());
    std::vector<GridFunction> densities(alphas.size(), GridFunction(grid));

#pragma omp parallel for schedule(dynamic)
    for (int ia = 0; ia < static_cast<int>(alphas.size()); ++ia) {
        const Complex a = alphas[ia];
        auto& recs = slots[ia];
        const std::string tag = "alpha=[" + format_g12(a.real()) + "," +
                                format_g12(a.imag()) + "] ";
        try {
            CoherentState cs = make_coherent(problem, ls, a, grid);
            recs.push_back(check(tag + "eigenstate residual",
                                 eigenstate_residual(cs, ls), 1e-5));
            UncertaintyReport u = uncertainty_report(cs, ls);
            recs.push_back(check(tag + "uncertainty gap/bound",
                                 u.equality_gap / u.bound, 1e-6));
            recs.push_back(check(tag + "|mean_phi - sqrt2 Re a|",
                                 std::abs(u.mean_phi - sqrt2 * a.real()), 1e-7));
            recs.push_back(check(tag + "|mean_pi - sqrt2 Im a|",
                                 std::abs(u.mean_pi - sqrt2 * a.imag()), 1e-7));
            if (harmonic) {
                GridFunction series = perelomov_series(problem, a, o.n_max, grid);
                // The product form e^{sqrt2 a f} psi0 equals the displacement
                // expansion only up to the Weyl-reordering phase e^{i Re a Im a}.
                const Complex weyl = std::exp(Complex(0.0, a.real() * a.imag()));
                recs.push_back(check(tag + "perelomov sup gap",
                                     sup_distance(weyl * series, cs.state), 1e-6));
            }
            DisplacementCheck dc = displacement_check(problem, ls, a, grid);
            if (dc.pure_imaginary)
                recs.push_back(check(tag + "phase-displacement norm deviation",
                                     dc.norm_deviation, 1e-10));
            recs.push_back(check(tag + "displacement pointwise gap",
                                 dc.pointwise_gap, 1e-12));
            for (int i = 0; i < grid.n_points; ++i)
                densities[ia][i] = std::norm(cs.state[i]);
        } catch (const std::domain_error& e) {
            recs.push_back(CheckRecord{tag + "construction failed: " + e.what(),
                                       std::numeric_limits<double>::infinity(), 0.0,
                                       false});
        }
    }
    for (auto& recs : slots)
        for (auto& c : recs) rep.add(std::move(c));
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (o.dump_density) {
        std::ostringstream os;
        os << "x";
        for (size_t ia = 0; ia < alphas.size(); ++ia) os << ",density_alpha" << ia;
        os << "\n";
        for (int i = 0; i < grid.n_points; ++i) {
            os << format_g12(grid.node(i));
            for (size_t ia = 0; ia < alphas.size(); ++ia)
                os << "," << format_g12(densities[ia][i].real());
            os << "\n";
        }
        const std::string path =
            o.out_path.empty() ? "density.csv" : o.out_path + ".density.csv";
        std::ofstream dos(path, std::ios::binary);
        dos << os.str();
    }

    emit(rep, o);
    return report_exit(rep);
}

int run_verify_all(const CommonOpts& o) {
    Report rep = acceptance_report();
    rep.config.emplace_back("suite", "acceptance");
    emit(rep, o);
    return report_exit(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherent-state verification for exactly solvable "
                 "position-dependent-mass Schrodinger problems"};
    app.require_subcommand(1);

    CommonOpts o;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--reference", o.reference, "harmonic|nonlinear");
        cmd->add_option("--profile", o.profile, "constant|case1|case2");
        cmd->add_option("--gamma", o.gamma, "profile parameter");
        cmd->add_option("--grid", o.grid_spec, "xmin:xmax:n (n odd)");
        cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", o.out_path, "write report here instead of stdout");
        cmd->add_flag("--timing", o.timing, "include wall_time_s in JSON output");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form spectrum vs oracle");
    add_common(spectrum);
    spectrum->add_option("--k", o.k, "number of eigenvalues");

    CLI::App* coherent = app.add_subcommand("coherent", "coherent-state checks");
    add_common(coherent);
    coherent->add_option("--alpha", o.alpha_specs, "re,im (repeatable)")->required();
    coherent->add_option("--n-max", o.n_max, "Perelomov truncation");
    coherent->add_flag("--dump-density", o.dump_density, "write |<x|a>|^2 as CSV");

    CLI::App* verify = app.add_subcommand("verify-all", "run the full acceptance battery");
    add_common(verify);

    try {
        app.parse(argc, argv);
        if (spectrum->parsed()) return run_spectrum(o);
        if (coherent->parsed()) return run_coherent(o);
        return run_verify_all(o);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
