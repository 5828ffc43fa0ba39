#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergman/carleson.hpp"
#include "bergman/classifier.hpp"
#include "bergman/io.hpp"
#include "bergman/kernels.hpp"
#include "bergman/lacunary.hpp"
#include "bergman/report.hpp"
#include "bergman/spaces.hpp"
#include "bergman/verify.hpp"

namespace {

using namespace bergman;

// Exit codes: 2 parse failure, 3 parameter validation failure, 4 unknown suite.
constexpr int kExitParse = 2;
constexpr int kExitParams = 3;
constexpr int kExitUnknownSuite = 4;

struct OutputOptions {
    std::string format = "json";
    std::string out;
};

void add_output_flags(CLI::App* cmd, OutputOptions& options) {
    cmd->add_option("--format", options.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", options.out, "Write the report to this file");
}

void emit(const Report& report, const OutputOptions& options) {
    const std::string text =
        options.format == "csv" ? report.to_csv() : report.to_json();
    if (options.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(options.out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file " + options.out);
    file << text;
}

BallPoint parse_point(const std::string& text, int n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("point: ") + e.what());
    }
    if (static_cast<int>(j.size()) != n) throw ParseError("point: coordinate arity != n");
    CVector z;
    for (const auto& c : j) {
        if (c.size() != 2) throw ParseError("point: coordinate is not [re, im]");
        z.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    return BallPoint(std::move(z));
}

std::string regime_name(KernelRegime regime) {
    switch (regime) {
        case KernelRegime::standard: return "standard";
        case KernelRegime::log_type: return "log";
        case KernelRegime::frac_neg: return "frac-neg";
        case KernelRegime::int_neg: return "int-neg";
    }
    return "?";
}

std::string membership_name(Membership m) {
    switch (m) {
        case Membership::member: return "member";
        case Membership::non_member: return "non-member";
        case Membership::inconclusive: return "inconclusive";
    }
    return "?";
}

int run(int argc, char** argv) {
    CLI::App app{"Weighted Bergman space calculator for the unit ball of C^n"};
    app.require_subcommand(1);

    std::uint64_t seed = 0xB16B00B5ull;
    int samples = 100000;
    int degree = 60;
    app.add_option("--seed", seed, "Random seed recorded in every report");
    app.add_option("--samples", samples, "Monte Carlo sample count");
    app.add_option("--degree", degree, "Series truncation degree");

    // --- norm ---
    auto* norm_cmd = app.add_subcommand("norm", "Bergman quasi-norm of a series file");
    std::string norm_input;
    double norm_p = 2.0, norm_alpha = 0.0;
    std::string norm_method = "exact";
    double norm_rmax = 0.995;
    OutputOptions norm_out;
    norm_cmd->add_option("--input", norm_input, "Series JSON file")->required();
    norm_cmd->add_option("--p", norm_p, "Exponent p");
    norm_cmd->add_option("--alpha", norm_alpha, "Weight alpha");
    norm_cmd->add_option("--method", norm_method, "exact, quad, mc, or both")
        ->check(CLI::IsMember({"exact", "quad", "mc", "both"}));
    norm_cmd->add_option("--r-max", norm_rmax, "Radial cutoff");
    add_output_flags(norm_cmd, norm_out);

    // --- member ---
    auto* member_cmd =
        app.add_subcommand("member", "Lacunary-series membership from block growth data");
    int member_n = 1;
    double member_p = 2.0, member_alpha = 0.0;
    std::string member_space = "bergman";
    double gap_scale = 1.0, gap_ratio = 2.0;
    double norm_scale = 1.0, norm_base = 1.0;
    std::optional<double> norm_power;
    OutputOptions member_out;
    member_cmd->add_option("--n", member_n, "Dimension");
    member_cmd->add_option("--p", member_p, "Exponent p");
    member_cmd->add_option("--alpha", member_alpha, "Weight / smoothness index");
    member_cmd->add_option("--space", member_space, "bergman or lipschitz")
        ->check(CLI::IsMember({"bergman", "lipschitz"}));
    member_cmd->add_option("--gap-scale", gap_scale, "Orders m_k = scale * ratio^k");
    member_cmd->add_option("--gap-ratio", gap_ratio, "Gap ratio (> 1)");
    member_cmd->add_option("--norm-scale", norm_scale, "Block norm scale");
    member_cmd->add_option("--norm-base", norm_base, "Block norm geometric base");
    member_cmd->add_option("--norm-power", norm_power,
                           "Block norm polynomial exponent (omit if unknown)");
    add_output_flags(member_cmd, member_out);

    // --- kernel ---
    auto* kernel_cmd = app.add_subcommand("kernel", "Reproducing kernel value");
    int kernel_n = 1;
    double kernel_alpha = 0.0;
    std::string kernel_z, kernel_w;
    OutputOptions kernel_out;
    kernel_cmd->add_option("--n", kernel_n, "Dimension");
    kernel_cmd->add_option("--alpha", kernel_alpha, "Weight alpha");
    kernel_cmd->add_option("--z", kernel_z, "Point, e.g. [[0.1,0.0],[0.2,0.3]]")->required();
    kernel_cmd->add_option("--w", kernel_w, "Point")->required();
    add_output_flags(kernel_cmd, kernel_out);

    // --- natural-kernel ---
    auto* natural_cmd =
        app.add_subcommand("natural-kernel", "Kernel of the derivative inner product");
    int natural_n = 1, natural_k = 1;
    double natural_alpha = 0.0, natural_tol = 1e-10;
    std::string natural_z, natural_w;
    OutputOptions natural_out;
    natural_cmd->add_option("--n", natural_n, "Dimension");
    natural_cmd->add_option("--alpha", natural_alpha, "Weight alpha");
    natural_cmd->add_option("--k", natural_k, "Derivative order (2k + alpha > -1)");
    natural_cmd->add_option("--z", natural_z, "Point")->required();
    natural_cmd->add_option("--w", natural_w, "Point")->required();
    natural_cmd->add_option("--tol", natural_tol, "Tail bound tolerance");
    add_output_flags(natural_cmd, natural_out);

    // --- carleson ---
    auto* carleson_cmd =
        app.add_subcommand("carleson", "Carleson constant of a discrete measure");
    std::string carleson_measure;
    double carleson_alpha = 0.0;
    OutputOptions carleson_out;
    carleson_cmd->add_option("--measure", carleson_measure, "Measure JSON file")->required();
    carleson_cmd->add_option("--alpha", carleson_alpha, "Weight alpha (n+1+alpha > 0)");
    add_output_flags(carleson_cmd, carleson_out);

    // --- berezin ---
    auto* berezin_cmd = app.add_subcommand("berezin", "Berezin-type transforms at a point");
    std::string berezin_measure, berezin_z;
    double berezin_s = 1.0, berezin_gamma = 0.0, berezin_R = 0.0;
    OutputOptions berezin_out;
    berezin_cmd->add_option("--measure", berezin_measure, "Measure JSON file")->required();
    berezin_cmd->add_option("--s", berezin_s, "Weight exponent s");
    berezin_cmd->add_option("--gamma", berezin_gamma, "Kernel exponent gamma");
    berezin_cmd->add_option("--z", berezin_z, "Point")->required();
    berezin_cmd->add_option("--R", berezin_R,
                            "Also report the Bergman-ball average at this radius");
    add_output_flags(berezin_cmd, berezin_out);

    // --- forelli-rudin ---
    auto* fr_cmd = app.add_subcommand("forelli-rudin", "Forelli-Rudin integral by series");
    int fr_n = 1;
    double fr_rho = 0.5, fr_s = 0.0, fr_t = 0.0, fr_tol = 1e-10;
    OutputOptions fr_out;
    fr_cmd->add_option("--n", fr_n, "Dimension");
    fr_cmd->add_option("--rho", fr_rho, "|z| in [0, 1)");
    fr_cmd->add_option("--s", fr_s, "Weight exponent (> -1)");
    fr_cmd->add_option("--t", fr_t, "Kernel excess t");
    fr_cmd->add_option("--tol", fr_tol, "Tail tolerance");
    add_output_flags(fr_cmd, fr_out);

    // --- classify ---
    auto* classify_cmd =
        app.add_subcommand("classify", "Inclusion relations between weighted spaces");
    int classify_n = 1;
    std::vector<std::string> classify_spaces;
    OutputOptions classify_out;
    classify_cmd->add_option("--n", classify_n, "Dimension");
    classify_cmd
        ->add_option("--space", classify_spaces,
                     "Space as 'p,alpha'; every ordered pair of the listed spaces is classified")
        ->required()
        ->expected(-1);
    add_output_flags(classify_cmd, classify_out);

    // --- synthesize ---
    auto* synth_cmd =
        app.add_subcommand("synthesize", "Atomic synthesis with a seeded lattice");
    int synth_n = 1, synth_atoms = 100, synth_shells = 5;
    double synth_p = 1.0, synth_alpha = 0.0, synth_b = 3.0, synth_delta = 0.4;
    OutputOptions synth_out;
    synth_cmd->add_option("--n", synth_n, "Dimension");
    synth_cmd->add_option("--p", synth_p, "Exponent p");
    synth_cmd->add_option("--alpha", synth_alpha, "Weight alpha");
    synth_cmd->add_option("--b", synth_b, "Atom exponent");
    synth_cmd->add_option("--atoms", synth_atoms, "Number of atoms");
    synth_cmd->add_option("--delta", synth_delta, "Lattice separation target");
    synth_cmd->add_option("--shells", synth_shells, "Lattice shell count");
    add_output_flags(synth_cmd, synth_out);

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
    std::string verify_suite = "all";
    OutputOptions verify_out;
    verify_cmd->add_option("--suite", verify_suite, "Suite name, or 'all'");
    verify_cmd->add_flag_callback(
        "--list", [] {
            for (const std::string& name : verify_suite_names()) std::cout << name << '\n';
            std::exit(0);
        },
        "List suite names and exit");
    add_output_flags(verify_cmd, verify_out);

    CLI11_PARSE(app, argc, argv);

    if (norm_cmd->parsed()) {
        const TaylorPolynomial f = load_series(norm_input);
        const SpaceParams sp{f.dimension(), norm_p, norm_alpha};
        sp.validate();
        QuadratureSpec quad;
        quad.seed = seed;
        quad.mc_samples = samples;
        quad.r_max = norm_rmax;
        Report report;
        report.operation = "norm";
        report.param("n", f.dimension());
        report.param("p", norm_p);
        report.param("alpha", norm_alpha);
        report.param("seed", seed);
        auto add_estimate = [&](const NormEstimate& estimate) {
            ReportRow row;
            row.add("method", estimate.method);
            row.add("value", estimate.value);
            if (estimate.method == "monte-carlo") row.add("stderr", estimate.std_error);
            row.add("seed", estimate.seed);
            report.rows.push_back(std::move(row));
        };
        if (norm_method == "exact") {
            add_estimate(bergman_norm(f, sp, quad, NormMethod::exact));
        } else if (norm_method == "quad") {
            add_estimate(bergman_norm(f, sp, quad, NormMethod::quadrature));
        } else if (norm_method == "mc") {
            add_estimate(bergman_norm(f, sp, quad, NormMethod::monte_carlo));
        } else {
            add_estimate(bergman_norm(f, sp, quad, NormMethod::exact));
            add_estimate(bergman_norm(f, sp, quad, sp.n == 1 ? NormMethod::quadrature
                                                             : NormMethod::monte_carlo));
        }
        emit(report, norm_out);
        return 0;
    }

    if (member_cmd->parsed()) {
        const LacunaryGaps gaps{gap_scale, gap_ratio};
        BlockGrowth growth;
        growth.scale = norm_scale;
        growth.base = norm_base;
        if (norm_power.has_value()) growth.power = *norm_power;
        else growth.power.reset();
        Report report;
        report.operation = "member";
        report.param("space", member_space);
        report.param("n", member_n);
        report.param("p", member_p);
        report.param("alpha", member_alpha);
        report.param("seed", seed);
        ReportRow row;
        if (member_space == "bergman") {
            const SpaceParams sp{member_n, member_p, member_alpha};
            row.add("decision",
                    membership_name(lacunary_bergman_test(gaps, growth, sp)));
        } else {
            const LipschitzClass cls =
                lacunary_lipschitz_test(gaps, growth, member_alpha);
            row.add("decision", cls == LipschitzClass::little_oh    ? "little-oh"
                                : cls == LipschitzClass::big_oh_only ? "big-oh-only"
                                                                     : "outside");
        }
        report.rows.push_back(std::move(row));
        emit(report, member_out);
        return 0;
    }

    if (kernel_cmd->parsed()) {
        const KernelSpec spec = KernelSpec::with_default_q(kernel_n, kernel_alpha);
        const BallPoint z = parse_point(kernel_z, kernel_n);
        const BallPoint w = parse_point(kernel_w, kernel_n);
        const Complex value = kernel_eval(spec, z, w);
        Report report;
        report.operation = "kernel";
        report.param("n", kernel_n);
        report.param("alpha", kernel_alpha);
        report.param("seed", seed);
        report.param("q", spec.default_q() ? "default" : "custom");
        ReportRow row;
        row.add("regime", regime_name(spec.regime()));
        row.add("re", value.real());
        row.add("im", value.imag());
        report.rows.push_back(std::move(row));
        emit(report, kernel_out);
        return 0;
    }

    if (natural_cmd->parsed()) {
        const BallPoint z = parse_point(natural_z, natural_n);
        const BallPoint w = parse_point(natural_w, natural_n);
        const SeriesValue value =
            natural_kernel_eval(natural_n, natural_alpha, natural_k, z, w, degree);
        if (!(value.tail_bound <= natural_tol))
            throw std::invalid_argument(
                "natural-kernel: tail bound above tolerance; raise --degree");
        Report report;
        report.operation = "natural-kernel";
        report.param("n", natural_n);
        report.param("alpha", natural_alpha);
        report.param("k", natural_k);
        report.param("degree", degree);
        report.param("seed", seed);
        ReportRow row;
        row.add("re", value.value.real());
        row.add("im", value.value.imag());
        row.add("tail-bound", value.tail_bound);
        row.add("terms", value.terms);
        report.rows.push_back(std::move(row));
        emit(report, natural_out);
        return 0;
    }

    if (carleson_cmd->parsed()) {
        const DiscreteMeasure mu = load_measure(carleson_measure);
        const ProbeGrid grid = ProbeGrid::standard(mu.n, seed);
        const CarlesonEstimate estimate = carleson_constant(mu, carleson_alpha, grid);
        Report report;
        report.operation = "carleson";
        report.param("n", mu.n);
        report.param("alpha", carleson_alpha);
        report.param("seed", seed);
        ReportRow row;
        row.add("statistic", "carleson-constant");
        row.add("grid-id", "zeta" + std::to_string(estimate.argmax_zeta) + ":r" +
                               std::to_string(estimate.argmax_radius));
        row.add("value", estimate.constant);
        row.add("seed", seed);
        report.rows.push_back(std::move(row));
        emit(report, carleson_out);
        return 0;
    }

    if (berezin_cmd->parsed()) {
        const DiscreteMeasure mu = load_measure(berezin_measure);
        const BallPoint z = parse_point(berezin_z, mu.n);
        Report report;
        report.operation = "berezin";
        report.param("n", mu.n);
        report.param("s", berezin_s);
        report.param("gamma", berezin_gamma);
        report.param("seed", seed);
        ReportRow row;
        row.add("statistic", "berezin");
        row.add("grid-id", "point");
        row.add("value", berezin(mu, berezin_s, berezin_gamma, z));
        row.add("seed", seed);
        report.rows.push_back(std::move(row));
        if (berezin_R > 0.0) {
            ReportRow hat;
            hat.add("statistic", "muhat");
            hat.add("grid-id", "point");
            hat.add("value", muhat(mu, berezin_R, berezin_gamma, z));
            hat.add("seed", seed);
            report.rows.push_back(std::move(hat));
        }
        emit(report, berezin_out);
        return 0;
    }

    if (fr_cmd->parsed()) {
        const ForelliRudinValue value = forelli_rudin(fr_n, fr_rho, fr_s, fr_t, fr_tol);
        Report report;
        report.operation = "forelli-rudin";
        report.param("n", fr_n);
        report.param("rho", fr_rho);
        report.param("s", fr_s);
        report.param("t", fr_t);
        report.param("seed", seed);
        ReportRow row;
        row.add("value", value.value);
        row.add("tail-bound", value.tail_bound);
        row.add("terms", value.terms);
        report.rows.push_back(std::move(row));
        emit(report, fr_out);
        return 0;
    }

    if (classify_cmd->parsed()) {
        std::vector<SpaceParams> spaces;
        for (const std::string& text : classify_spaces) {
            const auto comma = text.find(',');
            if (comma == std::string::npos)
                throw ParseError("classify: space must be 'p,alpha'");
            try {
                spaces.push_back({classify_n, std::stod(text.substr(0, comma)),
                                  std::stod(text.substr(comma + 1))});
            } catch (const std::exception&) {
                throw ParseError("classify: space must be 'p,alpha'");
            }
        }
        Report report;
        report.operation = "classify";
        report.param("n", classify_n);
        report.param("seed", seed);
        for (const SpaceParams& a : spaces) {
            for (const SpaceParams& b : spaces) {
                ReportRow row;
                row.add("p1", a.p);
                row.add("alpha1", a.alpha);
                row.add("p2", b.p);
                row.add("alpha2", b.alpha);
                const Relation relation = inclusion_bergman(a, b);
                row.add("relation", relation_name(relation));
                std::string witness_id;
                if (classify_n == 1 && (relation == Relation::neither ||
                                        relation == Relation::strict_superset)) {
                    const auto witness = separating_witness(a, b);
                    if (witness.has_value())
                        witness_id = witness->kind + ":" + float17(witness->parameter);
                }
                row.add("witness-id", witness_id);
                report.rows.push_back(std::move(row));
            }
        }
        emit(report, classify_out);
        return 0;
    }

    if (synth_cmd->parsed()) {
        const SpaceParams sp{synth_n, synth_p, synth_alpha};
        Lattice lattice = lattice_generate(synth_n, synth_delta, synth_shells, seed);
        if (static_cast<int>(lattice.points.size()) < synth_atoms)
            throw std::invalid_argument(
                "synthesize: lattice smaller than requested atom count; add shells");
        lattice.points.erase(lattice.points.begin() + synth_atoms, lattice.points.end());
        Rng rng = Rng::substream(seed, 99);
        std::vector<double> coefficients(static_cast<std::size_t>(synth_atoms));
        for (double& c : coefficients) c = rng.uniform(-1.0, 1.0);
        QuadratureSpec quad;
        quad.seed = seed;
        quad.mc_samples = samples;
        const SynthesisReport synthesis =
            atomic_synthesize(coefficients, lattice, synth_b, sp, quad);
        Report report;
        report.operation = "synthesize";
        report.param("n", synth_n);
        report.param("p", synth_p);
        report.param("alpha", synth_alpha);
        report.param("b", synth_b);
        report.param("atoms", synth_atoms);
        report.param("seed", seed);
        ReportRow row;
        row.add("norm", synthesis.norm.value);
        if (synthesis.norm.method == "monte-carlo")
            row.add("stderr", synthesis.norm.std_error);
        row.add("method", synthesis.norm.method);
        row.add("coefficient-sum", synthesis.coefficient_sum);
        row.add("ratio", synthesis.ratio);
        row.add("seed", seed);
        report.rows.push_back(std::move(row));
        emit(report, synth_out);
        return 0;
    }

    if (verify_cmd->parsed()) {
        VerifyConfig config;
        config.seed = seed;
        config.samples = samples;
        config.degree = degree;
        std::vector<std::string> suites;
        if (verify_suite == "all") suites = verify_suite_names();
        else suites.push_back(verify_suite);

        Report report;
        report.operation = "verify";
        report.param("suite", verify_suite);
        report.param("seed", seed);
        bool all_pass = true;
        for (const std::string& name : suites) {
            const SuiteResult result = run_verify_suite(name, config);
            all_pass = all_pass && result.passed();
            for (const CheckRow& row : result.rows) {
                ReportRow out;
                out.add("suite", result.suite);
                out.add("name", row.name);
                out.add("expected", row.expected);
                out.add("observed", row.observed);
                out.add("tolerance", row.tolerance);
                out.add("pass", row.pass);
                report.rows.push_back(std::move(out));
            }
        }
        emit(report, verify_out);
        return all_pass ? 0 : 1;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bergman::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const bergman::UnknownSuite& e) {
        std::cerr << e.what() << '\n';
        return kExitUnknownSuite;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return kExitParams;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return kExitParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
