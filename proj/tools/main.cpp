// poincare-kit: two-by-two Lorentz transformations, little groups,
// polarization coherency / Stokes analysis, and the two-mass decoherence
// bridge, from one command line.
//
// Exit codes: 0 success, 1 usage / input-format problems,
// 2 domain errors or a residual above the tolerance gate.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "poincare/commands.hpp"
#include "poincare/errors.hpp"

namespace {

enum class OutputMode { Text, JsonLine, Csv };

void emit(const poincare::cli::OutputRecord& rec, OutputMode mode) {
    switch (mode) {
        case OutputMode::Text: std::fputs(rec.to_text().c_str(), stdout); break;
        case OutputMode::JsonLine: std::fputs(rec.to_json().c_str(), stdout); break;
        case OutputMode::Csv: std::fputs(rec.to_csv().c_str(), stdout); break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace poincare::cli;

    CLI::App app{
        "poincare-kit: SL(2,C) four-vector transforms, Wigner little groups,\n"
        "polarization coherency/Stokes analysis, and the two-mass decoherence\n"
        "bridge."};
    app.require_subcommand(1);

    bool json = false, csv = false, degrees = false;
    double tolerance = kDefaultTolerance;
    auto* json_flag = app.add_flag("--json", json, "emit one compact JSON record on stdout");
    auto* csv_flag = app.add_flag("--csv", csv, "emit CSV on stdout");
    json_flag->excludes(csv_flag);
    csv_flag->excludes(json_flag);
    app.add_flag("--degrees", degrees,
                 "interpret angle parameters (phase, rotation, chi bounds) in degrees");
    app.add_option("--tolerance", tolerance, "gate applied to every reported residual")
        ->envname("POINCARE_KIT_TOL")
        ->check(CLI::PositiveNumber);

    TransformOptions transform_opt;
    auto* transform = app.add_subcommand(
        "transform", "apply a generator pipeline to a four-vector (t,z,x,y)");
    transform->add_option("--pipeline", transform_opt.pipeline,
                          "kind:param[,kind:param...]; kinds: phase, rot, boost "
                          "(aliases phaseshift, rotation, atten/attenuation); "
                          "first listed acts first")
        ->required();
    transform->add_option("--vector", transform_opt.vector, "four-vector t,z,x,y")
        ->required();

    LittleGroupOptions little_opt;
    std::string little_probe;
    auto* little = app.add_subcommand(
        "little-group", "classify a four-momentum and build its canonical form");
    little->add_option("--vector", little_opt.vector, "four-momentum t,z,x,y")->required();
    auto* probe_opt = little->add_option(
        "--probe", little_probe,
        "little-group element to verify: phase:x, rot:x (massive) or gauge:x (massless)");

    StokesOptions stokes_opt;
    double stokes_amplitude = 0.0, stokes_sigma = 0.0;
    std::string stokes_samples;
    auto* stokes = app.add_subcommand(
        "stokes", "coherency matrix, eigenvalues, Stokes vector, sphere radius");
    auto* amp_opt = stokes->add_option("--amplitude", stokes_amplitude,
                                       "common amplitude a of the closed form");
    stokes->add_option("--phi", stokes_opt.phi, "relative phase of the closed form");
    auto* sigma_opt =
        stokes->add_option("--sigma", stokes_sigma, "decoherence exponent (>= 0)");
    auto* samples_opt = stokes->add_option(
        "--samples", stokes_samples, "CSV file t,re1,im1,re2,im2 to estimate from");
    samples_opt->excludes(amp_opt)->excludes(sigma_opt);

    BridgeOptions bridge_opt;
    std::string bridge_sweep = "chi";
    double bridge_min = 0.0, bridge_max = 0.0;
    auto* bridge = app.add_subcommand(
        "bridge", "sweep the decoherence/mass-angle correspondence at fixed (m, p)");
    bridge->add_option("--mass", bridge_opt.mass, "total mass m > 0")->required();
    bridge->add_option("--momentum", bridge_opt.momentum, "shared momentum p > 0")
        ->required();
    bridge->add_option("--sweep", bridge_sweep, "sweep variable: chi or sigma")
        ->check(CLI::IsMember({"chi", "sigma"}));
    bridge->add_option("--n", bridge_opt.n, "number of sweep points (>= 2)");
    auto* bridge_min_opt = bridge->add_option("--min", bridge_min, "sweep lower bound");
    auto* bridge_max_opt = bridge->add_option("--max", bridge_max, "sweep upper bound");

    HyperbolaOptions hyper_opt;
    auto* hyper = app.add_subcommand(
        "hyperbola", "tabulate e = sqrt(m^2 + p^2) over a momentum range per mass");
    hyper->add_option("--masses", hyper_opt.masses, "comma-separated masses")->required();
    hyper->add_option("--p-range", hyper_opt.p_range, "momentum range lo,hi")->required();
    hyper->add_option("--n", hyper_opt.n, "momentum samples per mass (>= 2)");

    for (auto* sub : {transform, little, stokes, bridge, hyper}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const OutputMode mode =
        json ? OutputMode::JsonLine : (csv ? OutputMode::Csv : OutputMode::Text);

    try {
        OutputRecord rec;
        if (app.got_subcommand(transform)) {
            transform_opt.degrees = degrees;
            transform_opt.tolerance = tolerance;
            rec = cmd_transform(transform_opt);
        } else if (app.got_subcommand(little)) {
            if (probe_opt->count() > 0) little_opt.probe = little_probe;
            little_opt.degrees = degrees;
            little_opt.tolerance = tolerance;
            rec = cmd_little_group(little_opt);
        } else if (app.got_subcommand(stokes)) {
            if (amp_opt->count() > 0) stokes_opt.amplitude = stokes_amplitude;
            if (sigma_opt->count() > 0) stokes_opt.sigma = stokes_sigma;
            if (samples_opt->count() > 0) stokes_opt.samples_path = stokes_samples;
            stokes_opt.degrees = degrees;
            stokes_opt.tolerance = tolerance;
            rec = cmd_stokes(stokes_opt);
        } else if (app.got_subcommand(bridge)) {
            bridge_opt.sweep =
                bridge_sweep == "sigma" ? SweepVariable::Sigma : SweepVariable::Chi;
            if (bridge_min_opt->count() > 0) bridge_opt.min = bridge_min;
            if (bridge_max_opt->count() > 0) bridge_opt.max = bridge_max;
            bridge_opt.degrees = degrees;
            bridge_opt.tolerance = tolerance;
            rec = cmd_bridge(bridge_opt);
        } else {
            hyper_opt.tolerance = tolerance;
            rec = cmd_hyperbola(hyper_opt);
        }
        emit(rec, mode);
        return rec.residuals_ok ? 0 : 2;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const poincare::FileFormatError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const poincare::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
