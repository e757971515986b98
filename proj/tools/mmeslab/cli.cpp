#include "mmeslab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "mmeslab/channels.hpp"
#include "mmeslab/locc.hpp"
#include "mmeslab/measures.hpp"
#include "mmeslab/mmes.hpp"
#include "mmeslab/qmat.hpp"
#include "mmeslab/report.hpp"
#include "mmeslab/statefile.hpp"
#include "mmeslab/teleport.hpp"
#include "mmeslab/verify_suite.hpp"
#include "mmeslab/weyl.hpp"

namespace mmeslab::cli {

namespace {

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("MMES_LAB_SEED")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw std::invalid_argument("MMES_LAB_SEED must be an unsigned integer");
        return value;
    }
    return 0;
}

std::vector<WeylIndex> parse_subset(const std::string& text, int d) {
    std::vector<WeylIndex> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t next = text.find(';', pos);
        const std::string pair = text.substr(pos, next == std::string::npos ? next : next - pos);
        const std::size_t comma = pair.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("subset entries must look like \"s,t\": " + pair);
        try {
            const int s = std::stoi(pair.substr(0, comma));
            const int t = std::stoi(pair.substr(comma + 1));
            out.push_back({s, t, d});
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse subset entry: " + pair);
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (out.empty()) throw std::invalid_argument("subset must name at least one (s,t) pair");
    return out;
}

int run_verify(const std::vector<int>& dims, double tol, std::uint64_t seed, bool json,
               std::ostream& out) {
    RunReport report{"verify", {{"d", dims}, {"tol", tol}}, verification_suite(dims, tol, seed),
                     seed};
    print_report(report, out, json);
    return report.all_pass() ? 0 : 1;
}

int run_mmes_check(const std::string& input, const std::string& side, double tol,
                   std::uint64_t seed, bool json, std::ostream& out) {
    const DensityMatrix rho = as_density(load_state_file(input));
    const Subsystem small = side == "a" ? Subsystem::A : Subsystem::B;
    const MmesCertificate cert = is_mmes(rho, small, tol);

    RunReport report;
    report.command = "mmes-check";
    report.parameters = {{"input", input}, {"small-side", side}, {"tol", tol}};
    report.seed = seed;
    report.verdicts.push_back({"schmidt-uniform", cert.worst_schmidt_deviation <= tol,
                               cert.worst_schmidt_deviation, "worst |lambda - 1/sqrt d|"});
    report.verdicts.push_back({"cross-trace-vanishes", cert.worst_cross_trace_norm <= tol,
                               cert.worst_cross_trace_norm,
                               "worst Hilbert-Schmidt norm over eigenvector pairs"});
    report.verdicts.push_back({"reduced-maximally-mixed",
                               cert.reduced_small_side_deviation <= tol,
                               cert.reduced_small_side_deviation, "worst |rho_small - I/d| entry"});
    const int small_dim = rho.shape.dim(small);
    const int large_dim = rho.shape.dim(small == Subsystem::A ? Subsystem::B : Subsystem::A);
    report.verdicts.push_back({"rank-bound", !cert.verdict || large_dim >= cert.rank * small_dim,
                               static_cast<double>(cert.rank), "rank k needs d' >= k d"});
    report.verdicts.push_back({"mmes", cert.verdict,
                               std::max({cert.worst_schmidt_deviation, cert.worst_cross_trace_norm,
                                         cert.reduced_small_side_deviation}),
                               cert.verdict ? "certified" : "not a mixed maximally entangled state"});
    print_report(report, out, json);
    return cert.verdict ? 0 : 1;
}

int run_teleport(int d, const std::string& state_path, bool random_input, std::uint64_t seed,
                 bool json, std::ostream& out) {
    Vector psi;
    if (random_input) {
        Rng rng(seed);
        psi = haar_random_ket(d, rng);
    } else {
        const LoadedState loaded = load_state_file(state_path);
        if (!std::holds_alternative<PureState>(loaded))
            throw std::invalid_argument("teleport: --state must hold a pure state");
        psi = std::get<PureState>(loaded).amplitudes;
        if (psi.size() != d)
            throw std::invalid_argument("teleport: state dimension does not match --d");
    }

    const auto outcomes = simulate_mmes_teleport(psi);
    RunReport report;
    report.command = "teleport";
    report.parameters = {{"d", d},
                         {"input", random_input ? std::string("random") : state_path}};
    report.seed = seed;

    double min_fidelity = 1.0, uniformity = 0.0;
    for (const TeleportOutcome& o : outcomes) {
        min_fidelity = std::min(min_fidelity, o.fidelity_after_correction);
        uniformity = std::max(uniformity, std::abs(o.probability - 1.0 / (2.0 * d * d)));
        report.verdicts.push_back(
            {"outcome-s" + std::to_string(o.s) + "-t" + std::to_string(o.t) + "-f" +
                 std::to_string(o.family),
             o.fidelity_after_correction >= 1.0 - 1e-9, o.fidelity_after_correction,
             "corrected fidelity, probability " + std::to_string(o.probability)});
    }
    report.verdicts.push_back({"corrected-fidelity-min", min_fidelity >= 1.0 - 1e-9, min_fidelity,
                               ""});
    report.verdicts.push_back({"probabilities-uniform", uniformity <= 1e-10, uniformity,
                               "max deviation from 1/(2 d^2)"});
    print_report(report, out, json);
    return report.all_pass() ? 0 : 1;
}

int run_channel_demo(double p, std::uint64_t seed, bool json, std::ostream& out) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("channel-demo: p must lie in [0, 1]");

    RunReport report;
    report.command = "channel-demo";
    report.parameters = {{"p", p}};
    report.seed = seed;

    const KrausChannel channel = swap_noise_channel();
    for (Verdict v : channel_checks(channel)) report.verdicts.push_back(std::move(v));

    // Evolution of the requested rho_p mixture, reported with witnesses.
    const BipartiteShape shape{2, 4};
    Vector psi1 = Vector::Zero(8), psi2 = Vector::Zero(8);
    psi1(shape.flat(0, 0)) = psi1(shape.flat(1, 1)) = 1.0 / std::sqrt(2.0);
    psi2(shape.flat(0, 2)) = psi2(shape.flat(1, 3)) = 1.0 / std::sqrt(2.0);
    const DensityMatrix rho = make_density_matrix(
        shape, (1.0 - p) * (psi1 * psi1.adjoint()).eval() + p * (psi2 * psi2.adjoint()).eval());
    const EvolutionReport evolution = evolution_report(channel, rho, Subsystem::B);
    report.verdicts.push_back({"rho-p-mmes-before", evolution.mmes_before.verdict,
                               evolution.mmes_before.worst_cross_trace_norm, ""});
    report.verdicts.push_back({"rho-p-mmes-after", evolution.mmes_after.verdict,
                               evolution.mmes_after.worst_cross_trace_norm, ""});
    report.verdicts.push_back({"rho-p-negativity-before",
                               std::abs(evolution.negativity_before - 0.5) <= 1e-8,
                               evolution.negativity_before, ""});
    report.verdicts.push_back({"rho-p-negativity-after",
                               std::abs(evolution.negativity_after - 0.5) <= 1e-8,
                               evolution.negativity_after, ""});
    print_report(report, out, json);
    return report.all_pass() ? 0 : 1;
}

int run_locc(int d, const std::string& subset, int trials, std::uint64_t seed, bool json,
             std::ostream& out) {
    const std::vector<WeylIndex> candidates = parse_subset(subset, d);

    RunReport report;
    report.command = "locc";
    report.parameters = {{"d", d}, {"subset", subset}, {"trials", trials}};
    report.seed = seed;

    try {
        const DiscriminationProtocol protocol = discriminate(candidates, d);
        const std::string setting =
            protocol.setting.hadamard ? "hadamard(" + std::to_string(protocol.setting.alpha) + ")"
                                      : "computational";
        report.verdicts.push_back({"perfect-protocol", true, protocol.success_probability,
                                   "setting: " + setting});
        Rng rng(seed);
        for (const WeylIndex& secret : candidates) {
            const double rate = sample_run(protocol, secret, trials, rng);
            report.verdicts.push_back(
                {"sample-rate-s" + std::to_string(secret.s) + "-t" + std::to_string(secret.t),
                 rate == 1.0, rate, ""});
        }
    } catch (const NoPerfectSetting& e) {
        report.verdicts.push_back({"perfect-protocol", false, e.best_overlap, e.what()});
        print_report(report, out, json);
        return 1;
    }
    print_report(report, out, json);
    return report.all_pass() ? 0 : 1;
}

int run_fef(const std::string& input, int restarts, int max_iter, double tol, std::uint64_t seed,
            bool json, std::ostream& out) {
    const DensityMatrix rho = as_density(load_state_file(input));
    if (rho.shape.dim_a != rho.shape.dim_b)
        throw std::invalid_argument("fef: input must have a square d x d shape");

    Rng rng(seed);
    const FefResult fef = fully_entangled_fraction(
        rho, {.restarts = restarts, .max_iter = max_iter, .tol = tol}, rng);

    RunReport report;
    report.command = "fef";
    report.parameters = {{"input", input},
                         {"restarts", restarts},
                         {"max-iter", max_iter},
                         {"tol", tol}};
    report.seed = seed;
    report.verdicts.push_back({"value", true, fef.value, "fully entangled fraction"});
    report.verdicts.push_back(
        {"optimal-teleport-fidelity", true,
         optimal_teleport_fidelity(std::clamp(fef.value, 0.0, 1.0), rho.shape.dim_a), ""});
    report.verdicts.push_back({"converged", fef.converged,
                               static_cast<double>(fef.restarts_used), "ascent runs"});
    const double unitary_dev =
        (fef.optimizer.adjoint() * fef.optimizer -
         Matrix::Identity(rho.shape.dim_a, rho.shape.dim_a))
            .cwiseAbs()
            .maxCoeff();
    report.verdicts.push_back({"optimizer-unitary", unitary_dev <= 1e-8, unitary_dev, ""});
    print_report(report, out, json);
    return report.all_pass() ? 0 : 1;
}

int run_xxz(double j, double delta, std::uint64_t seed, bool json, std::ostream& out) {
    const XxzGroundState ground = xxz_ground_state({.j = j, .delta = delta});

    RunReport report;
    report.command = "xxz";
    report.parameters = {{"j", j}, {"delta", delta}};
    report.seed = seed;
    report.verdicts.push_back({"ground-energy", true, ground.energy, ""});
    report.verdicts.push_back({"ground-degeneracy", true,
                               static_cast<double>(ground.degeneracy),
                               "eigenvalues within 1e-9 of the minimum"});
    report.verdicts.push_back({"eof-of-first", true, ground.eof_of_first,
                               "basis-dependent when the ground manifold is degenerate"});
    report.verdicts.push_back({"regime", !ground.regime_flagged, j,
                               ground.regime_flagged ? "outside Delta >= J > 0" : ""});
    print_report(report, out, json);
    return 0;
}

}  // namespace

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mmeslab: mixed maximally entangled states toolkit"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed_flag;
    bool json = false;

    auto* verify = app.add_subcommand("verify", "run the full invariant suite");
    std::vector<int> dims{2, 3, 5};
    double verify_tol = 1e-8;
    verify->add_option("--d", dims, "dimensions to check")->delimiter(',');
    verify->add_option("--tol", verify_tol, "certificate tolerance");
    verify->add_option("--seed", seed_flag, "rng seed");
    verify->add_flag("--json", json, "machine-readable report");

    auto* mmes_check = app.add_subcommand("mmes-check", "certify a state file");
    std::string input_path, small_side = "a";
    double check_tol = 1e-8;
    mmes_check->add_option("--input", input_path, "state file")->required();
    mmes_check->add_option("--small-side", small_side, "which side is d-dimensional")
        ->check(CLI::IsMember({"a", "b"}))
        ->required();
    mmes_check->add_option("--tol", check_tol, "certificate tolerance");
    mmes_check->add_option("--seed", seed_flag, "rng seed (reported only)");
    mmes_check->add_flag("--json", json, "machine-readable report");

    auto* teleport = app.add_subcommand("teleport", "teleport through the canonical resource");
    int teleport_d = 2;
    std::string teleport_state;
    bool teleport_random = false;
    teleport->add_option("--d", teleport_d, "input dimension")->required();
    auto* state_opt = teleport->add_option("--state", teleport_state, "pure state file");
    teleport->add_flag("--random", teleport_random, "draw the input from the seeded stream")
        ->excludes(state_opt);
    teleport->add_option("--seed", seed_flag, "rng seed");
    teleport->add_flag("--json", json, "machine-readable report");

    auto* channel_demo = app.add_subcommand("channel-demo", "noise-channel evolution reports");
    double channel_p = 0.3;
    channel_demo->add_option("--p", channel_p, "mixture weight of the second branch");
    channel_demo->add_option("--seed", seed_flag, "rng seed (reported only)");
    channel_demo->add_flag("--json", json, "machine-readable report");

    auto* locc = app.add_subcommand("locc", "local discrimination of chi states");
    int locc_d = 2;
    std::string subset;
    int locc_trials = 1000;
    locc->add_option("--d", locc_d, "dimension (prime)")->required();
    locc->add_option("--subset", subset, "candidate labels \"s,t;s,t;...\"")->required();
    locc->add_option("--trials", locc_trials, "samples per secret");
    locc->add_option("--seed", seed_flag, "rng seed");
    locc->add_flag("--json", json, "machine-readable report");

    auto* fef = app.add_subcommand("fef", "fully entangled fraction of a state file");
    std::string fef_input;
    int fef_restarts = 32, fef_max_iter = 1000;
    double fef_tol = 1e-12;
    fef->add_option("--input", fef_input, "state file")->required();
    fef->add_option("--restarts", fef_restarts, "Haar restarts");
    fef->add_option("--max-iter", fef_max_iter, "ascent iteration cap");
    fef->add_option("--tol", fef_tol, "stagnation threshold");
    fef->add_option("--seed", seed_flag, "rng seed");
    fef->add_flag("--json", json, "machine-readable report");

    auto* xxz = app.add_subcommand("xxz", "ground sector of the exchange chain");
    double xxz_j = 1.0, xxz_delta = 1.0;
    xxz->add_option("--j", xxz_j, "transverse coupling")->required();
    xxz->add_option("--delta", xxz_delta, "longitudinal coupling")->required();
    xxz->add_flag("--json", json, "machine-readable report");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const std::uint64_t seed = resolve_seed(seed_flag);
        if (verify->parsed()) return run_verify(dims, verify_tol, seed, json, out);
        if (mmes_check->parsed())
            return run_mmes_check(input_path, small_side, check_tol, seed, json, out);
        if (teleport->parsed()) {
            if (!teleport_random && teleport_state.empty())
                throw std::invalid_argument("teleport: need --state FILE or --random");
            return run_teleport(teleport_d, teleport_state, teleport_random, seed, json, out);
        }
        if (channel_demo->parsed()) return run_channel_demo(channel_p, seed, json, out);
        if (locc->parsed()) return run_locc(locc_d, subset, locc_trials, seed, json, out);
        if (fef->parsed())
            return run_fef(fef_input, fef_restarts, fef_max_iter, fef_tol, seed, json, out);
        if (xxz->parsed()) return run_xxz(xxz_j, xxz_delta, seed, json, out);
    } catch (const StateFileError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace mmeslab::cli
