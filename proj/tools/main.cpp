// coherence-kit: polynomial coherence measures on pure and mixed states.
//
// Subcommands: measure, symmetric, roof, witness, twirl, check.
// Exit codes: 0 success/pass, 1 check-suite violation, 2 usage or input
// error, 3 internal audit failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohkit/io.hpp"
#include "cohkit/majorization.hpp"
#include "cohkit/poly.hpp"
#include "cohkit/qstate.hpp"
#include "cohkit/random.hpp"
#include "cohkit/roof.hpp"
#include "cohkit/symmetry.hpp"

namespace {

using namespace cohkit;

unsigned env_threads() {
    const char* v = std::getenv("COHERENCE_KIT_THREADS");
    if (v == nullptr || *v == '\0') {
        return 0;  // machine parallelism
    }
    long n = std::strtol(v, nullptr, 10);
    return n >= 1 ? static_cast<unsigned>(n) : 0;
}

std::string fmt_sig12(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%#.12g", v);
    return buf;
}

std::string fmt_fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string fmt_complex6(cplx v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", v.real(), v.imag());
    return buf;
}

std::string fmt_state(const PureState& psi) {
    std::string s = "[";
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        if (i > 0) {
            s += ", ";
        }
        s += fmt_complex6(psi.amp(i));
    }
    s += "]";
    return s;
}

PureState require_pure(const StateVariant& v, const std::string& what) {
    if (!std::holds_alternative<PureState>(v)) {
        fail(ErrorCode::InvalidInput, what + " expects a pure-state (amplitudes) file");
    }
    return std::get<PureState>(v);
}

DensityMatrix as_density(const StateVariant& v) {
    if (std::holds_alternative<DensityMatrix>(v)) {
        return std::get<DensityMatrix>(v);
    }
    return std::get<PureState>(v).projector();
}

struct MeasureArgs {
    std::string state_path;
    std::string poly_path;
    bool use_g = false;
    bool use_l1 = false;
    double scale = 0.0;  // 0 -> default (d for --g, 1 for --poly)
};

int run_measure(const MeasureArgs& args) {
    int selectors = (args.poly_path.empty() ? 0 : 1) + (args.use_g ? 1 : 0) +
                    (args.use_l1 ? 1 : 0);
    if (selectors != 1) {
        std::cerr << "measure: pick exactly one of --poly, --g, --l1\n";
        return 2;
    }
    PureState psi = require_pure(read_state_file(args.state_path), "measure");
    const std::size_t d = psi.dim();
    std::size_t rank = dephased_rank(psi);

    std::string label;
    double value = 0.0;
    if (args.use_l1) {
        label = "C_l1";
        value = c_l1_pure(psi);
    } else if (args.use_g) {
        label = "C_G";
        HomogeneousPolynomial p = g_polynomial(d);
        double scale = args.scale > 0.0 ? args.scale : static_cast<double>(d);
        value = evaluate(p, psi, scale);
    } else {
        label = "C_p";
        HomogeneousPolynomial p = read_polynomial_file(args.poly_path);
        double scale = args.scale > 0.0 ? args.scale : 1.0;
        value = evaluate(p, psi, scale);
    }

    std::cout << label << " = " << fmt_sig12(value) << "\n";
    std::cout << "dephased rank = " << rank << " / " << d << "\n";
    if (args.use_g && rank < d) {
        std::cout << "note: dephased rank " << rank << " < dimension " << d
                  << "; value is necessarily 0\n";
    }
    return 0;
}

struct SymmetricArgs {
    std::size_t dim = 0;
    std::size_t points = 101;
    std::string out_path;
};

int run_symmetric(const SymmetricArgs& args) {
    std::vector<SweepRow> rows = sweep_symmetric_curve(
            args.dim, 1.0 / static_cast<double>(args.dim), 1.0, args.points);
    write_sweep_csv(args.out_path, rows);
    std::cout << "wrote " << rows.size() << " rows (d=" << args.dim << ") to " << args.out_path
              << "\n";
    return 0;
}

struct RoofArgs {
    std::string state_path;
    bool use_g = false;
    std::size_t restarts = 32;
    std::size_t size = 0;
    std::uint64_t seed = 0;
    std::string witness_path;
};

int run_roof(const RoofArgs& args) {
    if (!args.use_g) {
        std::cerr << "roof: --g is the only supported measure selector\n";
        return 2;
    }
    DensityMatrix rho = as_density(read_state_file(args.state_path));
    const std::size_t d = rho.dim();
    HomogeneousPolynomial p = g_polynomial(d);
    SolverConfig cfg;
    cfg.restarts = args.restarts;
    cfg.decomposition_size = args.size;
    cfg.seed = args.seed;
    cfg.threads = env_threads();
    RoofResult result = minimize_convex_roof(rho, p, static_cast<double>(d), cfg);

    // internal bug guard: the reported value must be reproducible from the
    // witness and the witness must rebuild the input state
    double recon = result.decomposition.reconstruction_error(rho);
    double revalue = average_measure(result.decomposition, p, static_cast<double>(d));
    if (recon > 1e-8 || std::abs(revalue - result.value) > 1e-12) {
        std::cerr << "internal audit failed: reconstruction error " << recon
                  << ", value mismatch " << std::abs(revalue - result.value) << "\n";
        return 3;
    }

    double lb = cg_lower_bound(rho);
    double gap = result.value - lb;
    if (gap < 0.0 && gap > -1e-9) {
        gap = 0.0;
    }
    std::cout << "roof value  = " << fmt_fixed6(result.value) << "\n";
    std::cout << "lower bound = " << fmt_fixed6(lb) << "\n";
    std::cout << "gap         = " << fmt_fixed6(gap) << "\n";
    std::cout << "witness size = " << result.decomposition.size() << "\n";
    if (!args.witness_path.empty()) {
        write_json_file(args.witness_path, decomposition_to_json(result.decomposition));
        std::cout << "wrote witness to " << args.witness_path << "\n";
    }
    return 0;
}

struct WitnessArgs {
    std::string poly_path;
    bool use_g = false;
    std::size_t dim = 0;
    std::string state1_path;
    std::string state2_path;
};

int run_witness(const WitnessArgs& args) {
    if (args.poly_path.empty() == !args.use_g) {
        std::cerr << "witness: pick exactly one of --poly or --g\n";
        return 2;
    }
    PureState psi1 = require_pure(read_state_file(args.state1_path), "witness");
    PureState psi2 = require_pure(read_state_file(args.state2_path), "witness");
    const std::size_t d = psi1.dim();
    if (args.use_g && args.dim != 0 && args.dim != d) {
        std::cerr << "witness: --dim " << args.dim << " does not match the state files (d=" << d
                  << ")\n";
        return 2;
    }
    HomogeneousPolynomial p = args.use_g ? g_polynomial(d) : read_polynomial_file(args.poly_path);
    double scale = args.use_g ? static_cast<double>(d) : 1.0;

    std::cout << "overlap |<psi1|psi2>| = " << fmt_fixed6(std::abs(psi1.overlap(psi2))) << "\n";
    std::vector<WitnessCandidate> candidates = witness_candidates(p, psi1, psi2, scale);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const WitnessCandidate& c = candidates[i];
        if (c.omega.has_value()) {
            std::cout << "root[" << i << "] omega = " << fmt_complex6(*c.omega) << "\n";
        } else {
            std::cout << "root[" << i << "] psi2 itself has zero measure\n";
        }
        std::cout << "  witness = " << fmt_state(c.state) << "\n";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3e", c.value);
        std::cout << "  measure = " << buf << "\n";
    }
    return 0;
}

struct TwirlArgs {
    std::string state_path;
    std::size_t sample = 0;
    std::uint64_t seed = 0;
    std::string out_path;
};

int run_twirl(const TwirlArgs& args) {
    DensityMatrix rho = as_density(read_state_file(args.state_path));
    TwirlMode mode = args.sample > 0 ? TwirlMode::sampled(args.sample, args.seed)
                                     : TwirlMode::exact_mode();
    double k_before = overlap_K(rho);
    DensityMatrix out = twirl(rho, mode);
    double k_after = overlap_K(out);
    if (mode.exact && std::abs(k_before - k_after) > 1e-10) {
        std::cerr << "internal audit failed: exact twirl changed the overlap by "
                  << std::abs(k_before - k_after) << "\n";
        return 3;
    }
    std::cout << "K before = " << fmt_fixed6(k_before) << "\n";
    std::cout << "K after  = " << fmt_fixed6(k_after) << "\n";
    if (!args.out_path.empty()) {
        write_json_file(args.out_path, density_to_json(out));
        std::cout << "wrote twirled state to " << args.out_path << "\n";
    }
    return 0;
}

struct CheckArgs {
    std::string suite;
    std::size_t dim = 3;
    int trials = 0;  // 0 -> suite default
    std::uint64_t seed = 7;
    std::size_t restarts = 32;
};

int run_check_nogo(const CheckArgs& args) {
    int trials = args.trials > 0 ? args.trials : 100;
    const std::size_t d = args.dim;
    HomogeneousPolynomial p = g_polynomial(d);
    const double scale = static_cast<double>(d);

    RandomStream master(args.seed);
    int pairs_ok = 0;
    double max_witness_value = 0.0;
    for (int t = 0; t < trials; ++t) {
        RandomStream rs = master.derive(static_cast<std::uint64_t>(t));
        PureState psi1 = PureState::validated(rs.haar_state(d));
        std::vector<cplx> raw = rs.haar_state(d);
        cplx ov = inner(psi1.amplitudes(), raw);
        for (std::size_t i = 0; i < d; ++i) {
            raw[i] -= ov * psi1.amp(i);
        }
        PureState psi2 = PureState::normalized(std::move(raw));
        std::vector<PureState> ws = zero_coherence_witness(p, psi1, psi2, scale);
        bool ok = !ws.empty();
        for (const PureState& w : ws) {
            double v = evaluate(p, w, scale);
            max_witness_value = std::max(max_witness_value, v);
            ok = ok && v < 1e-8;
        }
        pairs_ok += ok ? 1 : 0;
    }
    Theorem2Report t2 = check_theorem2_vanishing(p, scale, trials, args.seed + 1);

    std::printf("nogo suite (d=%zu, trials=%d, seed=%llu)\n", d, trials,
                static_cast<unsigned long long>(args.seed));
    std::printf("  superposition witnesses: %d/%d pairs (max witness value %.3e)\n", pairs_ok,
                trials, max_witness_value);
    std::printf("  non-full-support max measure = %.3e\n", t2.max_value);
    bool pass = pairs_ok == trials && !t2.violation;
    std::printf("%s\n", pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}

int run_check_monotone(const CheckArgs& args) {
    int trials = args.trials > 0 ? args.trials : 1000;
    const std::size_t d = args.dim;
    HomogeneousPolynomial p = g_polynomial(d);
    const double scale = static_cast<double>(d);

    RandomStream rng(args.seed);
    int violations = 0;
    double min_slack = 1.0;
    for (int t = 0; t < trials; ++t) {
        auto [psi, phi] = sample_transformable_pair(d, rng);
        MonotonicityReport report = monotonicity_witness(p, scale, psi, phi);
        violations += report.violation ? 1 : 0;
        min_slack = std::min(min_slack, report.value_initial - report.value_final);
    }
    std::printf("monotone suite (d=%zu, trials=%d, seed=%llu)\n", d, trials,
                static_cast<unsigned long long>(args.seed));
    std::printf("  violations = %d / %d (min slack = %.3e)\n", violations, trials, min_slack);
    bool pass = violations == 0;
    std::printf("%s\n", pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}

int run_check_theorem3(const CheckArgs& args) {
    const std::size_t d = args.dim;
    HomogeneousPolynomial p = g_polynomial(d);
    const double scale = static_cast<double>(d);
    SolverConfig cfg;
    cfg.restarts = args.restarts;
    cfg.seed = args.seed;
    cfg.threads = env_threads();

    std::printf("theorem3 suite (d=%zu, restarts=%zu, seed=%llu)\n", d, args.restarts,
                static_cast<unsigned long long>(args.seed));
    const int points = 11;
    double max_gap = -1.0;
    bool pass = true;
    for (int i = 0; i < points; ++i) {
        double k = 1.0 / static_cast<double>(d) +
                   (1.0 - 1.0 / static_cast<double>(d)) * i / (points - 1);
        DensityMatrix rho = SymmetricState::from_overlap(d, k).materialize();
        RoofResult result = minimize_convex_roof(rho, p, scale, cfg);
        double exact = cg_symmetric(d, k);
        double gap = result.value - exact;
        double lb = cg_lower_bound(rho);
        bool ok = gap >= -1e-9 && gap <= 1e-3 && lb <= result.value + 1e-9;
        pass = pass && ok;
        max_gap = std::max(max_gap, gap);
        std::printf("  K=%.6f roof=%.6f exact=%.6f gap=%+.3e %s\n", k, result.value, exact, gap,
                    ok ? "ok" : "VIOLATION");
    }
    std::printf("  max gap = %.3e\n", max_gap);
    std::printf("%s\n", pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}

int run_check(const CheckArgs& args) {
    if (args.suite == "nogo") {
        return run_check_nogo(args);
    }
    if (args.suite == "monotone") {
        return run_check_monotone(args);
    }
    if (args.suite == "theorem3") {
        return run_check_theorem3(args);
    }
    std::cerr << "unknown suite \"" << args.suite << "\" (expected nogo|monotone|theorem3)\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial coherence measures: evaluation, convex roofs, symmetric-state "
                 "curves, zero-coherence witnesses, majorization checks"};
    app.require_subcommand(1);

    MeasureArgs measure_args;
    CLI::App* measure = app.add_subcommand("measure", "evaluate a pure-state measure");
    measure->add_option("--state", measure_args.state_path, "state JSON file")->required();
    measure->add_option("--poly", measure_args.poly_path, "polynomial JSON file");
    measure->add_flag("--g", measure_args.use_g, "geometric-mean measure");
    measure->add_flag("--l1", measure_args.use_l1, "qubit l1 measure");
    measure->add_option("--scale", measure_args.scale, "overall scale factor");

    SymmetricArgs symmetric_args;
    CLI::App* symmetric = app.add_subcommand("symmetric", "sweep the symmetric-state curves");
    symmetric->add_option("--dim", symmetric_args.dim, "dimension")->required();
    symmetric->add_option("--points", symmetric_args.points, "grid points (default 101)");
    symmetric->add_option("--out", symmetric_args.out_path, "output CSV path")->required();

    RoofArgs roof_args;
    CLI::App* roof = app.add_subcommand("roof", "numerical convex roof of the G measure");
    roof->add_option("--state", roof_args.state_path, "state JSON file")->required();
    roof->add_flag("--g", roof_args.use_g, "geometric-mean measure");
    roof->add_option("--restarts", roof_args.restarts, "solver restarts (default 32)");
    roof->add_option("--size", roof_args.size, "decomposition size (default rank+2)");
    roof->add_option("--seed", roof_args.seed, "master seed");
    roof->add_option("--witness", roof_args.witness_path, "write witness decomposition JSON");

    WitnessArgs witness_args;
    CLI::App* witness = app.add_subcommand("witness", "zero-coherence superposition witnesses");
    witness->add_option("--poly", witness_args.poly_path, "polynomial JSON file");
    witness->add_flag("--g", witness_args.use_g, "geometric-mean measure");
    witness->add_option("--dim", witness_args.dim, "dimension (checked against the states)");
    witness->add_option("--state1", witness_args.state1_path, "first state")->required();
    witness->add_option("--state2", witness_args.state2_path, "second state")->required();

    TwirlArgs twirl_args;
    CLI::App* twirl_cmd = app.add_subcommand("twirl", "permutation twirl of a density matrix");
    twirl_cmd->add_option("--state", twirl_args.state_path, "state JSON file")->required();
    twirl_cmd->add_option("--sample", twirl_args.sample, "sampled mode with n permutations");
    twirl_cmd->add_option("--seed", twirl_args.seed, "seed for sampled mode");
    twirl_cmd->add_option("--out", twirl_args.out_path, "write twirled matrix JSON");

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "empirical verification suites");
    check->add_option("--suite", check_args.suite, "nogo|monotone|theorem3")->required();
    check->add_option("--dim", check_args.dim, "dimension (default 3)");
    check->add_option("--trials", check_args.trials, "trial count (suite default)");
    check->add_option("--seed", check_args.seed, "master seed (default 7)");
    check->add_option("--restarts", check_args.restarts, "solver restarts for theorem3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (measure->parsed()) {
            return run_measure(measure_args);
        }
        if (symmetric->parsed()) {
            return run_symmetric(symmetric_args);
        }
        if (roof->parsed()) {
            return run_roof(roof_args);
        }
        if (witness->parsed()) {
            return run_witness(witness_args);
        }
        if (twirl_cmd->parsed()) {
            return run_twirl(twirl_args);
        }
        if (check->parsed()) {
            return run_check(check_args);
        }
    } catch (const cohkit::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
