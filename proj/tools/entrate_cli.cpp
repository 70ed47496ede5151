// Command-line front end: model loading, experiment orchestration, CSV
// emission. Subcommands: entropy, contraction, forgetting, conditions,
// scan, winding. Exit codes: 0 success, 2 config error, 3 numerical failure.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entrate/conditions.hpp"
#include "entrate/csv.hpp"
#include "entrate/derivatives.hpp"
#include "entrate/entropy.hpp"
#include "entrate/errors.hpp"
#include "entrate/filter.hpp"
#include "entrate/hilbert.hpp"
#include "entrate/model_io.hpp"
#include "entrate/sampling.hpp"
#include "entrate/version.hpp"
#include "entrate/winding.hpp"

namespace {

using namespace entrate;

struct CommonOpts {
    std::string model_path;
    std::string out_path;
    std::uint64_t seed = 1;
};

// Canonical flag serialization feeding the reproducibility hash in the CSV
// header; identical configs must yield identical files.
class ConfigString {
public:
    explicit ConfigString(std::string command) : text_(std::move(command)) {}
    template <class T>
    ConfigString& add(const std::string& key, const T& value) {
        std::ostringstream os;
        os << ' ' << key << '=' << value;
        text_ += os.str();
        return *this;
    }
    const std::string& str() const { return text_; }

private:
    std::string text_;
};

std::string headline_margin(const ConditionReport& rep) {
    static const char* keys[] = {"C_double_prime", "Z_star",   "max_im_over_re",
                                 "integral",       "modulus",  "min_entry",
                                 "min_scale",      "max_log_gap"};
    for (const char* key : keys) {
        const auto it = rep.margins.find(key);
        if (it != rep.margins.end()) return format_g17(it->second);
    }
    return "";
}

std::string csv_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

int run_entropy(const CommonOpts& common, int n_max, long samples) {
    const ModelConfig cfg = load_model_config(common.model_path);
    ConfigString canon("entropy");
    canon.add("model", common.model_path)
        .add("n_max", n_max)
        .add("samples", samples)
        .add("seed", common.seed);
    const ConvergenceRecord rec =
        convergence_scan(cfg.model, cfg.channel, n_max, samples, common.seed);
    CsvWriter csv(common.out_path, "entropy", canon.str(), common.seed);
    csv.columns({"n", "H_n", "std_error", "delta", "rho_hat"});
    for (size_t k = 0; k < rec.entries.size(); ++k) {
        const auto& e = rec.entries[k];
        csv.row({std::to_string(e.n), format_g17(e.h), format_g17(e.se),
                 k == 0 ? "nan" : format_g17(rec.deltas[k - 1]), format_g17(rec.rho_hat)});
    }
    std::cout << "H_" << n_max << " = " << format_g17(rec.entries.back().h) << " nats (se "
              << format_g17(rec.entries.back().se) << ")\n"
              << "fitted L_hat = " << format_g17(rec.l_hat)
              << ", rho_hat = " << format_g17(rec.rho_hat) << ", R^2 = "
              << format_g17(rec.r_squared) << "\nverdict: " << rec.verdict << "\n";
    return 0;
}

int run_contraction(const CommonOpts& common, int pairs) {
    const ModelConfig cfg = load_model_config(common.model_path);
    ConfigString canon("contraction");
    canon.add("model", common.model_path).add("pairs", pairs).add("seed", common.seed);
    const double tau = birkhoff_coefficient(cfg.model.transition());
    const ContractionSample random_sample = contraction_ratio_sample(
        cfg.model.transition(), random_interior_pairs(cfg.model.size(), pairs, common.seed));
    std::optional<ContractionSample> adversarial;
    if (cfg.model.size() == 2)
        adversarial =
            contraction_ratio_sample(cfg.model.transition(), adversarial_pairs_2state(4001));
    CsvWriter csv(common.out_path, "contraction", canon.str(), common.seed);
    csv.columns({"quantity", "value"});
    csv.row({"tau", format_g17(tau)});
    csv.row({"max_ratio_random", format_g17(random_sample.max_ratio)});
    csv.row({"pairs_used", std::to_string(random_sample.pairs_used)});
    csv.row({"pairs_skipped", std::to_string(random_sample.skipped)});
    if (adversarial) csv.row({"max_ratio_adversarial", format_g17(adversarial->max_ratio)});
    std::cout << "tau(Pi) = " << format_g17(tau)
              << ", max observed ratio = " << format_g17(random_sample.max_ratio);
    if (adversarial) std::cout << ", adversarial = " << format_g17(adversarial->max_ratio);
    std::cout << "\n";
    return 0;
}

int run_forgetting(const CommonOpts& common, int steps, int initial_a, int initial_b,
                   const std::string& states_out) {
    const ModelConfig cfg = load_model_config(common.model_path);
    const int l = cfg.model.size();
    if (initial_b == 0) initial_b = l;
    if (initial_a < 1 || initial_a > l || initial_b < 1 || initial_b > l)
        throw ConfigError("forgetting: initial vertex out of range");
    ConfigString canon("forgetting");
    canon.add("model", common.model_path)
        .add("steps", steps)
        .add("seed", common.seed)
        .add("initial_a", initial_a)
        .add("initial_b", initial_b);
    const Trajectory sample = sample_trajectory(cfg.model, cfg.channel, steps, common.seed);
    const auto curve =
        forgetting_curve(cfg.model, cfg.channel, sample.outputs,
                         SimplexVector::vertex(l, initial_a), SimplexVector::vertex(l, initial_b));
    CsvWriter csv(common.out_path, "forgetting", canon.str(), common.seed);
    csv.columns({"step", "gap"});
    for (const auto& [step, gap] : curve) csv.row({std::to_string(step), format_g17(gap)});
    const LogSlopeFit fit = fit_log_slope(curve);
    std::cout << "fitted log-gap slope = " << format_g17(fit.slope) << " over " << fit.points
              << " points (R^2 = " << format_g17(fit.r_squared) << ")\n"
              << "log tau(Pi) = " << format_g17(std::log(birkhoff_coefficient(cfg.model.transition())))
              << "\n";
    if (!states_out.empty()) {
        const FilterTrajectory traj = run_filter(cfg.model, cfg.channel, sample.outputs);
        CsvWriter scsv(states_out, "forgetting-states", canon.str(), common.seed);
        std::vector<std::string> cols{"step"};
        for (int i = 1; i <= l; ++i) cols.push_back("state_" + std::to_string(i));
        scsv.columns(cols);
        for (size_t k = 0; k < traj.states.size(); ++k) {
            std::vector<std::string> cells{std::to_string(static_cast<int>(k))};
            for (int i = 0; i < l; ++i) cells.push_back(format_g17(traj.states[k][i]));
            scsv.row(cells);
        }
    }
    return 0;
}

int run_conditions(const CommonOpts& common, int dominant, double epsilon, double r2, double delta,
                   double search_bound) {
    const ModelConfig cfg = load_model_config(common.model_path);
    if (dominant == 0) {
        // Default to the widest component.
        dominant = 1;
        for (int y = 2; y <= cfg.channel.symbols(); ++y)
            if (cfg.channel.param(y).scale > cfg.channel.param(dominant).scale) dominant = y;
    }
    ConfigString canon("conditions");
    canon.add("model", common.model_path)
        .add("dominant", dominant)
        .add("epsilon", epsilon)
        .add("r2", r2)
        .add("delta", delta)
        .add("search_bound", search_bound);
    std::vector<ConditionReport> reports;
    reports.push_back(check_positivity(cfg.model));
    reports.push_back(check_channel_positivity(cfg.channel));
    reports.push_back(check_comparability(cfg.channel));
    DominanceSettings ds;
    ds.search_bound = search_bound;
    reports.push_back(check_dominance(cfg.channel, dominant, epsilon, ds));
    reports.push_back(check_real_domination(cfg.channel, r2, delta));
    reports.push_back(check_equicontinuity_proxy(cfg.channel, dominant, r2));
    for (auto& rep : check_integrability(cfg.channel, r2, dominant)) reports.push_back(rep);
    CsvWriter csv(common.out_path, "conditions", canon.str(), common.seed);
    csv.columns({"condition", "verdict", "margin", "witness"});
    for (const auto& rep : reports) {
        csv.row({rep.condition, to_string(rep.verdict), headline_margin(rep),
                 csv_quote(rep.witness)});
        std::cout << rep.condition << ": " << to_string(rep.verdict) << "\n";
    }
    return 0;
}

int run_scan(const CommonOpts& common, int n, long samples, double h_cs, double h_fd) {
    const ModelConfig cfg = load_model_config(common.model_path);
    ConfigString canon("scan");
    canon.add("model", common.model_path)
        .add("n", n)
        .add("samples", samples)
        .add("h_cs", h_cs)
        .add("h_fd", h_fd)
        .add("seed", common.seed);
    const auto dirs = all_parameter_directions(cfg.model, cfg.channel);
    const auto estimates =
        derivative_scan(cfg.model, cfg.channel, dirs, n, samples, h_cs, h_fd, common.seed);
    CsvWriter csv(common.out_path, "scan", canon.str(), common.seed);
    csv.columns({"param", "cs_value", "fd_value", "gap"});
    for (const auto& est : estimates) {
        csv.row({est.direction.name(), format_g17(est.complex_step),
                 format_g17(est.central_difference), format_g17(est.gap)});
        std::cout << est.direction.name() << ": cs = " << format_g17(est.complex_step)
                  << ", fd = " << format_g17(est.central_difference) << "\n";
    }
    return 0;
}

int run_winding(const CommonOpts& common, double sigma, double r,
                const std::vector<double>& z_values, long alpha_samples,
                const std::string& na_out, double na_width, int na_grid, double na_center) {
    ConfigString canon("winding");
    std::ostringstream zs;
    for (double z : z_values) zs << z << ';';
    canon.add("sigma", sigma)
        .add("r", r)
        .add("z", zs.str())
        .add("alpha_samples", alpha_samples)
        .add("na_width", na_width)
        .add("na_grid", na_grid)
        .add("na_center", na_center);
    CsvWriter csv(common.out_path, "winding", canon.str(), common.seed);
    csv.columns({"z", "r", "k"});
    for (double z : z_values) {
        const WindingReport rep = winding_probe(sigma, r, z, alpha_samples);
        if (rep.singular) {
            csv.row({format_g17(z), format_g17(r), "singular"});
            std::cout << "z = " << z << ": path hit the singular margin\n";
        } else {
            csv.row({format_g17(z), format_g17(r), std::to_string(rep.winding)});
            std::cout << "z = " << z << ": k = " << rep.winding << "\n";
        }
    }
    if (!na_out.empty()) {
        const auto rows = nonanalyticity_scan(sigma, na_width, na_grid, {}, na_center);
        CsvWriter na(na_out, "winding-nonanalyticity", canon.str(), common.seed);
        na.columns({"sigma2", "H", "dd1", "dd2", "dd3", "dd4", "dd5", "dd6"});
        for (const auto& row : rows) {
            std::vector<std::string> cells{format_g17(row.sigma2), format_g17(row.entropy)};
            for (double dd : row.divided_differences) cells.push_back(format_g17(dd));
            na.row(cells);
        }
        std::cout << "non-analyticity table: " << rows.size() << " rows -> " << na_out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy-rate and filter-contraction toolkit for Markov chains observed "
                 "through continuous noisy channels"};
    app.set_version_flag("--version", entrate::kVersion);
    app.require_subcommand(1);

    CommonOpts common;
    int n_max = 8;
    long samples = 20000;
    int pairs = 10000;
    int steps = 200;
    int initial_a = 1, initial_b = 0;
    std::string states_out;
    int dominant = 0;
    double epsilon = 0.01, r2 = 0.01, delta = 0.05, search_bound = 20.0;
    int scan_n = 3;
    double h_cs = 1e-20, h_fd = 1e-5;
    double sigma = 1.0, radius = 0.05;
    std::vector<double> z_values{0.0, 0.5, 1.0, 50.0};
    long alpha_samples = 512;
    std::string na_out;
    double na_width = 0.12, na_center = 0.0;
    int na_grid = 13;

    auto add_model_out = [&common](CLI::App* cmd, bool with_seed = true) {
        cmd->add_option("--model", common.model_path, "model JSON file")->required();
        cmd->add_option("--out", common.out_path, "output CSV path")->required();
        if (with_seed) cmd->add_option("--seed", common.seed, "RNG seed");
    };

    CLI::App* entropy = app.add_subcommand("entropy", "H_n convergence scan");
    add_model_out(entropy);
    entropy->add_option("--n-max", n_max, "largest window length");
    entropy->add_option("--samples", samples, "Monte Carlo sample count");

    CLI::App* contraction = app.add_subcommand("contraction", "Birkhoff coefficient and ratios");
    add_model_out(contraction);
    contraction->add_option("--pairs", pairs, "random pair count");

    CLI::App* forgetting = app.add_subcommand("forgetting", "initial-condition forgetting curve");
    add_model_out(forgetting);
    forgetting->add_option("--steps", steps, "observation count");
    forgetting->add_option("--initial-a", initial_a, "first initial vertex (1-based)");
    forgetting->add_option("--initial-b", initial_b, "second initial vertex (default l)");
    forgetting->add_option("--states-out", states_out, "optional filter state CSV");

    CLI::App* conditions = app.add_subcommand("conditions", "regularity condition checkers");
    add_model_out(conditions, false);
    conditions->add_option("--dominant", dominant, "dominant symbol I (default: widest scale)");
    conditions->add_option("--epsilon", epsilon, "dominance threshold");
    conditions->add_option("--r2", r2, "complex ball radius");
    conditions->add_option("--delta", delta, "real-domination target");
    conditions->add_option("--search-bound", search_bound, "dominance search bound");

    CLI::App* scan = app.add_subcommand("scan", "entropy derivative scan");
    add_model_out(scan);
    scan->add_option("--n", scan_n, "window length");
    scan->add_option("--samples", samples, "Monte Carlo sample count");
    scan->add_option("--h-cs", h_cs, "complex step size");
    scan->add_option("--h-fd", h_fd, "finite difference step size");

    CLI::App* winding = app.add_subcommand("winding", "winding probe and non-analyticity table");
    winding->add_option("--out", common.out_path, "output CSV path")->required();
    winding->add_option("--sigma", sigma, "base scale");
    winding->add_option("--r", radius, "circle radius");
    winding->add_option("--z", z_values, "z values to probe");
    winding->add_option("--alpha-samples", alpha_samples, "initial path samples");
    winding->add_option("--na-out", na_out, "non-analyticity table CSV path");
    winding->add_option("--na-width", na_width, "relative grid half-width");
    winding->add_option("--na-grid", na_grid, "grid points");
    winding->add_option("--na-center", na_center, "grid center (default sigma)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (entropy->parsed()) return run_entropy(common, n_max, samples);
        if (contraction->parsed()) return run_contraction(common, pairs);
        if (forgetting->parsed())
            return run_forgetting(common, steps, initial_a, initial_b, states_out);
        if (conditions->parsed())
            return run_conditions(common, dominant, epsilon, r2, delta, search_bound);
        if (scan->parsed()) return run_scan(common, scan_n, samples, h_cs, h_fd);
        if (winding->parsed())
            return run_winding(common, sigma, radius, z_values, alpha_samples, na_out, na_width,
                               na_grid, na_center);
    } catch (const entrate::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const entrate::NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const entrate::SingularEvaluation& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
