#include "entrate/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entrate/errors.hpp"
#include "entrate/filter.hpp"
#include "entrate/rng.hpp"
#include "entrate/sampling.hpp"

namespace entrate {

namespace {

// Order-stable accumulation for the Monte Carlo means.
class KahanSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

double neg_p_log_p(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

QuadratureResult entropy_integral(const ChannelModel& channel,
                                  const std::vector<double>& weights,
                                  const QuadratureSettings& settings) {
    const int l = channel.symbols();
    auto mixture = [&](double z) {
        double p = 0.0;
        for (int y = 1; y <= l; ++y) p += weights[static_cast<size_t>(y - 1)] * channel.density(z, y);
        return neg_p_log_p(p);
    };
    if (channel.kind() == ChannelKind::cauchy) {
        // Centre the tangent substitution on the weight-averaged location and
        // stretch it by the widest scale so the transformed integrand is tame.
        double center = 0.0, scale = 0.0;
        for (int y = 1; y <= l; ++y) {
            center += weights[static_cast<size_t>(y - 1)] * channel.param(y).mu;
            scale = std::max(scale, channel.param(y).scale);
        }
        return integrate_real_line_tan(mixture, center, scale, settings);
    }
    double lo = channel.param(1).mu, hi = channel.param(1).mu;
    for (int y = 1; y <= l; ++y) {
        lo = std::min(lo, channel.param(y).mu - 40.0 * channel.param(y).scale);
        hi = std::max(hi, channel.param(y).mu + 40.0 * channel.param(y).scale);
    }
    return integrate_adaptive(mixture, lo, hi, settings);
}

}  // namespace

double component_entropy(const ChannelModel& channel, int symbol,
                         const QuadratureSettings& settings) {
    std::vector<double> weights(static_cast<size_t>(channel.symbols()), 0.0);
    weights[static_cast<size_t>(symbol - 1)] = 1.0;
    QuadratureResult r = entropy_integral(channel, weights, settings);
    if (!r.converged)
        throw NumericalFailure("component_entropy: quadrature did not converge (error " +
                               std::to_string(r.error_estimate) + ")");
    return r.value;
}

double conditional_entropy_given_input(const MarkovModel& model, const ChannelModel& channel,
                                       const QuadratureSettings& settings) {
    if (model.size() != channel.symbols())
        throw std::invalid_argument("conditional_entropy_given_input: size mismatch");
    double acc = 0.0;
    for (int y = 1; y <= model.size(); ++y)
        acc += model.stationary()[y - 1] * component_entropy(channel, y, settings);
    return acc;
}

double mixture_entropy(const std::vector<double>& weights, const ChannelModel& channel,
                       const QuadratureSettings& settings) {
    if (static_cast<int>(weights.size()) != channel.symbols())
        throw std::invalid_argument("mixture_entropy: weight/channel size mismatch");
    QuadratureResult r = entropy_integral(channel, weights, settings);
    if (!r.converged)
        throw NumericalFailure("mixture_entropy: quadrature did not converge");
    return r.value;
}

EntropyEstimate estimate_entropy_rate(const MarkovModel& model, const ChannelModel& channel,
                                      int n, long samples, std::uint64_t seed) {
    if (samples < 2) throw std::invalid_argument("estimate_entropy_rate: need >= 2 samples");
    if (n < 0) throw std::invalid_argument("estimate_entropy_rate: n must be >= 0");
    KahanSum sum, sum_sq;
    for (long k = 0; k < samples; ++k) {
        const Trajectory traj =
            sample_trajectory(model, channel, n + 1, seed + static_cast<std::uint64_t>(k));
        SimplexVector x = model.stationary();
        for (int i = 0; i < n; ++i)
            x = filter_step(x, model, channel, traj.outputs[static_cast<size_t>(i)]);
        const double p = predictive_density(x, model, channel, traj.outputs.back());
        const double v = -std::log(p);
        sum.add(v);
        sum_sq.add(v * v);
    }
    const double mean = sum.value() / static_cast<double>(samples);
    const double var =
        std::max(0.0, (sum_sq.value() - samples * mean * mean) / static_cast<double>(samples - 1));
    EntropyEstimate est;
    est.n = n;
    est.value = mean;
    est.std_error = std::sqrt(var / static_cast<double>(samples));
    est.samples = samples;
    est.method = EstimateMethod::monte_carlo;
    return est;
}

ConvergenceRecord convergence_scan(const MarkovModel& model, const ChannelModel& channel,
                                   int n_max, long samples, std::uint64_t seed) {
    if (n_max < 3) throw std::invalid_argument("convergence_scan: n_max must be >= 3");
    if (samples < 2) throw std::invalid_argument("convergence_scan: need >= 2 samples");
    const int cols = n_max + 1;
    std::vector<KahanSum> h(static_cast<size_t>(cols)), h_sq(static_cast<size_t>(cols));
    std::vector<KahanSum> d(static_cast<size_t>(n_max)), d_sq(static_cast<size_t>(n_max));
    std::vector<double> v(static_cast<size_t>(cols));
    for (long k = 0; k < samples; ++k) {
        const Trajectory traj =
            sample_trajectory(model, channel, n_max + 1, seed + static_cast<std::uint64_t>(k));
        const double z0 = traj.outputs.back();
        for (int n = 0; n <= n_max; ++n) {
            SimplexVector x = model.stationary();
            for (int i = n_max - n; i < n_max; ++i)
                x = filter_step(x, model, channel, traj.outputs[static_cast<size_t>(i)]);
            v[static_cast<size_t>(n)] = -std::log(predictive_density(x, model, channel, z0));
            h[static_cast<size_t>(n)].add(v[static_cast<size_t>(n)]);
            h_sq[static_cast<size_t>(n)].add(v[static_cast<size_t>(n)] * v[static_cast<size_t>(n)]);
        }
        for (int n = 0; n < n_max; ++n) {
            const double diff = v[static_cast<size_t>(n + 1)] - v[static_cast<size_t>(n)];
            d[static_cast<size_t>(n)].add(diff);
            d_sq[static_cast<size_t>(n)].add(diff * diff);
        }
    }
    ConvergenceRecord rec;
    const double ns = static_cast<double>(samples);
    for (int n = 0; n <= n_max; ++n) {
        const double mean = h[static_cast<size_t>(n)].value() / ns;
        const double var = std::max(
            0.0, (h_sq[static_cast<size_t>(n)].value() - ns * mean * mean) / (ns - 1.0));
        rec.entries.push_back({n, mean, std::sqrt(var / ns)});
    }
    for (int n = 0; n < n_max; ++n) {
        const double mean = d[static_cast<size_t>(n)].value() / ns;
        const double var = std::max(
            0.0, (d_sq[static_cast<size_t>(n)].value() - ns * mean * mean) / (ns - 1.0));
        rec.deltas.push_back(mean);
        rec.delta_ses.push_back(std::sqrt(var / ns));
    }
    // Fit log|delta_n| = log L + n log rho over the points above the noise floor.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
    int pts = 0;
    for (int n = 0; n < n_max; ++n) {
        const double mag = std::abs(rec.deltas[static_cast<size_t>(n)]);
        if (mag <= 2.0 * rec.delta_ses[static_cast<size_t>(n)] || mag <= 0.0) continue;
        const double x = static_cast<double>(n);
        const double y = std::log(mag);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
        ++pts;
    }
    rec.fit_points = pts;
    if (pts == 0) {
        rec.verdict = "converged-at-noise-floor";
        return rec;
    }
    if (pts < 2) {
        rec.verdict = "inconclusive";
        return rec;
    }
    const double denom = pts * sxx - sx * sx;
    if (denom == 0.0) {
        rec.verdict = "inconclusive";
        return rec;
    }
    const double slope = (pts * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / pts;
    rec.rho_hat = std::exp(slope);
    rec.l_hat = std::exp(intercept);
    const double ss_tot = syy - sy * sy / pts;
    double ss_res = 0.0;
    for (int n = 0; n < n_max; ++n) {
        const double mag = std::abs(rec.deltas[static_cast<size_t>(n)]);
        if (mag <= 2.0 * rec.delta_ses[static_cast<size_t>(n)] || mag <= 0.0) continue;
        const double r = std::log(mag) - (intercept + slope * n);
        ss_res += r * r;
    }
    rec.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    rec.verdict = (rec.rho_hat > 0.0 && rec.rho_hat < 1.0) ? "converged" : "inconclusive";
    return rec;
}

}  // namespace entrate
