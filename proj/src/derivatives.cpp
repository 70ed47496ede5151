#include "entrate/derivatives.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "entrate/errors.hpp"
#include "entrate/filter.hpp"
#include "entrate/sampling.hpp"

namespace entrate {

namespace {

using Complex = std::complex<double>;

struct SampleBase {
    std::vector<double> observations;  // z_{-n}^0
    double log_joint;                  // log p^theta0(z_{-n}^0)
};

// Complexified model/channel at theta0 + step * direction. `step` is real for
// the finite-difference legs and purely imaginary for the complex step.
struct PerturbedPoint {
    ComplexMarkovModel model;
    ComplexChannelModel channel;
    ComplexSimplexVector stationary;
};

PerturbedPoint perturb(const MarkovModel& model, const ChannelModel& channel,
                       const ParameterDirection& dir, Complex step) {
    ComplexMatrix t(model.size(), model.size());
    for (int i = 0; i < model.size(); ++i)
        for (int j = 0; j < model.size(); ++j) t(i, j) = {model.transition()(i, j), 0.0};
    ComplexChannelModel cc = ComplexChannelModel::from_real(channel);
    switch (dir.kind) {
        case ParameterDirection::Kind::transition:
            t(dir.row, dir.col) += step;
            t(dir.row, dir.compensating_col) -= step;
            break;
        case ParameterDirection::Kind::channel_mu:
            cc.mutable_params()[static_cast<size_t>(dir.symbol - 1)].mu += step;
            break;
        case ParameterDirection::Kind::channel_scale:
            cc.mutable_params()[static_cast<size_t>(dir.symbol - 1)].scale += step;
            break;
    }
    ComplexMarkovModel cm(std::move(t));
    std::vector<Complex> pi = stationary_vector_complex(cm.transition());
    return {std::move(cm), std::move(cc), ComplexSimplexVector(std::move(pi))};
}

// Per-sample value g_k(theta) = -w_k * log p^theta(z_0 | window).
Complex weighted_term(const PerturbedPoint& point, const SampleBase& base) {
    const ComplexFilterTrajectory traj =
        run_filter(point.model, point.channel, base.observations, point.stationary);
    const Complex weight = std::exp(traj.log_joint - base.log_joint);
    return -weight * traj.step_log_conditionals.back();
}

void accumulate(double value, double& sum, double& sum_sq) {
    sum += value;
    sum_sq += value * value;
}

double std_error(double sum, double sum_sq, long n) {
    const double mean = sum / static_cast<double>(n);
    const double var = std::max(0.0, (sum_sq - n * mean * mean) / static_cast<double>(n - 1));
    return std::sqrt(var / static_cast<double>(n));
}

}  // namespace

std::string ParameterDirection::name() const {
    switch (kind) {
        case Kind::transition:
            return "pi[" + std::to_string(row + 1) + "][" + std::to_string(col + 1) + "]";
        case Kind::channel_mu:
            return "mu[" + std::to_string(symbol) + "]";
        case Kind::channel_scale:
            return "scale[" + std::to_string(symbol) + "]";
    }
    return "?";
}

ParameterDirection ParameterDirection::transition_entry(int row, int col, int compensating_col) {
    if (col == compensating_col)
        throw std::invalid_argument("ParameterDirection: compensating column must differ");
    ParameterDirection d;
    d.kind = Kind::transition;
    d.row = row;
    d.col = col;
    d.compensating_col = compensating_col;
    return d;
}

ParameterDirection ParameterDirection::channel_mu(int symbol) {
    ParameterDirection d;
    d.kind = Kind::channel_mu;
    d.symbol = symbol;
    return d;
}

ParameterDirection ParameterDirection::channel_scale(int symbol) {
    ParameterDirection d;
    d.kind = Kind::channel_scale;
    d.symbol = symbol;
    return d;
}

std::vector<ParameterDirection> all_parameter_directions(const MarkovModel& model,
                                                         const ChannelModel& channel) {
    std::vector<ParameterDirection> dirs;
    const int l = model.size();
    for (int i = 0; i < l; ++i)
        for (int j = 0; j + 1 < l; ++j)
            dirs.push_back(ParameterDirection::transition_entry(i, j, l - 1));
    for (int y = 1; y <= channel.symbols(); ++y) {
        dirs.push_back(ParameterDirection::channel_mu(y));
        dirs.push_back(ParameterDirection::channel_scale(y));
    }
    return dirs;
}

std::vector<DerivativeEstimate> derivative_scan(const MarkovModel& model,
                                                const ChannelModel& channel,
                                                const std::vector<ParameterDirection>& directions,
                                                int n, long samples, double h_cs, double h_fd,
                                                std::uint64_t seed) {
    if (samples < 2) throw std::invalid_argument("derivative_scan: need >= 2 samples");
    if (!(h_cs > 0.0) || !(h_fd > 0.0))
        throw std::invalid_argument("derivative_scan: step sizes must be positive");
    for (const auto& dir : directions) {
        if (dir.kind == ParameterDirection::Kind::transition) {
            const double lo = std::min(model.transition()(dir.row, dir.col),
                                       model.transition()(dir.row, dir.compensating_col));
            if (lo - h_fd <= 0.0)
                throw ConfigError("derivative_scan: finite-difference step leaves the model "
                                  "positive cone for " +
                                  dir.name());
        }
        if (dir.kind == ParameterDirection::Kind::channel_scale &&
            channel.param(dir.symbol).scale - h_fd <= 0.0)
            throw ConfigError("derivative_scan: finite-difference step makes scale " +
                              dir.name() + " nonpositive");
    }

    // Common random numbers: one batch of windows shared by every direction
    // and by both methods.
    std::vector<SampleBase> bases;
    bases.reserve(static_cast<size_t>(samples));
    for (long k = 0; k < samples; ++k) {
        SampleBase base;
        base.observations =
            sample_trajectory(model, channel, n + 1, seed + static_cast<std::uint64_t>(k)).outputs;
        base.log_joint = run_filter(model, channel, base.observations).log_joint;
        bases.push_back(std::move(base));
    }

    std::vector<DerivativeEstimate> out;
    out.reserve(directions.size());
    for (const auto& dir : directions) {
        const PerturbedPoint cs_point = perturb(model, channel, dir, Complex{0.0, h_cs});
        const PerturbedPoint fd_plus = perturb(model, channel, dir, Complex{h_fd, 0.0});
        const PerturbedPoint fd_minus = perturb(model, channel, dir, Complex{-h_fd, 0.0});
        double cs_sum = 0.0, cs_sq = 0.0;
        double fd_sum = 0.0, fd_sq = 0.0;
        double gap_sum = 0.0, gap_sq = 0.0;
        for (const auto& base : bases) {
            Complex g_cs, g_plus, g_minus;
            try {
                g_cs = weighted_term(cs_point, base);
                g_plus = weighted_term(fd_plus, base);
                g_minus = weighted_term(fd_minus, base);
            } catch (const SingularEvaluation& e) {
                throw SingularEvaluation(std::string("derivative_scan: ") + e.what() +
                                         " while perturbing " + dir.name());
            }
            const double cs = g_cs.imag() / h_cs;
            const double fd = (g_plus.real() - g_minus.real()) / (2.0 * h_fd);
            accumulate(cs, cs_sum, cs_sq);
            accumulate(fd, fd_sum, fd_sq);
            accumulate(cs - fd, gap_sum, gap_sq);
        }
        DerivativeEstimate est;
        est.direction = dir;
        est.h_cs = h_cs;
        est.h_fd = h_fd;
        est.complex_step = cs_sum / static_cast<double>(samples);
        est.central_difference = fd_sum / static_cast<double>(samples);
        est.gap = gap_sum / static_cast<double>(samples);
        est.se_cs = std_error(cs_sum, cs_sq, samples);
        est.se_fd = std_error(fd_sum, fd_sq, samples);
        est.se_gap = std_error(gap_sum, gap_sq, samples);
        out.push_back(est);
    }
    return out;
}

}  // namespace entrate
