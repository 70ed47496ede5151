#include "entrate/filter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "entrate/errors.hpp"

namespace entrate {

namespace {

void require_match(int model_size, int channel_symbols, const char* who) {
    if (model_size != channel_symbols)
        throw std::invalid_argument(std::string(who) + ": model/channel size mismatch");
}

// Column scales exp(log q(z|j) - m) with m = max_j log q(z|j); the shared
// factor exp(m) is returned separately so likelihoods stay exact in log scale.
std::pair<std::vector<double>, double> scaled_density_column(const ChannelModel& channel,
                                                             double z) {
    const int l = channel.symbols();
    std::vector<double> logq(static_cast<size_t>(l));
    double m = -std::numeric_limits<double>::infinity();
    for (int y = 1; y <= l; ++y) {
        logq[static_cast<size_t>(y - 1)] = channel.log_density(z, y);
        m = std::max(m, logq[static_cast<size_t>(y - 1)]);
    }
    if (!std::isfinite(m))
        throw NumericalFailure("filter: all densities vanished at an observation");
    std::vector<double> q(static_cast<size_t>(l));
    for (int j = 0; j < l; ++j) q[static_cast<size_t>(j)] = std::exp(logq[static_cast<size_t>(j)] - m);
    return {std::move(q), m};
}

// One scaled step: returns the next state and log of the step conditional.
std::pair<SimplexVector, double> step_with_likelihood(const SimplexVector& x,
                                                      const MarkovModel& model,
                                                      const ChannelModel& channel, double z) {
    const auto [q, log_scale] = scaled_density_column(channel, z);
    const auto& p = model.transition();
    const int l = model.size();
    std::vector<double> y(static_cast<size_t>(l), 0.0);
    for (int i = 0; i < l; ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        for (int j = 0; j < l; ++j) y[static_cast<size_t>(j)] += xi * p(i, j) * q[static_cast<size_t>(j)];
    }
    double s = 0.0;
    for (double v : y) s += v;
    if (!(s > 0.0)) throw NumericalFailure("filter: vanishing normalizer");
    for (double& v : y) v /= s;
    return {SimplexVector(std::move(y)), std::log(s) + log_scale};
}

std::pair<ComplexSimplexVector, std::complex<double>> step_with_likelihood(
    const ComplexSimplexVector& x, const ComplexMarkovModel& model,
    const ComplexChannelModel& channel, double z) {
    const int l = model.size();
    std::vector<std::complex<double>> q(static_cast<size_t>(l));
    double max_mod = 0.0;
    for (int y = 1; y <= l; ++y) {
        q[static_cast<size_t>(y - 1)] = channel.density(z, y);
        max_mod = std::max(max_mod, std::abs(q[static_cast<size_t>(y - 1)]));
    }
    if (!(max_mod > 0.0))
        throw SingularEvaluation("complex filter: all densities vanished at z=" +
                                 std::to_string(z));
    for (auto& v : q) v /= max_mod;
    const auto& p = model.transition();
    std::vector<std::complex<double>> y(static_cast<size_t>(l), {0.0, 0.0});
    for (int i = 0; i < l; ++i) {
        const std::complex<double> xi = x[i];
        for (int j = 0; j < l; ++j) y[static_cast<size_t>(j)] += xi * p(i, j) * q[static_cast<size_t>(j)];
    }
    std::complex<double> s{0.0, 0.0};
    for (const auto& v : y) s += v;
    if (std::abs(s) < 1e-300)
        throw SingularEvaluation("complex filter: vanishing normalizer at z=" +
                                 std::to_string(z));
    for (auto& v : y) v /= s;
    return {ComplexSimplexVector(std::move(y)),
            std::log(s) + std::complex<double>{std::log(max_mod), 0.0}};
}

}  // namespace

RealMatrix observation_matrix(const MarkovModel& model, const ChannelModel& channel, double z) {
    require_match(model.size(), channel.symbols(), "observation_matrix");
    const int l = model.size();
    RealMatrix m(l, l);
    for (int j = 0; j < l; ++j) {
        const double q = channel.density(z, j + 1);
        for (int i = 0; i < l; ++i) m(i, j) = model.transition()(i, j) * q;
    }
    return m;
}

ComplexMatrix observation_matrix(const ComplexMarkovModel& model,
                                 const ComplexChannelModel& channel, double z) {
    require_match(model.size(), channel.symbols(), "observation_matrix");
    const int l = model.size();
    ComplexMatrix m(l, l);
    for (int j = 0; j < l; ++j) {
        const std::complex<double> q = channel.density(z, j + 1);
        for (int i = 0; i < l; ++i) m(i, j) = model.transition()(i, j) * q;
    }
    return m;
}

SimplexVector filter_step(const SimplexVector& x, const MarkovModel& model,
                          const ChannelModel& channel, double z) {
    require_match(model.size(), channel.symbols(), "filter_step");
    return step_with_likelihood(x, model, channel, z).first;
}

ComplexSimplexVector filter_step(const ComplexSimplexVector& x, const ComplexMarkovModel& model,
                                 const ComplexChannelModel& channel, double z) {
    require_match(model.size(), channel.symbols(), "filter_step");
    return step_with_likelihood(x, model, channel, z).first;
}

FilterTrajectory run_filter(const MarkovModel& model, const ChannelModel& channel,
                            const std::vector<double>& observations,
                            const std::optional<SimplexVector>& initial) {
    if (observations.empty()) throw std::invalid_argument("run_filter: no observations");
    FilterTrajectory out;
    out.states.reserve(observations.size() + 1);
    out.states.push_back(initial.value_or(model.stationary()));
    for (double z : observations) {
        auto [next, log_cond] = step_with_likelihood(out.states.back(), model, channel, z);
        out.states.push_back(std::move(next));
        out.step_log_conditionals.push_back(log_cond);
        out.log_joint += log_cond;
    }
    out.predictive = std::exp(out.step_log_conditionals.back());
    return out;
}

ComplexFilterTrajectory run_filter(const ComplexMarkovModel& model,
                                   const ComplexChannelModel& channel,
                                   const std::vector<double>& observations,
                                   const ComplexSimplexVector& initial) {
    if (observations.empty()) throw std::invalid_argument("run_filter: no observations");
    ComplexFilterTrajectory out;
    out.states.reserve(observations.size() + 1);
    out.states.push_back(initial);
    for (double z : observations) {
        auto [next, log_cond] = step_with_likelihood(out.states.back(), model, channel, z);
        out.states.push_back(std::move(next));
        out.step_log_conditionals.push_back(log_cond);
        out.log_joint += log_cond;
    }
    out.predictive = std::exp(out.step_log_conditionals.back());
    return out;
}

double predictive_density(const SimplexVector& x, const MarkovModel& model,
                          const ChannelModel& channel, double z0) {
    require_match(model.size(), channel.symbols(), "predictive_density");
    const int l = model.size();
    const auto& p = model.transition();
    double acc = 0.0;
    for (int j = 0; j < l; ++j) {
        double col = 0.0;
        for (int i = 0; i < l; ++i) col += x[i] * p(i, j);
        acc += col * channel.density(z0, j + 1);
    }
    return acc;
}

std::complex<double> predictive_density(const ComplexSimplexVector& x,
                                        const ComplexMarkovModel& model,
                                        const ComplexChannelModel& channel, double z0) {
    require_match(model.size(), channel.symbols(), "predictive_density");
    const int l = model.size();
    const auto& p = model.transition();
    std::complex<double> acc{0.0, 0.0};
    for (int j = 0; j < l; ++j) {
        std::complex<double> col{0.0, 0.0};
        for (int i = 0; i < l; ++i) col += x[i] * p(i, j);
        acc += col * channel.density(z0, j + 1);
    }
    return acc;
}

std::vector<std::pair<int, double>> forgetting_curve(const MarkovModel& model,
                                                     const ChannelModel& channel,
                                                     const std::vector<double>& observations,
                                                     const SimplexVector& initial_a,
                                                     const SimplexVector& initial_b) {
    SimplexVector a = initial_a;
    SimplexVector b = initial_b;
    std::vector<std::pair<int, double>> gaps;
    gaps.reserve(observations.size());
    int step = 0;
    for (double z : observations) {
        a = filter_step(a, model, channel, z);
        b = filter_step(b, model, channel, z);
        gaps.emplace_back(++step, euclidean_gap(a, b));
    }
    return gaps;
}

LogSlopeFit fit_log_slope(const std::vector<std::pair<int, double>>& curve, double floor) {
    LogSlopeFit fit;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [step, gap] : curve) {
        if (!(gap > floor)) continue;
        const double x = static_cast<double>(step);
        const double y = std::log(gap);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
        ++fit.points;
    }
    if (fit.points < 2) return fit;
    const double n = static_cast<double>(fit.points);
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    const double ss_tot = syy - sy * sy / n;
    double ss_res = 0.0;
    for (const auto& [step, gap] : curve) {
        if (!(gap > floor)) continue;
        const double r = std::log(gap) - (fit.intercept + fit.slope * step);
        ss_res += r * r;
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

ReblockingScheme ReblockingScheme::uniform(int window, int n0) {
    if (window < 1 || n0 < 1) throw ConfigError("ReblockingScheme::uniform: bad sizes");
    ReblockingScheme scheme;
    for (int begin = 0; begin < window; begin += n0) {
        Block b;
        b.begin = begin;
        b.end = std::min(begin + n0, window);
        b.tag = BlockTag::uniform;
        scheme.blocks.push_back(b);
    }
    return scheme;
}

ReblockingScheme ReblockingScheme::dichotomy(const std::vector<double>& observations,
                                             double sigma_bound, int n0) {
    if (observations.empty() || n0 < 1 || !(sigma_bound > 0.0))
        throw ConfigError("ReblockingScheme::dichotomy: bad arguments");
    const int window = static_cast<int>(observations.size());
    ReblockingScheme scheme;
    int pos = 0;
    while (pos < window) {
        Block b;
        b.begin = pos;
        if (std::abs(observations[static_cast<size_t>(pos)]) > sigma_bound) {
            b.end = pos + 1;
            b.tag = BlockTag::type_one;
        } else {
            b.end = std::min(pos + n0, window);
            b.tag = BlockTag::type_two;
        }
        // A trailing fragment shorter than n0 is folded into the last block.
        if (b.tag == BlockTag::type_two && !scheme.blocks.empty() && b.end - b.begin < n0 &&
            scheme.blocks.back().tag == BlockTag::type_two) {
            scheme.blocks.back().end = b.end;
        } else {
            scheme.blocks.push_back(b);
        }
        pos = scheme.blocks.back().end;
    }
    return scheme;
}

void ReblockingScheme::validate(int window) const {
    if (blocks.empty()) throw ConfigError("ReblockingScheme: empty");
    int expect = 0;
    for (const auto& b : blocks) {
        if (b.begin != expect || b.end <= b.begin)
            throw ConfigError("ReblockingScheme: blocks must be consecutive and non-empty");
        expect = b.end;
    }
    if (expect != window) throw ConfigError("ReblockingScheme: blocks must cover the window");
}

std::vector<std::vector<double>> reblock(const std::vector<double>& observations,
                                         const ReblockingScheme& scheme) {
    scheme.validate(static_cast<int>(observations.size()));
    std::vector<std::vector<double>> out;
    out.reserve(scheme.blocks.size());
    for (const auto& b : scheme.blocks)
        out.emplace_back(observations.begin() + b.begin, observations.begin() + b.end);
    return out;
}

SimplexVector filter_block(const SimplexVector& x, const MarkovModel& model,
                           const ChannelModel& channel, const std::vector<double>& block) {
    SimplexVector state = x;
    for (double z : block) state = filter_step(state, model, channel, z);
    return state;
}

OrbitProbe complex_orbit_probe(const ComplexMarkovModel& model,
                               const ComplexChannelModel& channel,
                               const std::vector<double>& observations,
                               const ComplexSimplexVector& initial) {
    OrbitProbe probe;
    ComplexSimplexVector state = initial;
    int index = 0;
    for (double z : observations) {
        try {
            state = filter_step(state, model, channel, z);
        } catch (const SingularEvaluation&) {
            probe.singular_steps.push_back(index);
            ++index;
            continue;
        }
        const double dist = state.distance_to_simplex();
        const bool cone = state.in_positive_cone();
        probe.distances_to_simplex.push_back(dist);
        probe.in_positive_cone.push_back(cone);
        probe.max_distance = std::max(probe.max_distance, dist);
        if (!cone) ++probe.cone_violations;
        ++index;
    }
    return probe;
}

}  // namespace entrate
