#include "entrate/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "entrate/errors.hpp"

namespace entrate {

namespace {
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2*pi))
}

std::string to_string(ChannelKind kind) {
    return kind == ChannelKind::gaussian ? "gaussian" : "cauchy";
}

ChannelKind channel_kind_from_string(const std::string& name) {
    if (name == "gaussian") return ChannelKind::gaussian;
    if (name == "cauchy") return ChannelKind::cauchy;
    throw std::invalid_argument("unknown channel kind: " + name);
}

ChannelModel::ChannelModel(ChannelKind kind, std::vector<ChannelParam> params)
    : kind_(kind), params_(std::move(params)) {
    if (params_.empty()) throw std::invalid_argument("ChannelModel: no parameters");
    for (const auto& p : params_)
        if (!(p.scale > 0.0)) throw std::invalid_argument("ChannelModel: scale must be positive");
}

const ChannelParam& ChannelModel::param(int y) const {
    if (y < 1 || y > symbols()) throw std::invalid_argument("ChannelModel: symbol out of range");
    return params_[static_cast<size_t>(y - 1)];
}

// Mirrors the complexified expression tree exactly, so the complex evaluation
// restricted to real parameters is bit-compatible with this one.
double ChannelModel::density(double z, int y) const {
    const auto& p = param(y);
    const double d = z - p.mu;
    if (kind_ == ChannelKind::gaussian) {
        const double inv = 1.0 / (std::sqrt(2.0 * M_PI) * p.scale);
        return inv * std::exp(-d * d / (2.0 * p.scale * p.scale));
    }
    return p.scale / (M_PI * (d * d + p.scale * p.scale));
}

double ChannelModel::log_density(double z, int y) const {
    const auto& p = param(y);
    const double d = z - p.mu;
    if (kind_ == ChannelKind::gaussian)
        return -kLogSqrt2Pi - std::log(p.scale) - d * d / (2.0 * p.scale * p.scale);
    return std::log(p.scale) - std::log(M_PI) - std::log(d * d + p.scale * p.scale);
}

ComplexChannelModel::ComplexChannelModel(ChannelKind kind, std::vector<ComplexChannelParam> params)
    : kind_(kind), params_(std::move(params)) {
    if (params_.empty()) throw std::invalid_argument("ComplexChannelModel: no parameters");
}

ComplexChannelModel ComplexChannelModel::from_real(const ChannelModel& channel) {
    std::vector<ComplexChannelParam> params;
    params.reserve(static_cast<size_t>(channel.symbols()));
    for (const auto& p : channel.params())
        params.push_back({{p.mu, 0.0}, {p.scale, 0.0}});
    return ComplexChannelModel(channel.kind(), std::move(params));
}

const ComplexChannelParam& ComplexChannelModel::param(int y) const {
    if (y < 1 || y > symbols())
        throw std::invalid_argument("ComplexChannelModel: symbol out of range");
    return params_[static_cast<size_t>(y - 1)];
}

std::complex<double> ComplexChannelModel::density(double z, int y) const {
    const auto& p = param(y);
    const std::complex<double> d = z - p.mu;
    if (kind_ == ChannelKind::gaussian) {
        if (p.scale == std::complex<double>{0.0, 0.0})
            throw SingularEvaluation("complex gaussian density: sigma = 0");
        const std::complex<double> inv_sqrt = 1.0 / (std::sqrt(2.0 * M_PI) * p.scale);
        return inv_sqrt * std::exp(-d * d / (2.0 * p.scale * p.scale));
    }
    const std::complex<double> denom = d * d + p.scale * p.scale;
    if (std::abs(denom) == 0.0)
        throw SingularEvaluation("complex cauchy density: (z-mu)^2 + gamma^2 = 0");
    return p.scale / (M_PI * denom);
}

std::complex<double> ComplexChannelModel::log_density(double z, int y) const {
    const auto& p = param(y);
    const std::complex<double> d = z - p.mu;
    if (kind_ == ChannelKind::gaussian) {
        if (p.scale == std::complex<double>{0.0, 0.0})
            throw SingularEvaluation("complex gaussian log density: sigma = 0");
        return -kLogSqrt2Pi - std::log(p.scale) - d * d / (2.0 * p.scale * p.scale);
    }
    const std::complex<double> denom = d * d + p.scale * p.scale;
    if (std::abs(denom) == 0.0)
        throw SingularEvaluation("complex cauchy log density: (z-mu)^2 + gamma^2 = 0");
    if (std::abs(p.scale) == 0.0)
        throw SingularEvaluation("complex cauchy log density: gamma = 0");
    return std::log(p.scale) - std::log(M_PI) - std::log(denom);
}

}  // namespace entrate
