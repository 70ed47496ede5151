#pragma once

#include <complex>
#include <string>
#include <vector>

namespace entrate {

enum class ChannelKind { gaussian, cauchy };

std::string to_string(ChannelKind kind);
ChannelKind channel_kind_from_string(const std::string& name);

struct ChannelParam {
    double mu;
    double scale;  // sigma (gaussian) or gamma (cauchy), strictly positive
};

/// Memoryless additive-noise channel: one location/scale pair per input
/// symbol. Symbols are 1-based (1..l).
class ChannelModel {
public:
    ChannelModel(ChannelKind kind, std::vector<ChannelParam> params);

    ChannelKind kind() const { return kind_; }
    int symbols() const { return static_cast<int>(params_.size()); }
    const ChannelParam& param(int y) const;
    const std::vector<ChannelParam>& params() const { return params_; }

    /// q(z|y) > 0 for every real z.
    double density(double z, int y) const;
    double log_density(double z, int y) const;

private:
    ChannelKind kind_;
    std::vector<ChannelParam> params_;
};

struct ComplexChannelParam {
    std::complex<double> mu;
    std::complex<double> scale;
};

/// Channel with complexified parameters, evaluated by the analytic extension
/// of the density formula. Throws SingularEvaluation where the extension has
/// a vanishing denominator (Cauchy: (z-mu)^2 + gamma^2 = 0).
class ComplexChannelModel {
public:
    ComplexChannelModel(ChannelKind kind, std::vector<ComplexChannelParam> params);

    static ComplexChannelModel from_real(const ChannelModel& channel);

    ChannelKind kind() const { return kind_; }
    int symbols() const { return static_cast<int>(params_.size()); }
    const ComplexChannelParam& param(int y) const;
    std::vector<ComplexChannelParam>& mutable_params() { return params_; }

    std::complex<double> density(double z, int y) const;

    /// Principal-branch log of the complexified density, evaluated without
    /// forming the (possibly underflowing) density itself.
    std::complex<double> log_density(double z, int y) const;

private:
    ChannelKind kind_;
    std::vector<ComplexChannelParam> params_;
};

}  // namespace entrate
