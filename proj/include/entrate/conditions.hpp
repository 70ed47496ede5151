#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "entrate/channel.hpp"
#include "entrate/markov.hpp"
#include "entrate/quadrature.hpp"

namespace entrate {

enum class Verdict { certified_on_grid, violated, inconclusive };

std::string to_string(Verdict verdict);

/// Outcome of one regularity check. A `violated` verdict always carries a
/// concrete witness; margins hold the numeric extremes the check observed
/// (C', C'', Z*, max ratios, integral values, ...).
struct ConditionReport {
    std::string condition;
    Verdict verdict = Verdict::inconclusive;
    std::string witness;
    std::map<std::string, double> margins;
};

/// Condition (a): strict positivity of the transition matrix.
ConditionReport check_positivity(const MarkovModel& model);

/// Condition (b): channel densities positive on the real line
/// (positive scales for the families handled here).
ConditionReport check_channel_positivity(const ChannelModel& channel);

struct ComparabilitySettings {
    double z_lo = -50.0;
    double z_hi = 50.0;
    int grid_points = 20001;
};

/// Two-sided comparability of all density ratios: grid extremes of
/// q(z|j)/q(z|i) combined with the exact tail limits (gamma_j/gamma_i for
/// Cauchy). Gaussian channels with unequal widths or locations are reported
/// violated with a grid witness where the ratio runs away.
ConditionReport check_comparability(const ChannelModel& channel,
                                    const ComparabilitySettings& settings = {});

struct DominanceSettings {
    double search_bound = 20.0;
    double grid_step = 0.002;
    double r2 = 0.0;  // optional complex-ball radius; 0 checks the real point only
    int ball_phases = 8;
};

/// Dominance of component I: the smallest symmetric Z* on the grid with
/// q(z|j)/q(z|I) <= epsilon for all j != I and Z* <= |z| <= search_bound.
/// Returns `inconclusive` when no such Z* exists within the search bound.
ConditionReport check_dominance(const ChannelModel& channel, int dominant_symbol, double epsilon,
                                const DominanceSettings& settings = {});

struct RealDominationSettings {
    double z_lo = -50.0;
    double z_hi = 50.0;
    int grid_points = 2001;
    int ball_phases = 8;
};

/// Real-domination over a complex parameter ball of radius r2:
///   (i)  |Im q| < delta |Re q|,  (ii) |Log(q^theta / q^theta0)| <= delta
/// sampled on (z grid) x (ball center + coordinate circles).
ConditionReport check_real_domination(const ChannelModel& channel, double r2, double delta,
                                      const RealDominationSettings& settings = {});

/// Equicontinuity proxy for Condition (d)(i): the largest change of the
/// ratio family g_z(theta) = q(z|j)/q(z|I) across the sampled theta-ball.
/// Reported as certified-on-grid with the observed modulus; the check has no
/// stronger finite certificate.
ConditionReport check_equicontinuity_proxy(const ChannelModel& channel, int dominant_symbol,
                                           double r2, const RealDominationSettings& settings = {});

/// A family of complexified densities q^theta(z|y) indexed by an offset in
/// the parameter ball; the adapter below maps a ChannelModel onto it and the
/// stress tests construct artificial tails directly.
struct ComplexDensityFamily {
    int symbols = 1;
    int theta_dim = 0;
    std::function<std::complex<double>(double z, int symbol,
                                       const std::vector<std::complex<double>>& theta_offset)>
        eval;
    std::function<double(double z, int symbol,
                         const std::vector<std::complex<double>>& theta_offset)>
        log_abs;

    static ComplexDensityFamily from_channel(const ChannelModel& channel);
};

/// Ball offsets used to approximate sup/inf over the complex ball: the
/// center plus +-r2 and +-i r2 along every coordinate.
std::vector<std::vector<std::complex<double>>> ball_offsets(int theta_dim, double r2);

/// Integrability checks: Condition (c)'s three integrals of the ball
/// envelopes q-breve (sup) and q-hat (inf), and Condition (d)(ii)'s
/// integral of sup |q(z|j) Log q(z|I)|. Integrated over expanding
/// truncations; tails whose increments stop decaying geometrically are
/// reported violated.
std::vector<ConditionReport> check_integrability(const ComplexDensityFamily& family, double r2,
                                                 int dominant_symbol,
                                                 const TailSettings& settings = {});

std::vector<ConditionReport> check_integrability(const ChannelModel& channel, double r2,
                                                 int dominant_symbol,
                                                 const TailSettings& settings = {});

}  // namespace entrate
