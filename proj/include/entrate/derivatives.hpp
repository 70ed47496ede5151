#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entrate/channel.hpp"
#include "entrate/markov.hpp"

namespace entrate {

/// One coordinate of the joint parameter vector (transition entries subject
/// to unit row sums, channel locations and scales). A transition direction
/// adds h to entry (row, col) and subtracts h from (row, compensating_col),
/// keeping the row inside the complexified stochastic family.
struct ParameterDirection {
    enum class Kind { transition, channel_mu, channel_scale };
    Kind kind = Kind::channel_mu;
    int row = 0, col = 0, compensating_col = 0;  // transition (0-based)
    int symbol = 1;                              // channel (1-based)

    std::string name() const;

    static ParameterDirection transition_entry(int row, int col, int compensating_col);
    static ParameterDirection channel_mu(int symbol);
    static ParameterDirection channel_scale(int symbol);
};

/// Every independent direction: transition entries (i, j), j compensated on
/// the last column, plus mu and scale of every channel component.
std::vector<ParameterDirection> all_parameter_directions(const MarkovModel& model,
                                                         const ChannelModel& channel);

/// Complex-step and central-difference derivatives of the importance-weighted
/// H_n estimator, with the standard errors of the per-sample contributions and
/// of their coupled difference.
struct DerivativeEstimate {
    ParameterDirection direction;
    double complex_step = 0.0;
    double central_difference = 0.0;
    double h_cs = 0.0;
    double h_fd = 0.0;
    double gap = 0.0;  // complex_step - central_difference (mean over samples)
    double se_cs = 0.0;
    double se_fd = 0.0;
    double se_gap = 0.0;
};

/// Derivatives of H_n(Z) with respect to the selected directions.
///
/// All samples are drawn once at the real parameter point; the estimator
///   H_n(theta) = -(1/N) sum_k w_k(theta) log p^theta(z_0 | window_k),
///   w_k = p^theta(window_k, z_0) / p^theta0(window_k, z_0),
/// is then an analytic function of theta for the fixed samples, so the
/// complex step Im/h is legitimate, and the central difference reuses the
/// same trajectories (common random numbers).
std::vector<DerivativeEstimate> derivative_scan(const MarkovModel& model,
                                                const ChannelModel& channel,
                                                const std::vector<ParameterDirection>& directions,
                                                int n, long samples, double h_cs, double h_fd,
                                                std::uint64_t seed);

}  // namespace entrate
