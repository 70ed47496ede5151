#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entrate/channel.hpp"
#include "entrate/markov.hpp"
#include "entrate/quadrature.hpp"

namespace entrate {

enum class EstimateMethod { monte_carlo, quadrature_1d };

/// Estimate of H_n(Z) in nats with its Monte Carlo standard error.
struct EntropyEstimate {
    int n = 0;
    double value = 0.0;
    double std_error = 0.0;
    long samples = 0;
    EstimateMethod method = EstimateMethod::monte_carlo;
};

/// Differential entropy -int q log q of a single channel component, by
/// adaptive quadrature (tan substitution for Cauchy tails).
double component_entropy(const ChannelModel& channel, int symbol,
                         const QuadratureSettings& settings = {});

/// H(Z0|Y0) = sum_y pi_y * (-int q(z|y) log q(z|y) dz).
double conditional_entropy_given_input(const MarkovModel& model, const ChannelModel& channel,
                                       const QuadratureSettings& settings = {});

/// Differential entropy of the output mixture sum_y w_y q(.|y); valid as the
/// exact H_n(Z) for every n when the input is i.i.d. with weights w.
double mixture_entropy(const std::vector<double>& weights, const ChannelModel& channel,
                       const QuadratureSettings& settings = {});

/// Monte Carlo estimate of H_n(Z): the empirical mean of
/// -log p(z_0 | z_{-n}^{-1}) over `samples` windows drawn from the model.
EntropyEstimate estimate_entropy_rate(const MarkovModel& model, const ChannelModel& channel,
                                      int n, long samples, std::uint64_t seed);

struct ConvergenceEntry {
    int n;
    double h;
    double se;
};

/// H_n sweep with common random numbers across n: one window of length
/// n_max + 1 per sample, every H_n read off nested suffixes of the same
/// window, so successive differences are estimated with reduced variance.
struct ConvergenceRecord {
    std::vector<ConvergenceEntry> entries;
    std::vector<double> deltas;      // deltas[k]    = H_{k+1} - H_k estimate
    std::vector<double> delta_ses;   // SE of the coupled per-sample differences
    double rho_hat = 0.0;
    double l_hat = 0.0;              // |H_{n+1} - H_n| ~ L rho^n
    double r_squared = 0.0;
    int fit_points = 0;
    std::string verdict;             // converged | inconclusive | converged-at-noise-floor
};

ConvergenceRecord convergence_scan(const MarkovModel& model, const ChannelModel& channel,
                                   int n_max, long samples, std::uint64_t seed);

}  // namespace entrate
