#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "entrate/channel.hpp"
#include "entrate/markov.hpp"
#include "entrate/matrix.hpp"
#include "entrate/simplex.hpp"

namespace entrate {

/// Observation matrix Pi(z)_ij = pi_ij * q(z|j).
RealMatrix observation_matrix(const MarkovModel& model, const ChannelModel& channel, double z);
ComplexMatrix observation_matrix(const ComplexMarkovModel& model,
                                 const ComplexChannelModel& channel, double z);

/// One step of the observation-driven simplex filter, x -> f_{Pi(z)}(x).
/// The real step rescales Pi(z) by its largest entry before normalizing,
/// which is projectively exact and avoids underflow for extreme z.
SimplexVector filter_step(const SimplexVector& x, const MarkovModel& model,
                          const ChannelModel& channel, double z);
ComplexSimplexVector filter_step(const ComplexSimplexVector& x, const ComplexMarkovModel& model,
                                 const ComplexChannelModel& channel, double z);

/// Filter orbit together with the running log-likelihood. states[0] is the
/// initial condition; states[k] is the posterior after the k-th observation.
/// step_log_conditionals[k] = log p(z_k | z_1..z_{k-1}), so log_joint is the
/// log density of the whole observation window and `predictive` is the last
/// conditional density in linear scale.
struct FilterTrajectory {
    std::vector<SimplexVector> states;
    std::vector<double> step_log_conditionals;
    double log_joint = 0.0;
    double predictive = 0.0;
};

struct ComplexFilterTrajectory {
    std::vector<ComplexSimplexVector> states;
    std::vector<std::complex<double>> step_log_conditionals;  // principal-branch increments
    std::complex<double> log_joint{0.0, 0.0};
    std::complex<double> predictive{0.0, 0.0};
};

FilterTrajectory run_filter(const MarkovModel& model, const ChannelModel& channel,
                            const std::vector<double>& observations,
                            const std::optional<SimplexVector>& initial = std::nullopt);

ComplexFilterTrajectory run_filter(const ComplexMarkovModel& model,
                                   const ComplexChannelModel& channel,
                                   const std::vector<double>& observations,
                                   const ComplexSimplexVector& initial);

/// p(z0 | window) = x Pi(z0) 1 for the current filter state x.
double predictive_density(const SimplexVector& x, const MarkovModel& model,
                          const ChannelModel& channel, double z0);
std::complex<double> predictive_density(const ComplexSimplexVector& x,
                                        const ComplexMarkovModel& model,
                                        const ComplexChannelModel& channel, double z0);

/// Euclidean gap per step between two filters run on the same observations
/// from different initial conditions. Entries are (step index, |x_a - x_b|),
/// step 1 being the state after the first observation.
std::vector<std::pair<int, double>> forgetting_curve(const MarkovModel& model,
                                                     const ChannelModel& channel,
                                                     const std::vector<double>& observations,
                                                     const SimplexVector& initial_a,
                                                     const SimplexVector& initial_b);

struct LogSlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int points = 0;
};

/// Least-squares fit of log(gap) against step index over the entries with
/// gap above `floor` (gaps at the rounding floor carry no decay information).
LogSlopeFit fit_log_slope(const std::vector<std::pair<int, double>>& curve, double floor = 1e-13);

enum class BlockTag { type_one, type_two, uniform };

struct Block {
    int begin = 0;  // inclusive
    int end = 0;    // exclusive
    BlockTag tag = BlockTag::uniform;
};

/// Partition of an observation window into consecutive blocks, either of
/// uniform length n0 or by the dichotomy used for dominant channels:
/// Type I blocks are single observations outside a compact set Sigma,
/// Type II blocks start inside Sigma and carry at least n0 observations.
struct ReblockingScheme {
    std::vector<Block> blocks;

    static ReblockingScheme uniform(int window, int n0);
    static ReblockingScheme dichotomy(const std::vector<double>& observations, double sigma_bound,
                                      int n0);

    /// Throws ConfigError unless blocks are consecutive, non-overlapping and
    /// cover [0, window).
    void validate(int window) const;
};

std::vector<std::vector<double>> reblock(const std::vector<double>& observations,
                                         const ReblockingScheme& scheme);

/// Composed filter map over one block, left to right.
SimplexVector filter_block(const SimplexVector& x, const MarkovModel& model,
                           const ChannelModel& channel, const std::vector<double>& block);

struct OrbitProbe {
    std::vector<double> distances_to_simplex;  // per accepted step
    std::vector<bool> in_positive_cone;
    std::vector<int> singular_steps;  // observation indices whose step was skipped
    double max_distance = 0.0;
    int cone_violations = 0;
};

/// Runs the complexified filter and reports how far the orbit strays from the
/// real simplex and whether it stays in W~+. Normalizer singularities are
/// recorded and skipped rather than fatal.
OrbitProbe complex_orbit_probe(const ComplexMarkovModel& model,
                               const ComplexChannelModel& channel,
                               const std::vector<double>& observations,
                               const ComplexSimplexVector& initial);

}  // namespace entrate
