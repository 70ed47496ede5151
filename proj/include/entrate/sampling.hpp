#pragma once

#include <cstdint>
#include <vector>

#include "entrate/channel.hpp"
#include "entrate/markov.hpp"

namespace entrate {

/// A sampled (input, output) window. Inputs are 1-based symbols.
struct Trajectory {
    std::vector<int> inputs;
    std::vector<double> outputs;
};

/// Draws y_1 from the stationary vector, subsequent inputs from the chain,
/// and each output from q(.|y_i). Deterministic given the seed.
Trajectory sample_trajectory(const MarkovModel& model, const ChannelModel& channel, int length,
                             std::uint64_t seed);

}  // namespace entrate
