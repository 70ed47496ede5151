#pragma once

#include <string>

#include "entrate/channel.hpp"
#include "entrate/markov.hpp"

namespace entrate {

struct ModelConfig {
    MarkovModel model;
    ChannelModel channel;
};

/// Loads a model file:
///   {
///     "alphabet_size": 2,
///     "transition": [0.9, 0.1, 0.2, 0.8],          // row-major
///     "channel": {
///       "kind": "gaussian" | "cauchy",
///       "params": [{"mu": -1.0, "scale": 1.0}, ...]  // one entry per symbol
///     }
///   }
/// Throws ConfigError on missing fields, shape mismatches or invalid values.
ModelConfig load_model_config(const std::string& path);
ModelConfig parse_model_config(const std::string& json_text);

}  // namespace entrate
