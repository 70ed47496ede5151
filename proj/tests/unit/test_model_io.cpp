#include <doctest.h>

#include "entrate/csv.hpp"
#include "entrate/errors.hpp"
#include "entrate/model_io.hpp"

using namespace entrate;

namespace {
const char* kValid = R"({
  "alphabet_size": 2,
  "transition": [0.9, 0.1, 0.2, 0.8],
  "channel": {"kind": "cauchy", "params": [{"mu": -2.0, "scale": 1.0}, {"mu": 2.0, "scale": 1.0}]}
})";
}

TEST_CASE("model config round trip") {
    const ModelConfig cfg = parse_model_config(kValid);
    CHECK(cfg.model.size() == 2);
    CHECK(cfg.model.transition()(0, 0) == 0.9);
    CHECK(cfg.channel.kind() == ChannelKind::cauchy);
    CHECK(cfg.channel.param(2).mu == 2.0);
}

TEST_CASE("config errors carry context") {
    CHECK_THROWS_AS(parse_model_config("{"), ConfigError);
    CHECK_THROWS_AS(parse_model_config(R"({"alphabet_size": 2})"), ConfigError);
    CHECK_THROWS_AS(parse_model_config(R"({
      "alphabet_size": 2,
      "transition": [0.9, 0.1, 0.2],
      "channel": {"kind": "cauchy", "params": [{"mu": 0, "scale": 1}, {"mu": 0, "scale": 1}]}
    })"),
                    ConfigError);
    CHECK_THROWS_AS(parse_model_config(R"({
      "alphabet_size": 2,
      "transition": [0.9, 0.1, 0.2, 0.8],
      "channel": {"kind": "levy", "params": [{"mu": 0, "scale": 1}, {"mu": 0, "scale": 1}]}
    })"),
                    ConfigError);
    CHECK_THROWS_AS(load_model_config("/nonexistent/model.json"), ConfigError);
}

TEST_CASE("g17 formatting survives a parse round trip") {
    for (double v : {1.0 / 3.0, 0.24197072451914337, -1e-17, 12345.678901234567}) {
        CHECK(std::stod(format_g17(v)) == v);
    }
}

TEST_CASE("fnv hash is stable") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("entrate") == fnv1a64("entrate"));
    CHECK(fnv1a64("a") != fnv1a64("b"));
}
