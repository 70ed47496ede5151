#include "entrate/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entrate/errors.hpp"

namespace entrate {

ModelConfig parse_model_config(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("model file is not valid JSON: ") + e.what());
    }
    try {
        const int l = doc.at("alphabet_size").get<int>();
        if (l < 1) throw ConfigError("alphabet_size must be >= 1");
        const auto flat = doc.at("transition").get<std::vector<double>>();
        if (static_cast<int>(flat.size()) != l * l)
            throw ConfigError("transition must hold alphabet_size^2 row-major entries");
        const auto& chan = doc.at("channel");
        const ChannelKind kind = channel_kind_from_string(chan.at("kind").get<std::string>());
        std::vector<ChannelParam> params;
        for (const auto& p : chan.at("params"))
            params.push_back({p.at("mu").get<double>(), p.at("scale").get<double>()});
        if (static_cast<int>(params.size()) != l)
            throw ConfigError("channel.params must hold one entry per symbol");
        return ModelConfig{MarkovModel(RealMatrix::from_row_major(l, l, flat)),
                           ChannelModel(kind, std::move(params))};
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad model file: ") + e.what());
    }
}

ModelConfig load_model_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open model file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model_config(buffer.str());
}

}  // namespace entrate
