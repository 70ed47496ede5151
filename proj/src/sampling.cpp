#include "entrate/sampling.hpp"

#include <stdexcept>

#include "entrate/rng.hpp"

namespace entrate {

namespace {

int step_state(Rng& rng, const RealMatrix& transition, int current) {
    const int l = transition.cols();
    const double u = rng.uniform();
    double acc = 0.0;
    for (int j = 0; j < l - 1; ++j) {
        acc += transition(current, j);
        if (u < acc) return j;
    }
    return l - 1;
}

double draw_output(Rng& rng, const ChannelModel& channel, int symbol) {
    const auto& p = channel.param(symbol);
    if (channel.kind() == ChannelKind::gaussian) return p.mu + p.scale * rng.normal();
    return p.mu + p.scale * rng.cauchy();
}

}  // namespace

Trajectory sample_trajectory(const MarkovModel& model, const ChannelModel& channel, int length,
                             std::uint64_t seed) {
    if (length < 1) throw std::invalid_argument("sample_trajectory: length must be >= 1");
    if (model.size() != channel.symbols())
        throw std::invalid_argument("sample_trajectory: model/channel size mismatch");
    Rng rng(seed);
    Trajectory out;
    out.inputs.reserve(static_cast<size_t>(length));
    out.outputs.reserve(static_cast<size_t>(length));
    int state = rng.categorical(model.stationary().weights());
    for (int i = 0; i < length; ++i) {
        if (i > 0) state = step_state(rng, model.transition(), state);
        out.inputs.push_back(state + 1);
        out.outputs.push_back(draw_output(rng, channel, state + 1));
    }
    return out;
}

}  // namespace entrate
