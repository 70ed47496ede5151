#include "entrate/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entrate/errors.hpp"

namespace entrate {

namespace {

std::string format_num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Exact |z| -> inf limit of q(z|j)/q(z|i); NaN when the ratio is unbounded
// or vanishes (Gaussian with distinct parameters).
double tail_ratio_limit(const ChannelModel& channel, int j, int i) {
    const auto& pj = channel.param(j);
    const auto& pi = channel.param(i);
    if (channel.kind() == ChannelKind::cauchy) return pj.scale / pi.scale;
    if (pj.scale == pi.scale && pj.mu == pi.mu) return 1.0;
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::certified_on_grid: return "certified-on-grid";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ConditionReport check_positivity(const MarkovModel& model) {
    ConditionReport rep;
    rep.condition = "a";
    double min_entry = std::numeric_limits<double>::infinity();
    int wi = 0, wj = 0;
    for (int i = 0; i < model.size(); ++i)
        for (int j = 0; j < model.size(); ++j)
            if (model.transition()(i, j) < min_entry) {
                min_entry = model.transition()(i, j);
                wi = i;
                wj = j;
            }
    rep.margins["min_entry"] = min_entry;
    if (min_entry > 0.0) {
        rep.verdict = Verdict::certified_on_grid;
    } else {
        rep.verdict = Verdict::violated;
        rep.witness = "pi[" + std::to_string(wi + 1) + "][" + std::to_string(wj + 1) + "] = " +
                      format_num(min_entry);
    }
    return rep;
}

ConditionReport check_channel_positivity(const ChannelModel& channel) {
    ConditionReport rep;
    rep.condition = "b";
    double min_scale = std::numeric_limits<double>::infinity();
    for (const auto& p : channel.params()) min_scale = std::min(min_scale, p.scale);
    rep.margins["min_scale"] = min_scale;
    rep.verdict = min_scale > 0.0 ? Verdict::certified_on_grid : Verdict::violated;
    if (rep.verdict == Verdict::violated) rep.witness = "scale = " + format_num(min_scale);
    return rep;
}

ConditionReport check_comparability(const ChannelModel& channel,
                                    const ComparabilitySettings& settings) {
    ConditionReport rep;
    rep.condition = "comparable";
    const int l = channel.symbols();
    double c_low = std::numeric_limits<double>::infinity();
    double c_high = 0.0;
    double witness_lo = 0.0, witness_hi = 0.0;
    bool tails_bounded = true;
    for (int j = 1; j <= l; ++j) {
        for (int i = 1; i <= l; ++i) {
            if (i == j) continue;
            for (int g = 0; g < settings.grid_points; ++g) {
                const double z = settings.z_lo + (settings.z_hi - settings.z_lo) * g /
                                                     (settings.grid_points - 1);
                const double ratio =
                    std::exp(channel.log_density(z, j) - channel.log_density(z, i));
                if (ratio > c_high) {
                    c_high = ratio;
                    witness_hi = z;
                }
                if (ratio < c_low) {
                    c_low = ratio;
                    witness_lo = z;
                }
            }
            const double limit = tail_ratio_limit(channel, j, i);
            if (std::isnan(limit)) {
                tails_bounded = false;
            } else {
                c_high = std::max(c_high, limit);
                c_low = std::min(c_low, limit);
            }
        }
    }
    if (l == 1) {
        c_low = c_high = 1.0;
    }
    rep.margins["C_prime"] = c_low;
    rep.margins["C_double_prime"] = c_high;
    rep.margins["witness_z_max"] = witness_hi;
    rep.margins["witness_z_min"] = witness_lo;
    if (tails_bounded && c_low > 0.0 && std::isfinite(c_high)) {
        rep.verdict = Verdict::certified_on_grid;
    } else {
        rep.verdict = Verdict::violated;
        rep.witness = "ratio unbounded along the tails; grid extreme " + format_num(c_high) +
                      " at z = " + format_num(witness_hi) + ", " + format_num(c_low) + " at z = " +
                      format_num(witness_lo);
    }
    return rep;
}

ConditionReport check_dominance(const ChannelModel& channel, int dominant_symbol, double epsilon,
                                const DominanceSettings& settings) {
    ConditionReport rep;
    rep.condition = "dominant";
    const int l = channel.symbols();
    if (dominant_symbol < 1 || dominant_symbol > l)
        throw std::invalid_argument("check_dominance: dominant symbol out of range");
    if (!(epsilon > 0.0)) throw std::invalid_argument("check_dominance: epsilon must be > 0");

    const auto offsets = settings.r2 > 0.0
                             ? ball_offsets(2 * l, settings.r2)
                             : std::vector<std::vector<std::complex<double>>>{
                                   std::vector<std::complex<double>>(static_cast<size_t>(2 * l))};
    const auto family = ComplexDensityFamily::from_channel(channel);

    auto worst_ratio_at = [&](double z) {
        double worst = 0.0;
        for (int j = 1; j <= l; ++j) {
            if (j == dominant_symbol) continue;
            for (const auto& off : offsets) {
                const double lr = family.log_abs(z, j, off) - family.log_abs(z, dominant_symbol, off);
                worst = std::max(worst, std::exp(lr));
            }
        }
        return worst;
    };

    // Scan |z| from the search bound inward; Z* is one grid step beyond the
    // outermost violation.
    const long steps = static_cast<long>(settings.search_bound / settings.grid_step);
    double z_star = 0.0;
    bool found_violation_at_bound = false;
    for (long k = steps; k >= 0; --k) {
        const double z = k * settings.grid_step;
        const double ratio = std::max(worst_ratio_at(z), worst_ratio_at(-z));
        if (ratio > epsilon) {
            if (k == steps) found_violation_at_bound = true;
            z_star = (k + 1) * settings.grid_step;
            break;
        }
    }
    rep.margins["Z_star"] = z_star;
    rep.margins["epsilon"] = epsilon;
    rep.margins["search_bound"] = settings.search_bound;
    if (found_violation_at_bound) {
        rep.verdict = Verdict::inconclusive;
        rep.witness = "ratio still above epsilon at |z| = " + format_num(settings.search_bound);
        return rep;
    }
    rep.verdict = Verdict::certified_on_grid;
    return rep;
}

ConditionReport check_real_domination(const ChannelModel& channel, double r2, double delta,
                                      const RealDominationSettings& settings) {
    ConditionReport rep;
    rep.condition = "real-dominated";
    const int l = channel.symbols();
    const auto family = ComplexDensityFamily::from_channel(channel);
    const auto offsets = ball_offsets(2 * l, r2);
    const std::vector<std::complex<double>> center(static_cast<size_t>(2 * l));
    double max_im_ratio = 0.0;
    double max_log_gap = 0.0;
    bool violated = false;
    std::string witness;
    long singulars = 0;
    for (int g = 0; g < settings.grid_points; ++g) {
        const double z =
            settings.z_lo + (settings.z_hi - settings.z_lo) * g / (settings.grid_points - 1);
        for (int y = 1; y <= l; ++y) {
            std::complex<double> q0;
            try {
                q0 = family.eval(z, y, center);
            } catch (const SingularEvaluation&) {
                ++singulars;
                continue;
            }
            for (const auto& off : offsets) {
                std::complex<double> q;
                try {
                    q = family.eval(z, y, off);
                } catch (const SingularEvaluation&) {
                    ++singulars;
                    continue;
                }
                const double im_ratio =
                    std::abs(q.real()) > 0.0 ? std::abs(q.imag()) / std::abs(q.real())
                                             : std::numeric_limits<double>::infinity();
                const double log_gap = std::abs(std::log(q / q0));
                max_im_ratio = std::max(max_im_ratio, im_ratio);
                max_log_gap = std::max(max_log_gap, log_gap);
                if (!violated && (im_ratio >= delta || log_gap > delta)) {
                    violated = true;
                    witness = "z = " + format_num(z) + ", symbol " + std::to_string(y) +
                              ": |Im q|/|Re q| = " + format_num(im_ratio) +
                              ", |log(q/q0)| = " + format_num(log_gap);
                }
            }
        }
    }
    rep.margins["max_im_over_re"] = max_im_ratio;
    rep.margins["max_log_gap"] = max_log_gap;
    rep.margins["delta"] = delta;
    rep.margins["r2"] = r2;
    if (singulars > 0) {
        rep.verdict = Verdict::inconclusive;
        rep.witness = std::to_string(singulars) + " singular density evaluations";
        rep.margins["singular_evaluations"] = static_cast<double>(singulars);
        return rep;
    }
    rep.verdict = violated ? Verdict::violated : Verdict::certified_on_grid;
    rep.witness = witness;
    return rep;
}

ConditionReport check_equicontinuity_proxy(const ChannelModel& channel, int dominant_symbol,
                                           double r2, const RealDominationSettings& settings) {
    ConditionReport rep;
    rep.condition = "d-i";
    const int l = channel.symbols();
    const auto family = ComplexDensityFamily::from_channel(channel);
    const auto offsets = ball_offsets(2 * l, r2);
    const std::vector<std::complex<double>> center(static_cast<size_t>(2 * l));
    double modulus = 0.0;
    double witness_z = 0.0;
    long singulars = 0;
    for (int g = 0; g < settings.grid_points; ++g) {
        const double z =
            settings.z_lo + (settings.z_hi - settings.z_lo) * g / (settings.grid_points - 1);
        for (int j = 1; j <= l; ++j) {
            try {
                const std::complex<double> g0 =
                    family.eval(z, j, center) / family.eval(z, dominant_symbol, center);
                for (const auto& off : offsets) {
                    const std::complex<double> gt =
                        family.eval(z, j, off) / family.eval(z, dominant_symbol, off);
                    const double change = std::abs(gt - g0);
                    if (change > modulus) {
                        modulus = change;
                        witness_z = z;
                    }
                }
            } catch (const SingularEvaluation&) {
                ++singulars;
            }
        }
    }
    rep.margins["modulus"] = modulus;
    rep.margins["r2"] = r2;
    rep.margins["witness_z"] = witness_z;
    if (singulars > 0) {
        rep.verdict = Verdict::inconclusive;
        rep.witness = std::to_string(singulars) + " singular density evaluations";
        return rep;
    }
    rep.verdict = Verdict::certified_on_grid;
    rep.witness = "modulus " + format_num(modulus) + " attained at z = " + format_num(witness_z);
    return rep;
}

ComplexDensityFamily ComplexDensityFamily::from_channel(const ChannelModel& channel) {
    ComplexDensityFamily family;
    family.symbols = channel.symbols();
    family.theta_dim = 2 * channel.symbols();
    const ChannelKind kind = channel.kind();
    const std::vector<ChannelParam> params = channel.params();
    auto perturbed = [kind, params](const std::vector<std::complex<double>>& off) {
        std::vector<ComplexChannelParam> cp;
        cp.reserve(params.size());
        for (size_t y = 0; y < params.size(); ++y)
            cp.push_back({params[y].mu + off[2 * y], params[y].scale + off[2 * y + 1]});
        return ComplexChannelModel(kind, std::move(cp));
    };
    family.eval = [perturbed](double z, int symbol, const std::vector<std::complex<double>>& off) {
        return perturbed(off).density(z, symbol);
    };
    family.log_abs = [perturbed](double z, int symbol,
                                 const std::vector<std::complex<double>>& off) {
        return perturbed(off).log_density(z, symbol).real();
    };
    return family;
}

std::vector<std::vector<std::complex<double>>> ball_offsets(int theta_dim, double r2) {
    std::vector<std::vector<std::complex<double>>> offsets;
    offsets.emplace_back(static_cast<size_t>(theta_dim));  // ball center
    if (!(r2 > 0.0)) return offsets;
    const std::complex<double> dirs[4] = {{r2, 0.0}, {-r2, 0.0}, {0.0, r2}, {0.0, -r2}};
    for (int k = 0; k < theta_dim; ++k) {
        for (const auto& d : dirs) {
            std::vector<std::complex<double>> off(static_cast<size_t>(theta_dim));
            off[static_cast<size_t>(k)] = d;
            offsets.push_back(std::move(off));
        }
    }
    return offsets;
}

std::vector<ConditionReport> check_integrability(const ComplexDensityFamily& family, double r2,
                                                 int dominant_symbol,
                                                 const TailSettings& settings) {
    const auto offsets = ball_offsets(family.theta_dim, r2);

    auto log_breve = [&](double z) {
        double best = -std::numeric_limits<double>::infinity();
        for (int y = 1; y <= family.symbols; ++y)
            for (const auto& off : offsets) best = std::max(best, family.log_abs(z, y, off));
        return best;
    };
    auto log_hat = [&](double z) {
        double best = std::numeric_limits<double>::infinity();
        for (int y = 1; y <= family.symbols; ++y)
            for (const auto& off : offsets) best = std::min(best, family.log_abs(z, y, off));
        return best;
    };

    struct Item {
        std::string id;
        std::function<double(double)> integrand;
    };
    std::vector<Item> items;
    items.push_back({"c-i", [&](double z) { return std::exp(log_breve(z)); }});
    items.push_back({"c-ii", [&](double z) {
                         const double lb = log_breve(z);
                         return std::exp(lb) * std::abs(log_hat(z));
                     }});
    items.push_back({"c-iii", [&](double z) {
                         const double lb = log_breve(z);
                         return std::exp(lb) * std::abs(lb);
                     }});
    items.push_back({"d-ii", [&, dominant_symbol](double z) {
                         double worst = 0.0;
                         for (int j = 1; j <= family.symbols; ++j) {
                             for (const auto& off : offsets) {
                                 const double la = family.log_abs(z, j, off);
                                 const double li = family.log_abs(z, dominant_symbol, off);
                                 double arg = 0.0;
                                 const std::complex<double> qi =
                                     family.eval(z, dominant_symbol, off);
                                 if (std::abs(qi) > 0.0) arg = std::arg(qi);
                                 const double log_mod = std::hypot(li, arg);
                                 worst = std::max(worst, std::exp(la) * log_mod);
                             }
                         }
                         return worst;
                     }});

    std::vector<ConditionReport> reports;
    for (const auto& item : items) {
        ConditionReport rep;
        rep.condition = item.id;
        TailIntegralResult r = integrate_expanding(item.integrand, settings);
        rep.margins["integral"] = r.value;
        rep.margins["t_max"] = r.t_max;
        rep.margins["last_increment"] = r.last_increment;
        rep.margins["increment_ratio"] = r.increment_ratio;
        if (r.converged) {
            rep.verdict = Verdict::certified_on_grid;
        } else if (r.divergent) {
            rep.verdict = Verdict::violated;
            rep.witness = "tail increments not decaying geometrically (ratio " +
                          format_num(r.increment_ratio) + " after " + std::to_string(r.octaves) +
                          " octaves, |z| up to " + format_num(r.t_max) + ")";
        } else {
            rep.verdict = Verdict::inconclusive;
            rep.witness = "truncation budget exhausted at |z| = " + format_num(r.t_max);
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<ConditionReport> check_integrability(const ChannelModel& channel, double r2,
                                                 int dominant_symbol,
                                                 const TailSettings& settings) {
    return check_integrability(ComplexDensityFamily::from_channel(channel), r2, dominant_symbol,
                               settings);
}

}  // namespace entrate
