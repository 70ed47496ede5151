#include "entrate/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "entrate/errors.hpp"

namespace entrate {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
// Layout: {abscissa, gauss weight (0 for Kronrod-only nodes), kronrod weight}.
constexpr double kNodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct PanelResult {
    double value;
    double error;
};

PanelResult g7k15(const std::function<double(double)>& f, double a, double b, long& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    ++evals;
    double g7 = kNodes[0][1] * f0;
    double k15 = kNodes[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNodes[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        evals += 2;
        g7 += kNodes[i][1] * fi;
        k15 += kNodes[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;
    // Standard QUADPACK-style error sharpening.
    double err = std::abs(k15 - g7);
    err = 200.0 * err * std::sqrt(err > 0.0 ? err : 0.0);
    if (err > std::abs(k15 - g7)) err = std::abs(k15 - g7) * 200.0;
    return {k15, std::max(err, std::abs(k15 - g7))};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSettings& settings) {
    QuadratureResult out;
    if (!(b > a)) {
        out.converged = true;
        return out;
    }
    struct Segment {
        double a, b, value, error;
    };
    long evals = 0;
    PanelResult whole = g7k15(f, a, b, evals);
    std::deque<Segment> work{{a, b, whole.value, whole.error}};
    double total = whole.value;
    double total_err = whole.error;
    int panels = 1;
    while (!work.empty() && panels < settings.max_intervals) {
        const double goal = std::max(settings.abs_tol, settings.rel_tol * std::abs(total));
        if (total_err <= goal) break;
        // Split the segment with the largest error estimate.
        auto worst = std::max_element(work.begin(), work.end(),
                                      [](const Segment& x, const Segment& y) {
                                          return x.error < y.error;
                                      });
        Segment seg = *worst;
        work.erase(worst);
        const double mid = 0.5 * (seg.a + seg.b);
        PanelResult left = g7k15(f, seg.a, mid, evals);
        PanelResult right = g7k15(f, mid, seg.b, evals);
        total += left.value + right.value - seg.value;
        total_err += left.error + right.error - seg.error;
        work.push_back({seg.a, mid, left.value, left.error});
        work.push_back({mid, seg.b, right.value, right.error});
        ++panels;
    }
    out.value = total;
    out.error_estimate = total_err;
    out.evaluations = evals;
    out.converged =
        total_err <= std::max(settings.abs_tol, settings.rel_tol * std::abs(total)) * 1.0001 ||
        total_err <= settings.abs_tol;
    return out;
}

QuadratureResult integrate_real_line_tan(const std::function<double(double)>& f, double center,
                                         double scale, const QuadratureSettings& settings) {
    auto g = [&](double u) {
        const double t = std::tan(u);
        const double z = center + scale * t;
        const double jac = scale * (1.0 + t * t);
        return f(z) * jac;
    };
    return integrate_adaptive(g, -M_PI / 2.0, M_PI / 2.0, settings);
}

TailIntegralResult integrate_expanding(const std::function<double(double)>& f,
                                       const TailSettings& settings) {
    TailIntegralResult out;
    QuadratureSettings qs;
    qs.rel_tol = 1e-9;
    qs.abs_tol = 1e-13;
    double t = settings.t0;
    QuadratureResult core = integrate_adaptive(f, -t, t, qs);
    out.value = core.value;
    out.t_max = t;
    std::vector<double> increments;
    for (int k = 0; k < settings.max_octaves; ++k) {
        QuadratureResult right = integrate_adaptive(f, t, 2.0 * t, qs);
        QuadratureResult left = integrate_adaptive(f, -2.0 * t, -t, qs);
        const double inc = right.value + left.value;
        t *= 2.0;
        out.value += inc;
        out.t_max = t;
        out.octaves = k + 1;
        out.last_increment = inc;
        increments.push_back(std::abs(inc));
        if (std::abs(inc) <= std::max(settings.abs_tol, settings.rel_tol * std::abs(out.value))) {
            out.converged = true;
            break;
        }
    }
    if (!out.converged && increments.size() >= 5) {
        // Trailing geometric ratio over the last few octaves.
        double ratio = 0.0;
        int used = 0;
        for (size_t k = increments.size() - 4; k < increments.size(); ++k) {
            if (increments[k - 1] > 0.0) {
                ratio += increments[k] / increments[k - 1];
                ++used;
            }
        }
        out.increment_ratio = used > 0 ? ratio / used : 1.0;
        if (out.increment_ratio >= settings.divergence_ratio) out.divergent = true;
    } else if (out.converged && increments.size() >= 2) {
        out.increment_ratio =
            increments.back() / std::max(increments[increments.size() - 2], 1e-300);
    }
    return out;
}

}  // namespace entrate
