#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace entrate {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

struct QuadratureSettings {
    double rel_tol = 1e-11;
    double abs_tol = 1e-13;
    int max_intervals = 200000;
};

/// Adaptive Gauss-Kronrod (G7, K15) bisection on a finite interval.
/// Nodes are strictly interior, so integrable endpoint singularities
/// (e.g. log terms after a tangent substitution) are handled by refinement.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSettings& settings = {});

/// Integral of f over the whole real line through the substitution
/// z = center + scale * tan(u), which makes heavy (Cauchy-like) tails proper.
QuadratureResult integrate_real_line_tan(const std::function<double(double)>& f, double center,
                                         double scale, const QuadratureSettings& settings = {});

struct TailIntegralResult {
    double value = 0.0;          // accumulated integral over [-t_max, t_max]
    double t_max = 0.0;
    double last_increment = 0.0;
    double increment_ratio = 1.0;  // trailing geometric ratio of octave increments
    bool converged = false;        // increments fell below tolerance
    bool divergent = false;        // increments persist without geometric decay
    int octaves = 0;
};

struct TailSettings {
    double t0 = 8.0;
    int max_octaves = 60;
    double rel_tol = 1e-7;
    double abs_tol = 1e-9;
    double divergence_ratio = 0.8;  // trailing ratio at/above this flags non-certifiable tails
};

/// Integrates f over expanding symmetric truncations [-T, T] with T doubling
/// each octave. Certifies convergence when octave increments drop below
/// tolerance; flags tails whose increments stop decaying geometrically.
TailIntegralResult integrate_expanding(const std::function<double(double)>& f,
                                       const TailSettings& settings = {});

}  // namespace entrate
