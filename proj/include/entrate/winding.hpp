#pragma once

#include <array>
#include <vector>

#include "entrate/quadrature.hpp"

namespace entrate {

/// Winding count of Phi_z around -1 (equivalently of 1 + Phi_z around 0)
/// along the parameter circle omega = 1/sigma + r e^{i alpha},
/// alpha in [-pi/2, 3pi/2], where
///   Phi_z(1/omega) = (sigma^{-1}/omega) exp((z-1)^2 omega^2 - (z+1)^2 sigma^{-2}).
struct WindingReport {
    double z = 0.0;
    double r = 0.0;
    double sigma = 1.0;
    int winding = 0;
    long path_samples = 0;
    double min_path_distance = 0.0;  // min |1 + Phi_z| over the sampled path
    double margin = 0.0;
    bool singular = false;  // path came within `margin` of the singular point
};

/// Accumulated principal-argument increments of 1 + Phi_z with adaptive
/// refinement of the alpha grid until every increment is below pi/2. The
/// count is only reported when the path stays `margin` away from 0.
WindingReport winding_probe(double sigma, double r, double z, long alpha_samples,
                            double margin = 1e-6);

/// One grid row of the non-analyticity scan: H(Z)(sigma2) for the symmetric
/// binary Gaussian mixture with locations -1, +1 and widths (sigma, sigma2),
/// plus the forward divided differences up to order 6 (NaN where the table
/// runs off the grid).
struct NonanalyticityRow {
    double sigma2 = 0.0;
    double entropy = 0.0;
    std::array<double, 6> divided_differences{};
};

/// grid_center defaults to sigma itself (the non-analytic point); pass a
/// different center to tabulate the same entropy curve on an analytic stretch.
std::vector<NonanalyticityRow> nonanalyticity_scan(double sigma, double half_width,
                                                   int grid_points,
                                                   const QuadratureSettings& settings = {},
                                                   double grid_center = 0.0);

}  // namespace entrate
