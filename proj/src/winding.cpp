#include "entrate/winding.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>

#include "entrate/channel.hpp"
#include "entrate/entropy.hpp"
#include "entrate/errors.hpp"

namespace entrate {

namespace {

using Complex = std::complex<double>;

// Log of Phi_z along the circle. omega stays in the right half-plane for
// r < 1/sigma, so the principal log is continuous in alpha and Im L is the
// exact continuous argument of Phi_z.
struct PhiPath {
    double s;  // 1/sigma
    double r;
    double z;

    Complex log_phi(double alpha) const {
        const Complex omega = s + r * Complex{std::cos(alpha), std::sin(alpha)};
        return std::log(s / omega) + (z - 1.0) * (z - 1.0) * omega * omega -
               (z + 1.0) * (z + 1.0) * s * s;
    }
};

struct PathPoint {
    Complex direction;  // unit vector along 1 + Phi
    double modulus;     // |1 + Phi|; huge values are capped
    double im_log;      // continuous argument of Phi
};

constexpr double kHugeExponent = 300.0;

PathPoint eval_point(const PhiPath& path, double alpha) {
    const Complex l = path.log_phi(alpha);
    PathPoint p;
    p.im_log = l.imag();
    if (l.real() > kHugeExponent) {
        // |Phi| >= e^300: 1 + Phi and Phi are indistinguishable in angle.
        p.direction = std::exp(Complex{0.0, l.imag()});
        p.modulus = std::numeric_limits<double>::infinity();
        return p;
    }
    const Complex w = 1.0 + std::exp(l);
    p.modulus = std::abs(w);
    p.direction = p.modulus > 0.0 ? w / p.modulus : Complex{1.0, 0.0};
    return p;
}

}  // namespace

WindingReport winding_probe(double sigma, double r, double z, long alpha_samples, double margin) {
    if (!(sigma > 0.0)) throw std::invalid_argument("winding_probe: sigma must be positive");
    if (!(r > 0.0) || r >= 1.0 / sigma)
        throw std::invalid_argument("winding_probe: need 0 < r < 1/sigma");
    if (alpha_samples < 8) throw std::invalid_argument("winding_probe: too few alpha samples");

    const PhiPath path{1.0 / sigma, r, z};
    WindingReport report;
    report.z = z;
    report.r = r;
    report.sigma = sigma;
    report.margin = margin;
    report.min_path_distance = std::numeric_limits<double>::infinity();

    double total_arg = 0.0;
    long points = 0;
    const double a0 = -M_PI / 2.0;
    const double a1 = 3.0 * M_PI / 2.0;

    auto note = [&](const PathPoint& p) {
        report.min_path_distance = std::min(report.min_path_distance, p.modulus);
        ++points;
    };

    // In-order walk with adaptive bisection. An increment is acceptable when
    // both the rotation of Phi (exact, via Im log) and the folded rotation of
    // 1 + Phi stay below pi/2.
    constexpr int kMaxDepth = 42;
    const std::function<void(double, double, const PathPoint&, const PathPoint&, int)> walk =
        [&](double a, double b, const PathPoint& pa, const PathPoint& pb, int depth) {
            const double dphi = std::arg(pb.direction / pa.direction);
            const bool ok = std::abs(pb.im_log - pa.im_log) <= M_PI / 2.0 &&
                            std::abs(dphi) <= M_PI / 2.0;
            if (ok || depth >= kMaxDepth) {
                total_arg += dphi;
                return;
            }
            const double mid = 0.5 * (a + b);
            const PathPoint pm = eval_point(path, mid);
            note(pm);
            walk(a, mid, pa, pm, depth + 1);
            walk(mid, b, pm, pb, depth + 1);
        };

    PathPoint prev = eval_point(path, a0);
    note(prev);
    for (long k = 1; k <= alpha_samples; ++k) {
        const double a = a0 + (a1 - a0) * static_cast<double>(k - 1) / alpha_samples;
        const double b = a0 + (a1 - a0) * static_cast<double>(k) / alpha_samples;
        const PathPoint pb = eval_point(path, b);
        note(pb);
        walk(a, b, prev, pb, 0);
        prev = pb;
    }

    report.path_samples = points;
    if (report.min_path_distance <= margin) {
        report.singular = true;
        return report;
    }
    const double turns = total_arg / (2.0 * M_PI);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 0.25) {
        report.singular = true;  // non-integer accumulation; path too close to 0
        return report;
    }
    report.winding = static_cast<int>(rounded);
    return report;
}

std::vector<NonanalyticityRow> nonanalyticity_scan(double sigma, double half_width,
                                                   int grid_points,
                                                   const QuadratureSettings& settings,
                                                   double grid_center) {
    if (!(sigma > 0.0)) throw std::invalid_argument("nonanalyticity_scan: sigma must be positive");
    if (grid_points < 8) throw std::invalid_argument("nonanalyticity_scan: too few grid points");
    if (!(half_width > 0.0) || half_width >= 1.0)
        throw std::invalid_argument("nonanalyticity_scan: half_width must lie in (0, 1)");
    const double center = grid_center > 0.0 ? grid_center : sigma;

    std::vector<double> sigma2(static_cast<size_t>(grid_points));
    std::vector<double> entropy(static_cast<size_t>(grid_points));
    for (int k = 0; k < grid_points; ++k) {
        const double t = static_cast<double>(k) / (grid_points - 1);
        sigma2[static_cast<size_t>(k)] = center * (1.0 - half_width + 2.0 * half_width * t);
        const ChannelModel mixture(ChannelKind::gaussian,
                                   {{-1.0, sigma}, {1.0, sigma2[static_cast<size_t>(k)]}});
        entropy[static_cast<size_t>(k)] = mixture_entropy({0.5, 0.5}, mixture, settings);
    }

    std::vector<NonanalyticityRow> rows(static_cast<size_t>(grid_points));
    for (int k = 0; k < grid_points; ++k) {
        rows[static_cast<size_t>(k)].sigma2 = sigma2[static_cast<size_t>(k)];
        rows[static_cast<size_t>(k)].entropy = entropy[static_cast<size_t>(k)];
        rows[static_cast<size_t>(k)].divided_differences.fill(
            std::numeric_limits<double>::quiet_NaN());
    }
    // Forward Newton divided differences f[x_k .. x_{k+o}].
    std::vector<double> current = entropy;
    for (int order = 1; order <= 6; ++order) {
        std::vector<double> next(current.size() - 1);
        for (size_t k = 0; k + 1 < current.size(); ++k)
            next[k] = (current[k + 1] - current[k]) /
                      (sigma2[k + static_cast<size_t>(order)] - sigma2[k]);
        for (size_t k = 0; k < next.size(); ++k)
            rows[k].divided_differences[static_cast<size_t>(order - 1)] = next[k];
        current = std::move(next);
    }
    return rows;
}

}  // namespace entrate
