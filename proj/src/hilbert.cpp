#include "entrate/hilbert.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "entrate/errors.hpp"
#include "entrate/rng.hpp"

namespace entrate {

double hilbert_distance(const SimplexVector& v, const SimplexVector& w) {
    if (v.size() != w.size()) throw std::invalid_argument("hilbert_distance: size mismatch");
    const int n = v.size();
    for (int i = 0; i < n; ++i)
        if (!(v[i] > 0.0) || !(w[i] > 0.0))
            throw std::domain_error("hilbert_distance: arguments must lie in the open simplex");
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double q = std::log((w[i] / w[j]) / (v[i] / v[j]));
            if (q > best) best = q;
        }
    }
    return best;
}

double complex_hilbert_distance(const ComplexSimplexVector& v, const ComplexSimplexVector& w) {
    if (v.size() != w.size())
        throw std::invalid_argument("complex_hilbert_distance: size mismatch");
    if (!v.in_positive_cone() || !w.in_positive_cone())
        throw std::domain_error("complex_hilbert_distance: arguments must lie in W~+");
    const int n = v.size();
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::complex<double> ratio = (w[i] / w[j]) / (v[i] / v[j]);
            const double mag = std::abs(std::log(ratio));
            if (mag > best) best = mag;
        }
    }
    return best;
}

SimplexVector induced_map(const RealMatrix& t, const SimplexVector& w) {
    if (t.rows() != w.size()) throw std::invalid_argument("induced_map: size mismatch");
    std::vector<double> y = row_times(w.weights(), t);
    double norm = 0.0;
    for (double v : y) norm += v;
    if (!(norm > 0.0)) throw std::domain_error("induced_map: wT1 must be positive");
    for (double& v : y) v /= norm;
    return SimplexVector(std::move(y));
}

ComplexSimplexVector induced_map(const ComplexMatrix& t, const ComplexSimplexVector& w) {
    if (t.rows() != w.size()) throw std::invalid_argument("induced_map: size mismatch");
    std::vector<std::complex<double>> y = row_times(w.weights(), t);
    std::complex<double> norm{0.0, 0.0};
    for (const auto& v : y) norm += v;
    if (std::abs(norm) < 1e-300)
        throw SingularEvaluation("induced_map: vanishing normalizer wT1");
    for (auto& v : y) v /= norm;
    return ComplexSimplexVector(std::move(y));
}

double birkhoff_coefficient(const RealMatrix& t) {
    const int n = t.rows();
    if (t.cols() != n || n < 1) throw std::invalid_argument("birkhoff_coefficient: square matrix");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(t(i, j) > 0.0))
                throw std::domain_error("birkhoff_coefficient: entries must be positive");
    double phi = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const double q = (t(i, k) * t(j, l)) / (t(j, k) * t(i, l));
                    if (q < phi) phi = q;
                }
    const double s = std::sqrt(phi);
    return (1.0 - s) / (1.0 + s);
}

ContractionSample contraction_ratio_sample(const RealMatrix& t,
                                           const std::vector<RealPair>& pairs) {
    ContractionSample out;
    for (const auto& [v, w] : pairs) {
        const double before = hilbert_distance(v, w);
        if (before <= 0.0) {
            ++out.skipped;
            continue;
        }
        const double after = hilbert_distance(induced_map(t, v), induced_map(t, w));
        const double ratio = after / before;
        if (ratio > out.max_ratio) out.max_ratio = ratio;
        ++out.pairs_used;
    }
    return out;
}

ContractionSample contraction_ratio_sample(const ComplexMatrix& t,
                                           const std::vector<ComplexPair>& pairs) {
    ContractionSample out;
    for (const auto& [v, w] : pairs) {
        const double before = complex_hilbert_distance(v, w);
        if (before <= 0.0) {
            ++out.skipped;
            continue;
        }
        const double after = complex_hilbert_distance(induced_map(t, v), induced_map(t, w));
        const double ratio = after / before;
        if (ratio > out.max_ratio) out.max_ratio = ratio;
        ++out.pairs_used;
    }
    return out;
}

std::vector<RealPair> random_interior_pairs(int size, int count, std::uint64_t seed) {
    Rng rng(seed);
    auto draw = [&]() {
        // Exponential draws normalized to the simplex, floored away from 0.
        std::vector<double> w(static_cast<size_t>(size));
        double sum = 0.0;
        for (double& v : w) {
            double u = rng.uniform();
            while (u <= 0.0) u = rng.uniform();
            v = -std::log(u) + 1e-9;
            sum += v;
        }
        for (double& v : w) v /= sum;
        return SimplexVector(std::move(w));
    };
    std::vector<RealPair> pairs;
    pairs.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) pairs.emplace_back(draw(), draw());
    return pairs;
}

std::vector<RealPair> adversarial_pairs_2state(int grid_points, double log_odds_range,
                                               double separation) {
    std::vector<RealPair> pairs;
    pairs.reserve(static_cast<size_t>(grid_points));
    auto point = [](double u) {
        const double p = 1.0 / (1.0 + std::exp(-u));
        return SimplexVector({p, 1.0 - p});
    };
    for (int k = 0; k < grid_points; ++k) {
        const double u = -log_odds_range +
                         2.0 * log_odds_range * static_cast<double>(k) / (grid_points - 1);
        pairs.emplace_back(point(u), point(u + separation));
    }
    return pairs;
}

}  // namespace entrate
