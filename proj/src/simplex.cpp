#include "entrate/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entrate {

namespace {
constexpr double kSumTolerance = 1e-12;
}

SimplexVector::SimplexVector(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw std::invalid_argument("SimplexVector: empty weights");
    double sum = 0.0;
    for (double v : w_) {
        if (!(v >= 0.0)) throw std::invalid_argument("SimplexVector: negative weight");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw std::invalid_argument("SimplexVector: weights do not sum to 1");
}

SimplexVector SimplexVector::uniform(int size) {
    return SimplexVector(std::vector<double>(static_cast<size_t>(size), 1.0 / size));
}

SimplexVector SimplexVector::vertex(int size, int state) {
    if (state < 1 || state > size) throw std::invalid_argument("SimplexVector: state out of range");
    std::vector<double> w(static_cast<size_t>(size), 0.0);
    w[static_cast<size_t>(state - 1)] = 1.0;
    return SimplexVector(std::move(w));
}

bool SimplexVector::interior() const {
    return std::all_of(w_.begin(), w_.end(), [](double v) { return v > 0.0; });
}

ComplexSimplexVector::ComplexSimplexVector(std::vector<std::complex<double>> weights)
    : w_(std::move(weights)) {
    if (w_.empty()) throw std::invalid_argument("ComplexSimplexVector: empty weights");
    std::complex<double> sum{0.0, 0.0};
    for (const auto& v : w_) sum += v;
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw std::invalid_argument("ComplexSimplexVector: weights do not sum to 1");
}

ComplexSimplexVector ComplexSimplexVector::from_real(const SimplexVector& v) {
    std::vector<std::complex<double>> w;
    w.reserve(static_cast<size_t>(v.size()));
    for (double x : v.weights()) w.emplace_back(x, 0.0);
    return ComplexSimplexVector(std::move(w));
}

bool ComplexSimplexVector::in_positive_cone() const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto denom = w_[static_cast<size_t>(j)];
            if (denom == std::complex<double>{0.0, 0.0}) return false;
            if (!((w_[static_cast<size_t>(i)] / denom).real() > 0.0)) return false;
        }
    }
    return true;
}

double ComplexSimplexVector::distance_to_simplex() const {
    // Project the real part onto W (sort-based simplex projection),
    // then add the imaginary displacement in quadrature.
    const int n = size();
    std::vector<double> re(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) re[static_cast<size_t>(i)] = w_[static_cast<size_t>(i)].real();
    std::vector<double> sorted = re;
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    double running = 0.0, shift = 0.0;
    int support = 0;
    for (int k = 0; k < n; ++k) {
        running += sorted[static_cast<size_t>(k)];
        const double candidate = (1.0 - running) / (k + 1);
        if (sorted[static_cast<size_t>(k)] + candidate > 0.0) {
            support = k + 1;
            shift = candidate;
        }
    }
    (void)support;
    double dist2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double proj = std::max(re[static_cast<size_t>(i)] + shift, 0.0);
        const double dr = re[static_cast<size_t>(i)] - proj;
        const double di = w_[static_cast<size_t>(i)].imag();
        dist2 += dr * dr + di * di;
    }
    return std::sqrt(dist2);
}

double euclidean_gap(const SimplexVector& a, const SimplexVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("euclidean_gap: size mismatch");
    double acc = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

}  // namespace entrate
