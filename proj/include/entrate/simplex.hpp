#pragma once

#include <complex>
#include <vector>

namespace entrate {

/// A point of the standard probability simplex W: nonnegative weights
/// summing to 1 (within 1e-12). Interior membership (all weights > 0)
/// identifies points of W°.
class SimplexVector {
public:
    explicit SimplexVector(std::vector<double> weights);

    static SimplexVector uniform(int size);
    /// Vertex e_y for the 1-based state y.
    static SimplexVector vertex(int size, int state);

    int size() const { return static_cast<int>(w_.size()); }
    double operator[](int i) const { return w_[static_cast<size_t>(i)]; }
    const std::vector<double>& weights() const { return w_; }

    bool interior() const;

private:
    std::vector<double> w_;
};

/// A point of the complexified simplex W~ (complex weights summing to 1).
/// Membership in W~+ requires every pairwise ratio w_i/w_j to have positive
/// real part, which is the domain of the complex Hilbert metric.
class ComplexSimplexVector {
public:
    explicit ComplexSimplexVector(std::vector<std::complex<double>> weights);

    static ComplexSimplexVector from_real(const SimplexVector& v);

    int size() const { return static_cast<int>(w_.size()); }
    std::complex<double> operator[](int i) const { return w_[static_cast<size_t>(i)]; }
    const std::vector<std::complex<double>>& weights() const { return w_; }

    bool in_positive_cone() const;

    /// Euclidean distance from this point to the real simplex W
    /// (projection of the real part onto W plus the imaginary part).
    double distance_to_simplex() const;

private:
    std::vector<std::complex<double>> w_;
};

double euclidean_gap(const SimplexVector& a, const SimplexVector& b);

}  // namespace entrate
