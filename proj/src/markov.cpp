#include "entrate/markov.hpp"

#include <cmath>
#include <stdexcept>

namespace entrate {

namespace {

constexpr double kRowSumTolerance = 1e-12;

template <class Scalar>
void require_unit_row_sums(const Mat<Scalar>& m, const char* who) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    for (int i = 0; i < m.rows(); ++i) {
        Scalar sum{};
        for (int j = 0; j < m.cols(); ++j) sum += m(i, j);
        if (std::abs(sum - Scalar{1}) > kRowSumTolerance)
            throw std::invalid_argument(std::string(who) + ": row sums must equal 1");
    }
}

// pi P = pi  <=>  (P^T - I) pi^T = 0; replace the last equation with sum = 1.
template <class Scalar>
std::vector<Scalar> solve_stationary(const Mat<Scalar>& p) {
    const int n = p.rows();
    Mat<Scalar> a(n, n);
    std::vector<Scalar> b(static_cast<size_t>(n), Scalar{});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = p(j, i) - (i == j ? Scalar{1} : Scalar{});
    for (int j = 0; j < n; ++j) a(n - 1, j) = Scalar{1};
    b[static_cast<size_t>(n - 1)] = Scalar{1};
    return solve_dense(std::move(a), std::move(b));
}

}  // namespace

SimplexVector stationary_vector(const RealMatrix& transition) {
    require_unit_row_sums(transition, "stationary_vector");
    for (int i = 0; i < transition.rows(); ++i)
        for (int j = 0; j < transition.cols(); ++j)
            if (!(transition(i, j) > 0.0))
                throw std::invalid_argument(
                    "stationary_vector: matrix must be strictly positive");
    std::vector<double> pi = solve_stationary(transition);
    // Clean tiny negative round-off before constructing the simplex point.
    double sum = 0.0;
    for (double& v : pi) {
        if (v < 0.0 && v > -1e-14) v = 0.0;
        sum += v;
    }
    for (double& v : pi) v /= sum;
    return SimplexVector(std::move(pi));
}

std::vector<std::complex<double>> stationary_vector_complex(const ComplexMatrix& transition) {
    require_unit_row_sums(transition, "stationary_vector_complex");
    return solve_stationary(transition);
}

MarkovModel::MarkovModel(RealMatrix transition)
    : transition_(std::move(transition)),
      stationary_(SimplexVector::uniform(transition_.rows() > 0 ? transition_.rows() : 1)),
      strictly_positive_(true) {
    require_unit_row_sums(transition_, "MarkovModel");
    for (int i = 0; i < transition_.rows(); ++i)
        for (int j = 0; j < transition_.cols(); ++j) {
            if (transition_(i, j) < 0.0)
                throw std::invalid_argument("MarkovModel: negative transition probability");
            if (!(transition_(i, j) > 0.0)) strictly_positive_ = false;
        }
    std::vector<double> pi = solve_stationary(transition_);
    double sum = 0.0;
    for (double& v : pi) {
        if (v < 0.0 && v > -1e-14) v = 0.0;
        sum += v;
    }
    for (double& v : pi) v /= sum;
    stationary_ = SimplexVector(std::move(pi));
}

ComplexMarkovModel::ComplexMarkovModel(ComplexMatrix transition)
    : transition_(std::move(transition)) {
    require_unit_row_sums(transition_, "ComplexMarkovModel");
}

ComplexMarkovModel ComplexMarkovModel::from_real(const MarkovModel& model) {
    const auto& t = model.transition();
    ComplexMatrix c(t.rows(), t.cols());
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j) c(i, j) = {t(i, j), 0.0};
    return ComplexMarkovModel(std::move(c));
}

}  // namespace entrate
