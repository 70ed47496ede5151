#pragma once

#include <complex>
#include <vector>

#include "entrate/matrix.hpp"
#include "entrate/simplex.hpp"

namespace entrate {

/// Stationary vector of a strictly positive row-stochastic matrix,
/// computed by a dense linear solve of pi P = pi with the normalization
/// sum(pi) = 1 replacing one equation. Rejects non-stochastic rows and
/// matrices with a nonpositive entry.
SimplexVector stationary_vector(const RealMatrix& transition);

/// Complex variant used by the analytic-continuation machinery: the unique
/// solution of pi P = pi, sum(pi) = 1 for a complex matrix with unit row sums.
std::vector<std::complex<double>> stationary_vector_complex(const ComplexMatrix& transition);

/// Finite-state input chain: row-stochastic transition matrix with its
/// stationary vector cached at construction.
class MarkovModel {
public:
    explicit MarkovModel(RealMatrix transition);

    int size() const { return transition_.rows(); }
    const RealMatrix& transition() const { return transition_; }
    const SimplexVector& stationary() const { return stationary_; }
    bool strictly_positive() const { return strictly_positive_; }

private:
    RealMatrix transition_;
    SimplexVector stationary_;
    bool strictly_positive_;
};

/// Complexified chain: rows sum to 1 (within 1e-12 in modulus) but entries
/// may be complex. This is the domain the filter is analytically continued over.
class ComplexMarkovModel {
public:
    explicit ComplexMarkovModel(ComplexMatrix transition);

    static ComplexMarkovModel from_real(const MarkovModel& model);

    int size() const { return transition_.rows(); }
    const ComplexMatrix& transition() const { return transition_; }

private:
    ComplexMatrix transition_;
};

}  // namespace entrate
