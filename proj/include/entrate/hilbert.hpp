#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "entrate/matrix.hpp"
#include "entrate/simplex.hpp"

namespace entrate {

/// Hilbert projective metric on the open simplex:
///   d_H(w, v) = max_{i,j} log((w_i/w_j) / (v_i/v_j)).
/// Both arguments must lie in W° (all coordinates positive).
double hilbert_distance(const SimplexVector& v, const SimplexVector& w);

/// Complex Hilbert metric on W~+:
///   d~_H(v, w) = max_{i,j} | Log((w_i/w_j) / (v_i/v_j)) |
/// with the principal branch of Log. Requires every pairwise ratio of each
/// argument to have positive real part (so Log is additive along the path).
double complex_hilbert_distance(const ComplexSimplexVector& v, const ComplexSimplexVector& w);

/// Projective action of a positive matrix: f_T(w) = wT / (wT 1).
SimplexVector induced_map(const RealMatrix& t, const SimplexVector& w);
ComplexSimplexVector induced_map(const ComplexMatrix& t, const ComplexSimplexVector& w);

/// Birkhoff contraction coefficient
///   tau(T) = (1 - sqrt(phi)) / (1 + sqrt(phi)),
///   phi(T) = min_{i,j,k,l} t_ik t_jl / (t_jk t_il),
/// the exact Lipschitz constant of f_T in the Hilbert metric. Exhaustive
/// O(l^4) enumeration; fine for the l <= 16 matrices this library targets.
double birkhoff_coefficient(const RealMatrix& t);

struct ContractionSample {
    double max_ratio = 0.0;   // max observed d(f(v), f(w)) / d(v, w)
    long pairs_used = 0;
    long skipped = 0;         // degenerate (zero-distance) pairs
};

using RealPair = std::pair<SimplexVector, SimplexVector>;
using ComplexPair = std::pair<ComplexSimplexVector, ComplexSimplexVector>;

ContractionSample contraction_ratio_sample(const RealMatrix& t, const std::vector<RealPair>& pairs);
ContractionSample contraction_ratio_sample(const ComplexMatrix& t,
                                           const std::vector<ComplexPair>& pairs);

/// Random pairs in W° for contraction sampling (Dirichlet-like interior draws).
std::vector<RealPair> random_interior_pairs(int size, int count, std::uint64_t seed);

/// For l = 2 the contraction supremum is approached by infinitesimally close
/// pairs along the log-odds coordinate; this grid brackets the maximizer.
std::vector<RealPair> adversarial_pairs_2state(int grid_points, double log_odds_range = 12.0,
                                               double separation = 1e-4);

}  // namespace entrate
