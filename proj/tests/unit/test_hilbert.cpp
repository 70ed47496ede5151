#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "entrate/hilbert.hpp"
#include "entrate/rng.hpp"
#include "test_helpers.hpp"

using namespace entrate;
using entrate::testing::random_interior_point;
using entrate::testing::random_positive_matrix;

namespace {

// Empirical metric-comparison constants, measured once with the fixed seeds
// below and frozen as regression values.
constexpr double kDominationK = 0.35356;       // |v - w| <= K d_H(v, w) on W-circle
constexpr double kEquivalenceC1 = 2.8284;      // c1 |v - w| <= d_H(v, w) on {min w_i >= 0.05}
constexpr double kEquivalenceC2 = 18.76;       // d_H(v, w) <= c2 |v - w| on the same set

// Affine shrink of the simplex into {w : min_i w_i >= floor}.
SimplexVector floored_point(const SimplexVector& x, double floor) {
    const int l = x.size();
    std::vector<double> w(static_cast<size_t>(l));
    const double span = 1.0 - floor * l;
    for (int i = 0; i < l; ++i) w[static_cast<size_t>(i)] = floor + span * x[i];
    return SimplexVector(std::move(w));
}

ComplexSimplexVector perturb_complex(const SimplexVector& base, Rng& rng, double magnitude) {
    std::vector<std::complex<double>> w;
    w.reserve(static_cast<size_t>(base.size()));
    std::complex<double> correction{0.0, 0.0};
    for (int i = 0; i < base.size(); ++i) {
        const std::complex<double> delta{magnitude * (rng.uniform() - 0.5),
                                         magnitude * (rng.uniform() - 0.5)};
        w.push_back(base[i] + delta);
        correction += delta;
    }
    correction /= static_cast<double>(base.size());
    for (auto& v : w) v -= correction;  // keep the unit sum exact
    return ComplexSimplexVector(std::move(w));
}

}  // namespace

TEST_CASE("hilbert distance on worked examples") {
    const SimplexVector half({0.5, 0.5});
    const SimplexVector quarter({0.25, 0.75});
    CHECK(hilbert_distance(SimplexVector({0.3, 0.7}), SimplexVector({0.3, 0.7})) == 0.0);
    CHECK(hilbert_distance(half, quarter) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(hilbert_distance(SimplexVector({1.0 / 3, 1.0 / 3, 1.0 / 3}),
                           SimplexVector({0.5, 0.25, 0.25})) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(hilbert_distance(SimplexVector({1.0, 0.0}), half), std::domain_error);
}

TEST_CASE("hilbert distance satisfies the metric axioms on random triples") {
    Rng rng(11);
    for (int trial = 0; trial < 100000; ++trial) {
        const int l = 2 + (trial % 3);
        const SimplexVector a = random_interior_point(l, rng);
        const SimplexVector b = random_interior_point(l, rng);
        const SimplexVector c = random_interior_point(l, rng);
        const double ab = hilbert_distance(a, b);
        const double ba = hilbert_distance(b, a);
        const double ac = hilbert_distance(a, c);
        const double cb = hilbert_distance(c, b);
        REQUIRE(ab >= 0.0);
        REQUIRE(std::abs(ab - ba) <= 1e-12 * (1.0 + ab));
        REQUIRE(ab <= ac + cb + 1e-12);
        REQUIRE(hilbert_distance(a, a) == 0.0);
    }
}

TEST_CASE("hilbert distance depends only on coordinate ratios") {
    Rng rng(12);
    for (int trial = 0; trial < 2000; ++trial) {
        const SimplexVector v = random_interior_point(3, rng);
        const SimplexVector w = random_interior_point(3, rng);
        // Direct ratio formula: max_ij log of the ratio quotient.
        double direct = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                direct = std::max(direct, std::log((w[i] / w[j]) / (v[i] / v[j])));
        REQUIRE(hilbert_distance(v, w) == doctest::Approx(direct).epsilon(1e-14));
        // Scaling a vector and renormalizing is a no-op on the simplex, so the
        // distance must agree with the projective evaluation above regardless
        // of shared scale factors folded into the ratios.
    }
}

TEST_CASE("hilbert metric dominates the euclidean metric (frozen constant)") {
    Rng rng(13);
    double max_ratio = 0.0;
    for (int trial = 0; trial < 100000; ++trial) {
        const int l = 2 + (trial % 3);
        const SimplexVector v = random_interior_point(l, rng);
        const SimplexVector w = random_interior_point(l, rng);
        const double dh = hilbert_distance(v, w);
        if (dh <= 0.0) continue;
        max_ratio = std::max(max_ratio, euclidean_gap(v, w) / dh);
    }
    CHECK(max_ratio <= kDominationK);
    CHECK(max_ratio >= 0.25 * kDominationK);  // the frozen bound is not vacuous
}

TEST_CASE("hilbert and euclidean metrics are equivalent away from the boundary") {
    Rng rng(14);
    double min_ratio = 1e300, max_ratio = 0.0;
    for (int trial = 0; trial < 50000; ++trial) {
        const int l = 2 + (trial % 3);
        const SimplexVector v = floored_point(random_interior_point(l, rng), 0.05);
        const SimplexVector w = floored_point(random_interior_point(l, rng), 0.05);
        const double de = euclidean_gap(v, w);
        if (de <= 1e-12) continue;
        const double ratio = hilbert_distance(v, w) / de;
        min_ratio = std::min(min_ratio, ratio);
        max_ratio = std::max(max_ratio, ratio);
    }
    CHECK(min_ratio >= kEquivalenceC1);
    CHECK(max_ratio <= kEquivalenceC2);
}

TEST_CASE("complex hilbert distance on worked examples") {
    const ComplexSimplexVector real_half = ComplexSimplexVector::from_real(SimplexVector({0.5, 0.5}));
    const ComplexSimplexVector real_quarter =
        ComplexSimplexVector::from_real(SimplexVector({0.25, 0.75}));
    CHECK(complex_hilbert_distance(real_half, real_half) == 0.0);
    CHECK(complex_hilbert_distance(real_half, real_quarter) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-12));

    // Small complex perturbation against a high-precision oracle.
    using C = std::complex<double>;
    const ComplexSimplexVector v({C{0.5, 0.01}, C{0.5, -0.01}});
    const ComplexSimplexVector w = real_half;
    using CL = std::complex<long double>;
    const CL vl[2] = {{0.5L, 0.01L}, {0.5L, -0.01L}};
    long double best = 0.0L;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const CL ratio = (CL{1.0L, 0.0L}) / (vl[i] / vl[j]);  // w ratios are all 1
            const long double mag = std::abs(std::log(ratio));
            best = std::max(best, mag);
        }
    CHECK(complex_hilbert_distance(v, w) ==
          doctest::Approx(static_cast<double>(best)).epsilon(1e-13));
    CHECK_THROWS_AS(complex_hilbert_distance(ComplexSimplexVector({C{0.0, 0.4}, C{1.0, -0.4}}),
                                             real_half),
                    std::domain_error);
}

TEST_CASE("complex hilbert distance satisfies the metric axioms near the real simplex") {
    Rng rng(15);
    for (int trial = 0; trial < 20000; ++trial) {
        const int l = 2 + (trial % 3);
        const ComplexSimplexVector a =
            perturb_complex(floored_point(random_interior_point(l, rng), 0.05), rng, 0.01);
        const ComplexSimplexVector b =
            perturb_complex(floored_point(random_interior_point(l, rng), 0.05), rng, 0.01);
        const ComplexSimplexVector c =
            perturb_complex(floored_point(random_interior_point(l, rng), 0.05), rng, 0.01);
        if (!a.in_positive_cone() || !b.in_positive_cone() || !c.in_positive_cone()) continue;
        const double ab = complex_hilbert_distance(a, b);
        const double ba = complex_hilbert_distance(b, a);
        REQUIRE(std::abs(ab - ba) <= 1e-12 * (1.0 + ab));
        REQUIRE(ab <= complex_hilbert_distance(a, c) + complex_hilbert_distance(c, b) + 1e-12);
    }
}

TEST_CASE("induced map on worked examples") {
    const RealMatrix t{{2.0, 1.0}, {1.0, 2.0}};
    const SimplexVector fixed = induced_map(t, SimplexVector({0.5, 0.5}));
    CHECK(fixed[0] == doctest::Approx(0.5).epsilon(1e-14));

    const SimplexVector vertex_image = induced_map(t, SimplexVector({1.0, 0.0}));
    CHECK(vertex_image[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(vertex_image[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    const RealMatrix near_identity{{1.0, 0.0001}, {0.0001, 1.0}};
    const SimplexVector nearly = induced_map(near_identity, SimplexVector({0.9, 0.1}));
    CHECK(nearly[0] == doctest::Approx(0.9).epsilon(1e-3));

    double sum = 0.0;
    for (int i = 0; i < 2; ++i) sum += vertex_image[i];
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("birkhoff coefficient on worked examples") {
    CHECK(birkhoff_coefficient(RealMatrix{{1.0, 1.0}, {1.0, 1.0}}) == 0.0);
    CHECK(birkhoff_coefficient(RealMatrix{{2.0, 1.0}, {1.0, 2.0}}) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(birkhoff_coefficient(RealMatrix{{0.9, 0.1}, {0.2, 0.8}}) ==
          doctest::Approx(5.0 / 7.0).epsilon(1e-13));
    CHECK_THROWS_AS(birkhoff_coefficient(RealMatrix{{1.0, 0.0}, {1.0, 1.0}}), std::domain_error);
}

TEST_CASE("birkhoff coefficient equals the pairwise-row enumeration oracle") {
    Rng rng(16);
    for (int trial = 0; trial < 200; ++trial) {
        const int l = 2 + (trial % 4);
        const RealMatrix t = random_positive_matrix(l, rng);
        // Oracle: enumerate unordered row pairs and all column pairs.
        double phi = 1.0;
        for (int i = 0; i < l; ++i)
            for (int j = i; j < l; ++j)
                for (int k = 0; k < l; ++k)
                    for (int m = 0; m < l; ++m) {
                        const double q = (t(i, k) * t(j, m)) / (t(j, k) * t(i, m));
                        phi = std::min(phi, std::min(q, (t(j, k) * t(i, m)) / (t(i, k) * t(j, m))));
                    }
        const double oracle = (1.0 - std::sqrt(phi)) / (1.0 + std::sqrt(phi));
        REQUIRE(birkhoff_coefficient(t) == oracle);  // bit-identical enumeration
    }
}

TEST_CASE("contraction never exceeds the birkhoff coefficient") {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int l = 2 + (trial % 3);
        const RealMatrix t = random_positive_matrix(l, rng);
        const double tau = birkhoff_coefficient(t);
        const auto pairs = random_interior_pairs(l, 500, 1000 + trial);
        const ContractionSample sample = contraction_ratio_sample(t, pairs);
        REQUIRE(sample.max_ratio <= tau + 1e-12);
    }
}

TEST_CASE("contraction ratio sampling on worked examples") {
    const RealMatrix rank_one{{1.0, 1.0}, {1.0, 1.0}};
    const auto pairs = random_interior_pairs(2, 200, 5);
    CHECK(contraction_ratio_sample(rank_one, pairs).max_ratio == 0.0);

    const RealMatrix t{{2.0, 1.0}, {1.0, 2.0}};
    const double tau = birkhoff_coefficient(t);
    const ContractionSample random_sample =
        contraction_ratio_sample(t, random_interior_pairs(2, 10000, 6));
    CHECK(random_sample.max_ratio <= tau + 1e-12);

    const ContractionSample adversarial =
        contraction_ratio_sample(t, adversarial_pairs_2state(4001));
    CHECK(adversarial.max_ratio >= 0.33);
    CHECK(adversarial.max_ratio <= tau + 1e-12);
}

TEST_CASE("degenerate pairs are skipped with a count") {
    const RealMatrix t{{2.0, 1.0}, {1.0, 2.0}};
    std::vector<RealPair> pairs;
    pairs.emplace_back(SimplexVector({0.4, 0.6}), SimplexVector({0.4, 0.6}));
    pairs.emplace_back(SimplexVector({0.3, 0.7}), SimplexVector({0.6, 0.4}));
    const ContractionSample sample = contraction_ratio_sample(t, pairs);
    CHECK(sample.skipped == 1);
    CHECK(sample.pairs_used == 1);
}

TEST_CASE("composition iterates the contraction bound") {
    Rng rng(18);
    for (int trial = 0; trial < 20; ++trial) {
        const RealMatrix t = random_positive_matrix(3, rng);
        const double tau = birkhoff_coefficient(t);
        SimplexVector v = random_interior_point(3, rng);
        SimplexVector w = random_interior_point(3, rng);
        const double d0 = hilbert_distance(v, w);
        double bound = d0;
        for (int k = 1; k <= 6; ++k) {
            v = induced_map(t, v);
            w = induced_map(t, w);
            bound *= tau;
            REQUIRE(hilbert_distance(v, w) <= bound + 1e-12);
        }
    }
}

TEST_CASE("complex perturbations of a positive stochastic matrix still contract") {
    // Desk-scale check of the complex contraction theorem: rows re-summed to 1
    // after an imaginary bump, pairs in a Hilbert neighborhood of W-circle.
    Rng rng(19);
    const RealMatrix p{{0.6, 0.4}, {0.3, 0.7}};
    ComplexMatrix pt(2, 2);
    for (int i = 0; i < 2; ++i) {
        std::complex<double> sum{0.0, 0.0};
        for (int j = 0; j < 2; ++j) {
            pt(i, j) = std::complex<double>{p(i, j), 0.01 * (rng.uniform() - 0.5)};
            sum += pt(i, j);
        }
        for (int j = 0; j < 2; ++j) pt(i, j) /= sum;
    }
    std::vector<ComplexPair> pairs;
    int attempts = 0;
    while (static_cast<int>(pairs.size()) < 3000 && attempts < 30000) {
        ++attempts;
        const SimplexVector base_a = floored_point(random_interior_point(2, rng), 0.03);
        const SimplexVector base_b = floored_point(random_interior_point(2, rng), 0.03);
        const ComplexSimplexVector a = perturb_complex(base_a, rng, 0.02);
        const ComplexSimplexVector b = perturb_complex(base_b, rng, 0.02);
        if (!a.in_positive_cone() || !b.in_positive_cone()) continue;
        // Keep only pairs inside a modest complex Hilbert neighborhood of W-circle.
        if (complex_hilbert_distance(a, ComplexSimplexVector::from_real(base_a)) > 0.05) continue;
        if (complex_hilbert_distance(b, ComplexSimplexVector::from_real(base_b)) > 0.05) continue;
        pairs.emplace_back(a, b);
    }
    REQUIRE(pairs.size() >= 100);
    const ContractionSample sample = contraction_ratio_sample(pt, pairs);
    CHECK(sample.max_ratio < 1.0);
}
