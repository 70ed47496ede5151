#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "entrate/markov.hpp"
#include "entrate/rng.hpp"
#include "test_helpers.hpp"

using namespace entrate;

TEST_CASE("stationary vector of symmetric chains is uniform") {
    const SimplexVector pi = stationary_vector(RealMatrix{{0.5, 0.5}, {0.5, 0.5}});
    CHECK(pi[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(pi[1] == doctest::Approx(0.5).epsilon(1e-12));

    const SimplexVector pi2 = stationary_vector(RealMatrix{{0.5, 0.5}, {0.5, 0.5}});
    CHECK(pi2[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("stationary vector solves the 2x2 chain exactly") {
    // By hand: pi1 = 0.9 pi1 + 0.2 pi2  =>  pi = (2/3, 1/3).
    const SimplexVector pi = stationary_vector(RealMatrix{{0.9, 0.1}, {0.2, 0.8}});
    CHECK(pi[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(pi[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("stationary vector rejects bad matrices") {
    CHECK_THROWS_AS(stationary_vector(RealMatrix{{0.9, 0.2}, {0.2, 0.8}}), std::invalid_argument);
    CHECK_THROWS_AS(stationary_vector(RealMatrix{{1.0, 0.0}, {0.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("stationary vector is a fixed point and matches power iteration") {
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const int l = 2 + static_cast<int>(rng.uniform() * 4.0);
        const RealMatrix p = testing::random_positive_stochastic(l, rng);
        const SimplexVector pi = stationary_vector(p);

        // pi P = pi componentwise within 1e-10.
        const std::vector<double> iterated = row_times(pi.weights(), p);
        for (int j = 0; j < l; ++j)
            CHECK(iterated[static_cast<size_t>(j)] == doctest::Approx(pi[j]).epsilon(1e-10));

        // Independent oracle: power iteration from the uniform vector.
        std::vector<double> x(static_cast<size_t>(l), 1.0 / l);
        for (int it = 0; it < 4000; ++it) x = row_times(x, p);
        for (int j = 0; j < l; ++j)
            CHECK(x[static_cast<size_t>(j)] == doctest::Approx(pi[j]).epsilon(1e-9));
    }
}

TEST_CASE("markov model caches stationary vector and positivity flag") {
    const MarkovModel model(RealMatrix{{0.9, 0.1}, {0.2, 0.8}});
    CHECK(model.strictly_positive());
    CHECK(model.stationary()[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(model.size() == 2);

    const MarkovModel boundary(RealMatrix{{1.0, 0.0}, {0.5, 0.5}});
    CHECK_FALSE(boundary.strictly_positive());
}

TEST_CASE("complex stationary vector reduces to the real one") {
    const ComplexMarkovModel cm =
        ComplexMarkovModel::from_real(MarkovModel(RealMatrix{{0.9, 0.1}, {0.2, 0.8}}));
    const auto pi = stationary_vector_complex(cm.transition());
    CHECK(pi[0].real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(pi[0].imag()) < 1e-14);
    CHECK(std::abs(pi[0] + pi[1] - 1.0) < 1e-12);
}
