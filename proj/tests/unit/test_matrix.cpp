#include <random>

#include "doctest.h"
#include "rmt/errors.hpp"
#include "rmt/matrix.hpp"
#include "rmt_oracle/oracles.hpp"

using rmt::Matrix;
using rmt::Rational;

namespace {

Matrix random_matrix(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(entry(rng), den(rng));
    }
    return m;
}

}  // namespace

TEST_CASE("det_exact small cases") {
    CHECK(rmt::det_exact(Matrix(0, 0)) == Rational(1));
    CHECK(rmt::det_exact(Matrix::identity(3)) == Rational(1));
    CHECK(rmt::det_exact(Matrix(2, 2, {1, 2, 3, 4})) == Rational(-2));
    CHECK(rmt::det_exact(Matrix(2, 2, {0, 1, 1, 0})) == Rational(-1));
    CHECK(rmt::det_exact(Matrix(2, 2, {1, 2, 2, 4})) == Rational(0));
    CHECK_THROWS_AS(rmt::det_exact(Matrix(2, 3)), rmt::DimensionError);
    CHECK_THROWS_AS(Matrix(2, 2, {1, 2, 3}), rmt::DimensionError);
}

TEST_CASE("det_exact agrees with cofactor expansion") {
    std::mt19937 rng(5);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            const Matrix m = random_matrix(n, rng);
            CHECK(rmt::det_exact(m) == rmt::oracle::det_cofactor(m));
        }
    }
}

TEST_CASE("det_exact is alternating") {
    std::mt19937 rng(9);
    for (int rep = 0; rep < 20; ++rep) {
        Matrix m = random_matrix(4, rng);
        const Rational before = rmt::det_exact(m);
        const std::size_t a = static_cast<std::size_t>(rep % 4);
        m.swap_rows(a, (a + 1 + static_cast<std::size_t>(rep % 3)) % 4);
        CHECK(rmt::det_exact(m) == -before);
    }
}
