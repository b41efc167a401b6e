#include "rmt/matrix.hpp"

#include <utility>

#include "rmt/errors.hpp"

namespace rmt {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw DimensionError("matrix entry count does not match its shape");
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Rational det_exact(const Matrix& m) {
    if (!m.square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    // Clear denominators row by row: det(m) = det(a) / prod(scale).
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer lcm = 1;
        for (std::size_t c = 0; c < n; ++c) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < n; ++c) {
            const mpq_class& q = m(r, c).raw();
            a[r][c] = q.get_num() * (lcm / q.get_den());
        }
        scale *= lcm;
    }

    int sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return Rational(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][k] = 0;
        }
        previous = a[k][k];
    }
    Integer det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

}  // namespace rmt
