#include "doctest.h"

#include <cmath>
#include <random>

#include "homaloidal/linalg.hpp"

using namespace homaloidal;

namespace {

QMat random_qmat(std::mt19937_64& rng, std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, 9, 4);
    return m;
}

QMat random_symmetric(std::mt19937_64& rng, std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            m(i, j) = random_rational(rng, 9, 4);
            m(j, i) = m(i, j);
        }
    return m;
}

}  // namespace

TEST_CASE("exact determinant on a known matrix") {
    QMat m(3, 3);
    m(0, 0) = 2; m(0, 1) = Rational(1, 2); m(0, 2) = -1;
    m(1, 0) = 0; m(1, 1) = 3;              m(1, 2) = Rational(1, 3);
    m(2, 0) = 1; m(2, 1) = -2;             m(2, 2) = 4;
    // cofactor expansion by hand
    Rational det = 2 * (3 * Rational(4) - Rational(1, 3) * Rational(-2)) -
                   Rational(1, 2) * (0 * Rational(4) - Rational(1, 3) * 1) +
                   Rational(-1) * (0 * Rational(-2) - Rational(3) * 1);
    CHECK(m.det() == det);
}

TEST_CASE("inverse is exact") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        QMat m = random_qmat(rng, 4);
        if (!m.is_invertible()) continue;
        CHECK(m * m.inverse() == QMat::identity(4));
        CHECK(m.inverse().det() * m.det() == 1);
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        QMat a = random_qmat(rng, 4), b = random_qmat(rng, 4);
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("leading principal minors") {
    QMat m = QMat::identity(3) * Rational(2);
    auto minors = m.leading_principal_minors();
    REQUIRE(minors.size() == 3);
    CHECK(minors[0] == 2);
    CHECK(minors[1] == 4);
    CHECK(minors[2] == 8);
}

TEST_CASE("float LU determinant matches exact") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        QMat m = random_qmat(rng, 5);
        double exact = static_cast<double>(m.det());
        CHECK(to_double(m).det() == doctest::Approx(exact).epsilon(1e-10));
    }
}

TEST_CASE("jacobi eigendecomposition reconstructs the matrix") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 2 + trial % 5;
        DMat m = to_double(random_symmetric(rng, n));
        auto eig = jacobi_eigen(m);
        REQUIRE(eig.values.size() == n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double sum = 0;
                for (std::size_t k = 0; k < n; ++k)
                    sum += eig.values[k] * eig.vectors[k][i] * eig.vectors[k][j];
                CHECK(sum == doctest::Approx(m(i, j)).epsilon(1e-9));
            }
        // eigenvalue product equals the determinant
        double prod = 1;
        for (double v : eig.values) prod *= v;
        CHECK(prod == doctest::Approx(m.det()).epsilon(1e-8));
    }
}
