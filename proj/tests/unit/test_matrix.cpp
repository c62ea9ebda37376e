#include "regseq/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace regseq::exact;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

// eta digit matrices
Matrix a0() { return Matrix{{r(1), r(-1, 2)}, {r(0), r(-1, 2)}}; }
Matrix a1() { return Matrix{{r(-1, 2), r(0)}, {r(-1, 2), r(1)}}; }

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

} // namespace

TEST_CASE("mat_mul products of the eta digit matrices") {
    CHECK(mat_mul(a0(), Matrix::identity(2)) == a0());
    CHECK(mat_mul(a0(), a1()) == Matrix{{r(-1, 4), r(-1, 2)}, {r(1, 4), r(-1, 2)}});
    CHECK(mat_mul(a1(), a1()) == Matrix{{r(1, 4), r(0)}, {r(-1, 4), r(1)}});
}

TEST_CASE("mat_mul dimension mismatch names both shapes") {
    const Matrix a(2, 3), b(2, 2);
    CHECK_THROWS_WITH_AS(mat_mul(a, b), doctest::Contains("2x3"), DimensionMismatch);
    try {
        mat_mul(a, b);
    } catch (const DimensionMismatch& e) {
        CHECK(e.lhs_cols == 3);
        CHECK(e.rhs_rows == 2);
        CHECK(doctest::String(e.what()) == doctest::Contains("2x2"));
    }
}

TEST_CASE("kron block structure") {
    const Matrix m = kron(Matrix{{r(1), r(0)}, {r(0), r(-1)}}, a0());
    CHECK(m.rows() == 4);
    CHECK(m.at(0, 0) == r(1));
    CHECK(m.at(0, 1) == r(-1, 2));
    CHECK(m.at(1, 1) == r(-1, 2));
    CHECK(m.at(2, 2) == r(-1));
    CHECK(m.at(2, 3) == r(1, 2));
    CHECK(m.at(3, 3) == r(1, 2));
    CHECK(m.at(0, 2) == r(0));
    CHECK(m.at(2, 0) == r(0));

    CHECK(kron(Matrix{{r(1)}}, a0()) == a0());

    const Matrix e1 = Matrix::row_vector({r(1), r(0)});
    const Matrix e1e1 = kron(e1, e1);
    CHECK(e1e1.cols() == 4);
    CHECK(e1e1.at(0, 0) == r(1));
    CHECK(e1e1.at(0, 1) == r(0));
}

TEST_CASE("associativity and the mixed-product identity") {
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        const Matrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2),
                     c = random_matrix(rng, 2, 2);
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));

        const Matrix d = random_matrix(rng, 2, 2);
        CHECK(mat_mul(kron(a, c), kron(b, d)) == kron(mat_mul(a, b), mat_mul(c, d)));
    }
}

TEST_CASE("trace, transpose, norms, rank") {
    const Matrix s = a0() + a1();
    CHECK(s.trace() == r(1));
    CHECK(s.transpose().at(0, 1) == s.at(1, 0));
    CHECK(a0().induced_one_norm() == r(1));
    CHECK(a1().induced_one_norm() == r(1));
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(s) == 1);  // rows are (1/2,-1/2) and (-1/2,1/2)
    CHECK(rank(Matrix(2, 2)) == 0);
}
