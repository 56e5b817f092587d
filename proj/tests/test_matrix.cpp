#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qexthh/matrix.hpp"

using namespace qexthh;

namespace {

ExactMatrix random_matrix(const Field& f, int rows, int cols, std::mt19937_64& rng,
                          int density_pct = 40) {
    ExactMatrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (rng() % 100 >= static_cast<unsigned>(density_pct)) continue;
            long long coef = static_cast<long long>(rng() % 9) - 4;
            long long e = static_cast<long long>(rng() % 5) - 2;
            m.add(r, c, f.integer(coef) * f.q_power(e));
        }
    return m;
}

} // namespace

TEST_CASE("rank of simple matrices") {
    Field F = Field::rationals_q();
    ExactMatrix z(F, 4, 4);
    CHECK(rank(z) == 0);
    CHECK(kernel_dim(z) == 4);

    CHECK(rank(ExactMatrix::identity(F, 5)) == 5);

    // two proportional rows over the function field
    ExactMatrix m(F, 2, 2);
    m.set(0, 0, F.q());
    m.set(0, 1, F.one());
    m.set(1, 0, F.q() * F.q());
    m.set(1, 1, F.q());
    CHECK(rank(m) == 1);
    CHECK(kernel_dim(m) == 1);
    CHECK(rank_fraction_free(m) == 1);
}

TEST_CASE("kernel_dim + rank = cols") {
    std::mt19937_64 rng(11);
    Field F = Field::rationals_q();
    for (int trial = 0; trial < 20; ++trial) {
        ExactMatrix m = random_matrix(F, 6, 8, rng);
        CHECK(kernel_dim(m) + rank(m) == m.cols());
    }
}

TEST_CASE("rank properties on random matrices") {
    for (auto f : {Field::rationals_q(), Field::prime_field_q(3), Field::numeric_q(2)}) {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 15; ++trial) {
            ExactMatrix m = random_matrix(f, 7, 6, rng);
            int rk = rank(m);
            CHECK(rk == rank(m.transpose()));
            CHECK(rk == rank_fraction_free(m));

            // permute rows and columns; scale one row by a nonzero scalar
            ExactMatrix p(f, 7, 6);
            for (int r = 0; r < 7; ++r)
                for (const auto& [c, v] : m.row(r)) {
                    Scalar w = r == 3 ? v * (f.q() + f.integer(2)) : v;
                    p.add((r * 3 + 1) % 7, (c * 5 + 2) % 6, w);
                }
            CHECK(rank(p) == rk);
        }
    }
}

TEST_CASE("matrix product") {
    Field F = Field::rationals_q();
    std::mt19937_64 rng(5);
    ExactMatrix m = random_matrix(F, 4, 5, rng);
    ExactMatrix im = multiply(ExactMatrix::identity(F, 4), m);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 5; ++c) CHECK(im.at(r, c) == m.at(r, c));

    ExactMatrix bad(F, 3, 3);
    CHECK_THROWS_AS(multiply(m, bad), DimensionMismatchError);

    // associativity on random triples
    ExactMatrix a = random_matrix(F, 3, 4, rng);
    ExactMatrix b = random_matrix(F, 4, 2, rng);
    ExactMatrix c = random_matrix(F, 2, 3, rng);
    ExactMatrix lhs = multiply(multiply(a, b), c);
    ExactMatrix rhs = multiply(a, multiply(b, c));
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col) CHECK(lhs.at(r, col) == rhs.at(r, col));
}

TEST_CASE("entry bookkeeping") {
    Field F = Field::rationals_q();
    ExactMatrix m(F, 2, 2);
    m.add(0, 0, F.q());
    m.add(0, 0, -F.q());
    CHECK(m.is_zero());
    m.set(1, 1, F.one());
    CHECK(m.nonzero_count() == 1);
    m.set(1, 1, F.zero());
    CHECK(m.is_zero());
    CHECK_THROWS_AS(m.at(2, 0), IndexError);
}
