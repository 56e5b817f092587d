#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qexthh/resolution.hpp"

using namespace qexthh;

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

} // namespace

TEST_CASE("generator base cases and low-degree values") {
    Field F = Field::rationals_q();
    TensorElement f00 = build_generator(F, 0, 0);
    CHECK(f00.coefficient("") == F.one());

    CHECK(build_generator(F, 1, 0).coefficient("x") == F.one());
    CHECK(build_generator(F, 1, 1).coefficient("y") == F.one());

    // f^2_1 = x (x) y + q y (x) x
    TensorElement f21 = build_generator(F, 2, 1);
    CHECK(f21.terms().size() == 2);
    CHECK(f21.coefficient("xy") == F.one());
    CHECK(f21.coefficient("yx") == F.q());

    // f^2_0 = x (x) x
    TensorElement f20 = build_generator(F, 2, 0);
    CHECK(f20.terms().size() == 1);
    CHECK(f20.coefficient("xx") == F.one());

    // f^n_n = y (x) ... (x) y with coefficient 1
    for (int n = 1; n <= 6; ++n) {
        TensorElement fnn = build_generator(F, n, n);
        CHECK(fnn.terms().size() == 1);
        CHECK(fnn.coefficient(std::string(static_cast<std::size_t>(n), 'y')) == F.one());
    }

    CHECK_THROWS_AS(build_generator(F, 2, 3), IndexError);
    CHECK_THROWS_AS(build_generator(F, 2, -1), IndexError);
}

TEST_CASE("generator support and extreme coefficients") {
    Field F = Field::rationals_q();
    for (int n = 0; n <= 12; ++n)
        for (int i = 0; i <= n; ++i) {
            TensorElement g = build_generator(F, n, i);
            // support = words with exactly i letters y
            CHECK(static_cast<long long>(g.terms().size()) == binomial(n, i));
            for (const auto& [w, c] : g.terms())
                CHECK(std::count(w.begin(), w.end(), 'y') == i);
            // x^(n-i) y^i has coefficient 1; y^i x^(n-i) has coefficient q^{i(n-i)}
            std::string xs(static_cast<std::size_t>(n - i), 'x');
            std::string ys(static_cast<std::size_t>(i), 'y');
            CHECK(g.coefficient(xs + ys) == F.one());
            CHECK(g.coefficient(ys + xs) == F.q_power(static_cast<long long>(i) * (n - i)));
        }
}

TEST_CASE("delta on generators") {
    Field F = Field::rationals_q();
    // delta_1(~f^1_0) = x ~f^0_0 - ~f^0_0 x
    BimoduleElement d10 = delta_generator_image(F, 1, 0);
    CHECK(d10.coefficient(0, kX, kOne) == F.one());
    CHECK(d10.coefficient(0, kOne, kX) == -F.one());
    CHECK(d10.coordinates().size() == 2);

    // delta_2(~f^2_2) = q^0 y ~f^1_1 + ~f^1_1 y
    BimoduleElement d22 = delta_generator_image(F, 2, 2);
    CHECK(d22.coefficient(1, kY, kOne) == F.one());
    CHECK(d22.coefficient(1, kOne, kY) == F.one());
    CHECK(d22.coordinates().size() == 2);

    // image of a layer-n generator lies in P^{n-1} of k-dimension 16n
    CHECK(delta_generator_image(F, 3, 1).k_dimension() == 48);

    CHECK_THROWS_AS(delta_generator_image(F, 0, 0), IndexError);
    CHECK_THROWS_AS(delta_generator_image(F, 2, 3), IndexError);
}

TEST_CASE("delta matrices") {
    Field F = Field::rationals_q();
    ExactMatrix d1 = delta_k_matrix(F, 1);
    CHECK(d1.rows() == 16);
    CHECK(d1.cols() == 32);

    // the column of 1 . ~f^1_0 . 1 equals the coordinates of x ~f^0_0 - ~f^0_0 x
    BimoduleElement img = delta_generator_image(F, 1, 0);
    for (int row = 0; row < 16; ++row) {
        Scalar expected = F.zero();
        for (const auto& [idx, c] : img.coordinates())
            if (idx == row) expected = c;
        CHECK(d1.at(row, 0) == expected);
    }

    // exactness at degree 1: rank d1 + rank d2 = dim P^1 = 32
    CHECK(rank(d1) + rank(delta_k_matrix(F, 2)) == 32);

    // complex property via explicit product
    CHECK(multiply(d1, delta_k_matrix(F, 2)).is_zero());
}

TEST_CASE("resolution verification") {
    for (auto f : {Field::rationals_q(), Field::prime_field_q(2)}) {
        ResolutionReport r = verify_resolution(f, 8, 6);
        for (int n = 1; n <= 8; ++n) CHECK(r.complex_ok.at(n));
        for (int n = 0; n <= 6; ++n) CHECK(r.exact_ok.at(n));
        CHECK(r.all_ok());
    }
    // augmentation facts: mu is surjective with 12-dimensional kernel
    Field F = Field::rationals_q();
    ExactMatrix mu = augmentation_matrix(F);
    CHECK(rank(mu) == 4);
    CHECK(kernel_dim(mu) == 12);
    CHECK(rank(delta_k_matrix(F, 1)) == 12);
}
