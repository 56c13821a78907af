#include <cmath>
#include <random>

#include "bergman/num_core.hpp"
#include "doctest.h"

using namespace bergman;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("gamma on the positive axis") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
    // recurrence as an independent cross-check
    for (double x : {0.3, 1.7, 4.2, 9.9})
        CHECK(gamma_fn(x + 1.0) == doctest::Approx(x * gamma_fn(x)).epsilon(1e-13));
    CHECK(log_gamma(7.3) == doctest::Approx(std::log(gamma_fn(7.3))).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-2.5), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.0), std::domain_error);
}

TEST_CASE("beta values and exact symmetry") {
    // B(2,3) = 1! 2! / 4! = 1/12
    CHECK(beta_fn(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK(beta_fn(0.5, 0.5) == doctest::Approx(kPi).epsilon(1e-14));
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> uni(0.05, 20.0);
    for (int k = 0; k < 200; ++k) {
        const double a = uni(rng), b = uni(rng);
        CHECK(beta_fn(a, b) == beta_fn(b, a));  // bitwise, by construction
    }
    CHECK_THROWS_AS(beta_fn(-1.0, 2.0), std::domain_error);
}

TEST_CASE("principal power") {
    CHECK(principal_pow(Complex(4.0, 0.0), -3.0).real() == doctest::Approx(1.0 / 64.0));
    CHECK(principal_pow(Complex(4.0, 0.0), -3.0).imag() == doctest::Approx(0.0));
    const Complex isq = principal_pow(Complex(0.0, 1.0), 2.0);
    CHECK(isq.real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(isq.imag()) < 1e-14);
    // just above the cut the principal root of -1 is close to +i
    const Complex r = principal_pow(Complex(-1.0, 1e-12), 0.5);
    CHECK(r.imag() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(principal_pow(Complex(-2.0, 0.0), 0.5), BranchCutError);
    CHECK_THROWS_AS(principal_pow(Complex(0.0, 0.0), 2.0), BranchCutError);
    CHECK_THROWS_AS(principal_pow(Complex(1.0, std::nan("")), 2.0), std::domain_error);
    CHECK(on_branch_cut(Complex(-3.0, 0.0)));
    CHECK(on_branch_cut(Complex(0.0, 0.0)));
    CHECK(!on_branch_cut(Complex(1.0, 0.0)));
    CHECK(!on_branch_cut(Complex(-1.0, 1e-300)));
}

TEST_CASE("vector helpers") {
    const CPoint z{Complex(1.0, 2.0), Complex(-0.5, 0.25)};
    const CPoint w{Complex(0.5, -1.0), Complex(2.0, 3.0)};

    const CPoint d = sub_conj(z, w);
    CHECK(d[0] == Complex(0.5, 1.0));
    CHECK(d[1] == Complex(-2.5, 3.25));

    CHECK(bilinear_dot(z, w) == Complex(1.0, 2.0) * Complex(0.5, -1.0) +
                                    Complex(-0.5, 0.25) * Complex(2.0, 3.0));
    CHECK(dot_z_wbar(z, w) == Complex(1.0, 2.0) * Complex(0.5, 1.0) +
                                  Complex(-0.5, 0.25) * Complex(2.0, -3.0));

    const std::vector<double> v{3.0, 4.0};
    CHECK(sq_norm(v) == doctest::Approx(25.0));
    CHECK(sq_norm_head(z) == doctest::Approx(5.0));  // |1+2i|^2, last entry excluded
    CHECK(real_part(z) == std::vector<double>{1.0, -0.5});
    CHECK(imag_part(z) == std::vector<double>{2.0, 0.25});

    const CPoint short_w{Complex(1.0, 0.0)};
    CHECK_THROWS_AS(sub_conj(z, short_w), std::invalid_argument);
    CHECK_THROWS_AS(bilinear_dot(z, short_w), std::invalid_argument);
    CHECK_THROWS_AS(dot_z_wbar(z, short_w), std::invalid_argument);
}
