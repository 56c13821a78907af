#include <cmath>
#include <functional>
#include <random>

#include "bergman/laplace_kernel.hpp"
#include "bergman/verify.hpp"
#include "doctest.h"

using namespace bergman;

namespace {
constexpr double kPi = 3.14159265358979323846;

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int k = 1; k < n; ++k) s += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}
}  // namespace

TEST_CASE("kernel normalization constants") {
    CHECK(paraboloid_constant(2, 0.0) == doctest::Approx(16.0 / (kPi * kPi)).epsilon(1e-14));
    CHECK(lorentz_constant(2, 0.0) == doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-13));
    CHECK(ball_constant(1, 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
    CHECK(siegel_constant(1, 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
    // half-plane degeneration of the cone constants:
    // C1(1, a) 2^{-a-2} = 2^a (a+1) / pi = C2(1, a)
    for (double a : {0.0, 0.5, 1.5, 3.0}) {
        const double hp = std::pow(2.0, a) * (a + 1.0) / kPi;
        CHECK(paraboloid_constant(1, a) * std::pow(2.0, -a - 2.0) ==
              doctest::Approx(hp).epsilon(1e-13));
        CHECK(siegel_constant(1, a) == doctest::Approx(hp).epsilon(1e-13));
    }
    CHECK_THROWS_AS(space_constant(SpaceSpec::unweighted_half_plane()), UnsupportedError);
}

TEST_CASE("closed kernels: anchors") {
    const auto uh = SpaceSpec::unweighted_half_plane();
    const CPoint i1{Complex(0.0, 1.0)};
    CHECK(kernel_closed(uh, i1, i1).real() == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-14));
    CHECK(kernel_closed(uh, i1, i1).imag() == doctest::Approx(0.0));

    // v = 1 power weight is the unweighted space
    const auto hp1 = SpaceSpec::half_plane_power(1.0);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const CPoint z = sample_domain_point(uh, rng), w = sample_domain_point(uh, rng);
        const Complex a = kernel_closed(uh, z, w), b = kernel_closed(hp1, z, w);
        CHECK(std::abs(a - b) <= 1e-14 * std::abs(a));
    }

    // the tempered-kernel constant matches the classical one exactly at q = 3/2
    CHECK(std::pow(2.0, 2.0 * 1.5 - 3.0) * gamma_fn(3.0) == doctest::Approx(gamma_fn(3.0)));

    const auto pt = SpaceSpec::paraboloid_tube(2, 0.0);
    const CPoint zi{Complex(0.0, 0.0), Complex(0.0, 1.0)};
    CHECK(kernel_closed(pt, zi, zi).real() ==
          doctest::Approx(1.0 / (4.0 * kPi * kPi)).epsilon(1e-13));

    const auto ball = SpaceSpec::ball(1, 0.0);
    const CPoint c0{Complex(0.0, 0.0)};
    CHECK(kernel_closed(ball, c0, c0).real() == doctest::Approx(1.0 / kPi).epsilon(1e-14));

    // domain and shape validation
    CHECK_THROWS_AS(kernel_closed(uh, CPoint{Complex(0.0, -1.0)}, i1), std::domain_error);
    CHECK_THROWS_AS(kernel_closed(pt, zi, CPoint{Complex(0.0, 1.0)}), std::invalid_argument);
}

TEST_CASE("closed kernels: symmetry, positivity, scaling") {
    std::mt19937_64 rng(21);
    const std::vector<SpaceSpec> all{
        SpaceSpec::unweighted_half_plane(), SpaceSpec::half_plane_power(2.5),
        SpaceSpec::bergman_selberg(0.75),   SpaceSpec::paraboloid_tube(2, 1.5),
        SpaceSpec::lorentz_tube(2, 0.5),    SpaceSpec::siegel(2, 1.0),
        SpaceSpec::ball(2, 0.5)};
    for (const auto& sp : all) {
        for (int k = 0; k < 15; ++k) {
            const CPoint z = sample_domain_point(sp, rng), w = sample_domain_point(sp, rng);
            const Complex kzw = kernel_closed(sp, z, w);
            const Complex kwz = kernel_closed(sp, w, z);
            CHECK(std::abs(kzw - std::conj(kwz)) <= 1e-12 * std::abs(kzw));
            const Complex kzz = kernel_closed(sp, z, z);
            CHECK(kzz.real() > 0.0);
            CHECK(std::abs(kzz.imag()) <= 1e-12 * kzz.real());
        }
    }

    // Lorentz kernel homogeneity: K(s z, s w) = s^{-2(alpha+n)} K(z, w)
    const auto lt = SpaceSpec::lorentz_tube(2, 1.0);
    for (int k = 0; k < 10; ++k) {
        const CPoint z = sample_domain_point(lt, rng), w = sample_domain_point(lt, rng);
        for (double s : {0.5, 2.0, 3.7}) {
            CPoint zs = z, ws = w;
            for (auto& c : zs) c *= s;
            for (auto& c : ws) c *= s;
            const Complex lhs = kernel_closed(lt, zs, ws);
            const Complex rhs = std::pow(s, -2.0 * (1.0 + 2.0)) * kernel_closed(lt, z, w);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
        }
    }

    // one-dimensional degeneration of the paraboloid formula
    const auto hp = SpaceSpec::half_plane_power(1.5);
    for (int k = 0; k < 10; ++k) {
        const CPoint z = sample_domain_point(hp, rng), w = sample_domain_point(hp, rng);
        const Complex lhs = paraboloid_kernel_formula(1, 0.5, z, w);
        const Complex rhs = kernel_closed(hp, z, w);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    }
}

TEST_CASE("numeric kernels agree with closed forms") {
    QuadratureConfig cfg;
    auto rel = [&](const SpaceSpec& sp, const CPoint& z, const CPoint& w) {
        const Complex c = kernel_closed(sp, z, w);
        const auto r = kernel_numeric(sp, z, w, cfg);
        return std::abs(r.value - c) / std::abs(c);
    };
    CHECK(rel(SpaceSpec::unweighted_half_plane(), {Complex(0.0, 1.0)}, {Complex(0.0, 1.0)}) <
          1e-10);
    CHECK(rel(SpaceSpec::unweighted_half_plane(), {Complex(0.8, 0.4)}, {Complex(-0.3, 1.5)}) <
          1e-9);
    CHECK(rel(SpaceSpec::half_plane_power(0.5), {Complex(0.2, 0.9)}, {Complex(-0.1, 0.6)}) < 1e-9);
    CHECK(rel(SpaceSpec::bergman_selberg(1.2), {Complex(-0.5, 1.1)}, {Complex(0.4, 0.8)}) < 1e-9);
    CHECK(rel(SpaceSpec::paraboloid_tube(2, 0.0), {Complex(0.1, 0.2), Complex(0.3, 1.0)},
              {Complex(-0.2, 0.1), Complex(0.0, 0.9)}) < 1e-7);
    CHECK(rel(SpaceSpec::lorentz_tube(2, 1.0), {Complex(0.2, 0.1), Complex(0.0, 1.0)},
              {Complex(-0.1, -0.2), Complex(0.3, 1.2)}) < 1e-7);

    // n = 3 Monte Carlo within statistical error
    QuadratureConfig mc = cfg;
    mc.mc_samples = 300'000;
    mc.seed = 9;
    const auto lt3 = SpaceSpec::lorentz_tube(3, 0.0);
    const CPoint z3{Complex(0.1, 0.1), Complex(0.0, -0.1), Complex(0.0, 1.2)};
    const CPoint w3{Complex(0.0, -0.1), Complex(0.2, 0.2), Complex(-0.1, 1.0)};
    const Complex c3 = kernel_closed(lt3, z3, w3);
    const auto r3 = kernel_numeric(lt3, z3, w3, mc);
    CHECK(std::abs(r3.value - c3) < 4.0 * r3.error_estimate);

    const auto pt3 = SpaceSpec::paraboloid_tube(3, 0.5);
    const CPoint zp{Complex(0.1, 0.0), Complex(-0.2, 0.1), Complex(0.0, 0.8)};
    const CPoint wp{Complex(0.0, 0.1), Complex(0.1, -0.1), Complex(0.2, 0.7)};
    const Complex cp = kernel_closed(pt3, zp, wp);
    const auto rp = kernel_numeric(pt3, zp, wp, mc);
    CHECK(std::abs(rp.value - cp) < 4.0 * rp.error_estimate);

    // no Laplace route for the model domains or n >= 4
    CHECK_THROWS_AS(kernel_numeric(SpaceSpec::ball(1, 0.0), {Complex(0.0, 0.0)},
                                   {Complex(0.0, 0.0)}, cfg),
                    UnsupportedError);
    CHECK_THROWS_AS(kernel_numeric(SpaceSpec::siegel(1, 0.0), {Complex(0.0, 1.0)},
                                   {Complex(0.0, 1.0)}, cfg),
                    UnsupportedError);
}

TEST_CASE("test profiles and the Laplace transform") {
    QuadratureConfig cfg;
    const auto te = TestProfile::truncated_exponential(1.0);
    CHECK(profile_value(te, 2.0) == doctest::Approx(std::exp(-2.0)));
    CHECK(profile_value(te, -1.0) == 0.0);

    // (L f)(i) = int_0^inf e^{-t} e^{-2 pi t} dt = 1/(1 + 2 pi)
    const Complex li = laplace_transform(te, Complex(0.0, 1.0), cfg);
    CHECK(li.real() == doctest::Approx(1.0 / (1.0 + 2.0 * kPi)).epsilon(1e-13));
    CHECK(std::abs(li.imag()) < 1e-15);

    // closed form versus Simpson for a powered profile at a generic point
    const auto te2 = TestProfile::truncated_exponential(1.3, 2.0);
    const Complex z(0.3, 0.8);
    const Complex closed = laplace_transform(te2, z, cfg);
    const double re = simpson(
        [&](double t) {
            return profile_value(te2, t) * std::exp(-2.0 * kPi * 0.8 * t) *
                   std::cos(2.0 * kPi * 0.3 * t);
        },
        0.0, 60.0, 200000);
    const double im = simpson(
        [&](double t) {
            return profile_value(te2, t) * std::exp(-2.0 * kPi * 0.8 * t) *
                   std::sin(2.0 * kPi * 0.3 * t);
        },
        0.0, 60.0, 200000);
    CHECK(closed.real() == doctest::Approx(re).epsilon(1e-9));
    CHECK(closed.imag() == doctest::Approx(im).epsilon(1e-9));

    const auto gb = TestProfile::gaussian_bump(1.0, 0.1);
    CHECK(profile_value(gb, 1.0) == doctest::Approx(1.0));
    CHECK(profile_value(gb, 2.0) == 0.0);  // beyond the 8-sigma cutoff
    const Complex gz = laplace_transform(gb, Complex(0.2, 0.5), cfg);
    const double gre = simpson(
        [&](double t) {
            return profile_value(gb, t) * std::exp(-2.0 * kPi * 0.5 * t) *
                   std::cos(2.0 * kPi * 0.2 * t);
        },
        0.1, 1.9, 40000);
    CHECK(gz.real() == doctest::Approx(gre).epsilon(1e-9));

    CHECK_THROWS_AS(laplace_transform(te, Complex(0.0, -1.0), cfg), std::domain_error);
}

TEST_CASE("profile admissibility by weight and tail") {
    const auto uh = SpaceSpec::unweighted_half_plane();
    CHECK(!profile_admissible(uh, TestProfile::truncated_exponential(1.0, 0.0)));
    CHECK(profile_admissible(uh, TestProfile::truncated_exponential(1.0, 1.0)));
    const auto hp2 = SpaceSpec::half_plane_power(2.0);
    CHECK(!profile_admissible(hp2, TestProfile::truncated_exponential(1.0, 0.0)));
    CHECK(profile_admissible(hp2, TestProfile::truncated_exponential(1.0, 2.0)));
    // bump clear of the origin is admissible everywhere; one touching the
    // origin depends on the symbol's pole order
    CHECK(profile_admissible(hp2, TestProfile::gaussian_bump(1.0, 0.05)));
    CHECK(!profile_admissible(uh, TestProfile::gaussian_bump(0.5, 0.1)));
    CHECK(profile_admissible(SpaceSpec::half_plane_power(0.5),
                             TestProfile::gaussian_bump(0.5, 0.1)));
}

TEST_CASE("Laplace-transform isometry on frozen profiles") {
    QuadratureConfig cfg;
    // ||t e^{-t}||^2 in L^2_I over the unweighted half-plane: 1/(16 pi)
    const auto uh = SpaceSpec::unweighted_half_plane();
    const auto f1 = TestProfile::truncated_exponential(1.0, 1.0);
    const auto l2 = profile_l2i_norm_sq(uh, f1, cfg);
    CHECK(l2.value.real() == doctest::Approx(1.0 / (16.0 * kPi)).epsilon(1e-10));
    const auto a2 = laplace_a2_norm_sq(uh, f1, cfg);
    CHECK(a2.value.real() == doctest::Approx(1.0 / (16.0 * kPi)).epsilon(1e-7));

    // ||t^2 e^{-t}||^2 against the v = 2 power weight: 1/(64 pi^2)
    const auto hp2 = SpaceSpec::half_plane_power(2.0);
    const auto f2 = TestProfile::truncated_exponential(1.0, 2.0);
    CHECK(profile_l2i_norm_sq(hp2, f2, cfg).value.real() ==
          doctest::Approx(1.0 / (64.0 * kPi * kPi)).epsilon(1e-10));
    CHECK(laplace_a2_norm_sq(hp2, f2, cfg).value.real() ==
          doctest::Approx(1.0 / (64.0 * kPi * kPi)).epsilon(1e-7));
}
