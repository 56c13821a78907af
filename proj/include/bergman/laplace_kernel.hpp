#pragma once

#include "bergman/quadrature.hpp"
#include "bergman/weights.hpp"

namespace bergman {

// Normalization constants of the closed-form kernels.
double paraboloid_constant(int n, double alpha);  // C1 = 2^{n+1+2a} G(n+a+1) / (G(a+1) pi^n)
double siegel_constant(int n, double alpha);      // C2 = 2^{-2-a} C1
double ball_constant(int n, double alpha);        // C3 = 2^{1-3a-n} C2
double lorentz_constant(int n, double alpha);     // C4, see lorentz kernel below

// Constant attached to a family's closed-form kernel; the half-plane
// families carry no such constant and raise UnsupportedError.
double space_constant(const SpaceSpec& space);

// Closed-form reproducing kernel K(z, w). Families:
//   UnweightedHalfPlane  (1/pi) (i/(z-conj w))^2
//   HalfPlanePower(v)    (2^{v-1} v / pi) ((z-conj w)/i)^{-v-1}
//   BergmanSelberg(q)    2^{2q-3} Gamma(2q) ((z-conj w)/i)^{-2q}
//   ParaboloidTube       C1 ((z'-conj w')^2 - 2i(z_n-conj w_n))^{-n-a-1}
//   SiegelSpace          C2 (i(conj w_n - z_n) - 2 z'.conj w')^{-n-a-1}
//   BallSpace            C3 (1+conj w_n)^a (1+z_n)^a (1 - z.conj w)^{-n-a-1}
//   LorentzTube          C4 P(z-conj w)^{-a-n},  P(u) = u_1^2+...+u_{n-1}^2-u_n^2
Complex kernel_closed(const SpaceSpec& space, const CPoint& z, const CPoint& w);

// ParaboloidTube closed form evaluated at arbitrary n >= 1 (n = 1 uses an
// empty z' block); used by the dimensional-degeneration checks.
Complex paraboloid_kernel_formula(int n, double alpha, const CPoint& z, const CPoint& w);

struct KernelNumericResult {
    Complex value;
    double error_estimate;
    long evals;
};

// K(z, w) via the Laplace representation
//   K(z,w) = int_{R^n} exp(2 pi i t.(z - conj w)) I(t)^{-1} dt,
// integrand zero off U_I. Deterministic quadrature for n <= 2, Monte Carlo
// for n = 3 cone families. Throws ConvergenceError when the tolerance is
// not met.
KernelNumericResult kernel_numeric(const SpaceSpec& space, const CPoint& z, const CPoint& w,
                                   const QuadratureConfig& cfg);

// Test inputs with computable Laplace transforms, supported on (0, inf).
struct TestProfile {
    enum class Kind { TruncatedExponential, GaussianBump } kind;
    // TruncatedExponential: f(t) = t^power exp(-rate t) on t > 0.
    double rate = 1.0;
    double power = 0.0;
    // GaussianBump: f(t) = exp(-(t-center)^2 / (2 width^2)) on
    // (0, inf) ∩ [center - 8 width, center + 8 width]; the hard cutoff keeps
    // the L^2_I norm finite for every weight in the catalogue.
    double center = 1.0;
    double width = 0.1;

    static TestProfile truncated_exponential(double rate, double power = 0.0);
    static TestProfile gaussian_bump(double center, double width);
    std::string name() const;
};

double profile_value(const TestProfile& p, double t);

// Whether |f|^2 I is integrable near t = 0 for this space (1-D families).
bool profile_admissible(const SpaceSpec& space, const TestProfile& p);

// (L f)(z) = int_0^inf f(t) exp(2 pi i z t) dt for Im z > 0; closed form for
// the truncated exponential, adaptive quadrature for the bump.
Complex laplace_transform(const TestProfile& p, Complex z, const QuadratureConfig& cfg);

// ||f||^2 in L^2_I = int |f|^2 I(t) dt (1-D families).
IntegrationResult profile_l2i_norm_sq(const SpaceSpec& space, const TestProfile& p,
                                      const QuadratureConfig& cfg);

// ||L f||^2 in A^2_rho = int_B [ int_R |F(x+iy)|^2 dx ] rho(iy) dy by nested
// quadrature over the half-plane tube (1-D families).
IntegrationResult laplace_a2_norm_sq(const SpaceSpec& space, const TestProfile& p,
                                     const QuadratureConfig& cfg);

}  // namespace bergman
