#pragma once

#include <optional>
#include <span>
#include <string>

#include "bergman/geometry.hpp"
#include "bergman/num_core.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

enum class Family {
    UnweightedHalfPlane,
    HalfPlanePower,
    BergmanSelberg,
    ParaboloidTube,
    LorentzTube,
    SiegelSpace,
    BallSpace,
};

// A weighted Bergman space A^2_rho from the built-in catalogue.
struct SpaceSpec {
    Family family;
    int dim;       // n
    double param;  // v (HalfPlanePower), q (BergmanSelberg), alpha (the rest)

    static SpaceSpec unweighted_half_plane();
    static SpaceSpec half_plane_power(double v);       // v > 0
    static SpaceSpec bergman_selberg(double q);        // q > 1/2
    static SpaceSpec paraboloid_tube(int n, double alpha);  // n >= 2, alpha > -1
    static SpaceSpec lorentz_tube(int n, double alpha);     // n >= 2, alpha > -1
    static SpaceSpec siegel(int n, double alpha);           // n >= 1, alpha > -1
    static SpaceSpec ball(int n, double alpha);             // n >= 1, alpha > -1

    double alpha() const;
    double power_v() const;
    double selberg_q() const;

    // True for the five families realized as tubes R^n + iB.
    bool tube_eligible() const;
    TubeBase tube_base() const;

    bool in_domain(const CPoint& z) const;
    std::string name() const;
    std::string family_token() const;  // CLI spelling, e.g. "halfplane-power"
};

std::optional<Family> family_from_token(const std::string& token);

// Weight rho(z); depends on Im z only for tube families. Returns 0 outside
// the domain.
double rho(const SpaceSpec& space, const CPoint& z);

// Power of y in rho(iy) for the half-line families (0 for the unweighted
// half-plane); exponents in (-1, 0) mean an integrable singularity at y = 0.
double weight_exponent(const SpaceSpec& space);

// Membership of t in the open support U_I of the Laplace symbol.
bool in_support(const SpaceSpec& space, std::span<const double> t);

// Laplace symbol I(t) = int_B rho(iy) exp(-4 pi y.t) dy in closed form;
// +infinity (as a distinguished value) outside U_I. Tube families only.
double symbol_closed(const SpaceSpec& space, std::span<const double> t);

// log I(t); avoids overflow for large exponential factors.
double log_symbol_closed(const SpaceSpec& space, std::span<const double> t);

// 1 / I(t), and exactly 0 off the support (decided by the predicate, not by
// dividing by infinity).
double inv_symbol(const SpaceSpec& space, std::span<const double> t);

// I(t) by adaptive quadrature over the base (n <= 2) or Monte Carlo (n = 3,
// cone families). Off-support t yields value = +infinity, converged = true.
IntegrationResult symbol_numeric(const SpaceSpec& space, std::span<const double> t,
                                 const QuadratureConfig& cfg);

}  // namespace bergman
