#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bergman/num_core.hpp"

namespace bergman {

enum class BaseFamily { HalfLine, Paraboloid, LorentzCone };

// Open convex base B of a tube domain T_B = R^n + iB.
struct TubeBase {
    BaseFamily family;
    int dim;

    static TubeBase half_line();              // (0, inf), n = 1
    static TubeBase paraboloid(int n);        // { y_n > |y'|^2 }, n >= 2
    static TubeBase lorentz_cone(int n);      // { y_n > |y'| },  n >= 2
    std::string name() const;
};

bool contains(const TubeBase& base, std::span<const double> y);

// Euclidean distance from an interior point to the base boundary.
double boundary_distance(const TubeBase& base, std::span<const double> y);

// A boundary point realizing boundary_distance (used for bisection checks).
std::vector<double> nearest_boundary_point(const TubeBase& base, std::span<const double> y);

// Distance from (r, h), r = |y'|, to the curve {h = r^2}: minimizes
// (rho - r)^2 + (rho^2 - h)^2 over rho >= 0 by guarded Newton on the
// critical-point cubic with bisection fallback.
double paraboloid_projection_distance(double r, double h);
double paraboloid_projection_argmin(double r, double h);

enum class ModelFamily { SiegelDomain, UnitBall };

// Non-tube model domains served through closed forms and pullbacks.
struct ModelDomain {
    ModelFamily family;
    int dim;

    static ModelDomain siegel(int n);     // { Im z_n > |z'|^2 }, n >= 1
    static ModelDomain unit_ball(int n);  // { |z| < 1 }, n >= 1
    std::string name() const;
};

bool model_contains(const ModelDomain& dom, const CPoint& z);
double model_boundary_distance(const ModelDomain& dom, const CPoint& z);

// Seeded interior sampler. Proposal densities (w.r.t. Lebesgue measure on B):
//   HalfLine:    y ~ Exp(1),                      p(y) = exp(-y)
//   Paraboloid:  y' ~ N(0, I_{n-1}), gap ~ Exp(1),
//                y_n = |y'|^2 + gap,              p(y) = phi(y') exp(-(y_n - |y'|^2))
//   LorentzCone: y_n ~ Exp(1), y' uniform in the (n-1)-ball of radius y_n,
//                p(y) = exp(-y_n) / (vol_{n-1} y_n^{n-1})
std::vector<std::vector<double>> sample_interior(const TubeBase& base, int count, std::uint64_t seed);
double sample_density(const TubeBase& base, std::span<const double> y);

// Unit-ball volume in d real dimensions, vol_d = pi^{d/2} / Gamma(d/2 + 1).
double unit_ball_volume(int d);

}  // namespace bergman
