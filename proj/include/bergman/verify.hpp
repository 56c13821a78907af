#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bergman/laplace_kernel.hpp"
#include "bergman/transforms.hpp"
#include "bergman/weights.hpp"

namespace bergman {

struct CheckReport {
    std::string check_name;
    std::string space;
    long samples = 0;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string notes;
};

// Hermitian symmetry K(z,w) = conj(K(w,z)) on random in-domain pairs.
CheckReport check_symmetry(const SpaceSpec& space, int samples, double tol, std::uint64_t seed);

// K(z,z) real and positive on random in-domain points.
CheckReport check_diagonal(const SpaceSpec& space, int samples, double tol, std::uint64_t seed);

// Midpoint log-convexity of I on random pairs in U_I.
CheckReport check_log_convexity(const SpaceSpec& space, int triples, double tol, std::uint64_t seed);

// symbol_numeric vs symbol_closed on random support points (MC for n = 3).
CheckReport check_symbol_oracle(const SpaceSpec& space, int points, const QuadratureConfig& cfg,
                                std::uint64_t seed);

// kernel_numeric vs kernel_closed on random in-domain pairs.
CheckReport check_kernel_agreement(const SpaceSpec& space, int pairs, double tol,
                                   const QuadratureConfig& cfg, std::uint64_t seed);

// Reproducing identity: quadrature of int K(.,w) conj(K(.,z)) rho dA against
// K(z,w) over the half-plane tube (1-D families).
CheckReport check_self_reproduction(const SpaceSpec& space, int pairs, double tol,
                                    const QuadratureConfig& cfg, std::uint64_t seed);

// Isometry of the Laplace transform on a test profile:
// ||L f||_{A^2_rho} = ||f||_{L^2_I}, both sides by independent quadrature.
CheckReport check_isometry(const SpaceSpec& space, const TestProfile& profile, double tol,
                           const QuadratureConfig& cfg);

// Pointwise bound |F(z)| <= (w_{2n} eps_z)^{-1/p} delta_z^{-2n/p} ||F|| with
// F = K(.,w)/sqrt(K(w,w)), p = 2, on random instances.
CheckReport check_point_eval_bound(const SpaceSpec& space, int instances, std::uint64_t seed);

// Extremal normalization: || K(.,zeta)/K(zeta,zeta) ||^2 = 1/K(zeta,zeta).
CheckReport check_extremal(const SpaceSpec& space, int points, double tol,
                           const QuadratureConfig& cfg, std::uint64_t seed);

enum class PullbackPair { SiegelFromParaboloid, BallFromSiegel, IdentityBall };

// Pullback of the closed kernels through a domain map against the target
// family's direct closed form.
CheckReport check_pullback(PullbackPair pair, int n, double alpha, int samples, double tol,
                           std::uint64_t seed);

// Kernel scaling K(lz, lw) = l^{-2(alpha+n)} K(z,w) on the Lorentz tube.
CheckReport check_lorentz_homogeneity(const SpaceSpec& space, int samples, double tol,
                                      std::uint64_t seed);

// Paraboloid closed form at n = 1 (empty z') against HalfPlanePower(alpha+1).
CheckReport check_degeneration(double alpha, int samples, double tol, std::uint64_t seed);

// Taylor-series anchor for the unweighted disc kernel.
CheckReport check_disc_series_anchor(int samples, double tol, std::uint64_t seed);

// Map plumbing: roundtrips, weight compatibility along the Siegel map,
// nonvanishing Jacobians, chain consistency of composed pullbacks.
CheckReport check_map_roundtrip(const Biholomorphism& phi, int samples, double tol,
                                std::uint64_t seed);
CheckReport check_weight_compat(int n, double alpha, int samples, double tol, std::uint64_t seed);
CheckReport check_chain_consistency(int n, double alpha, int samples, double tol,
                                    std::uint64_t seed);

// Deterministic in-domain samplers used by the checks (exposed for tests).
CPoint sample_domain_point(const SpaceSpec& space, std::mt19937_64& rng);

// Discrepancy note attached to every Bergman-Selberg report.
std::string bergman_selberg_note(double q);

struct SuiteSelection {
    bool symmetry = true, diagonal = true, log_convexity = true, symbol = true, kernel = true,
         reproduction = true, isometry = true, point_eval = true, extremal = true, pullback = true,
         properties = true, maps = true;
    static SuiteSelection none();
    static SuiteSelection parse(const std::string& csv);  // throws std::invalid_argument
};

// Default verification suite over the built-in parameter grids
// (alpha in {0, 0.5, 1.5}, v in {0.5, 1, 2.5}, q in {0.75, 1, 1.5},
// n in {1, 2}, plus Lorentz n = 3 Monte Carlo symbol checks).
std::vector<CheckReport> run_default_suite(const SuiteSelection& sel, const QuadratureConfig& cfg);

// Suite restricted to one space.
std::vector<CheckReport> run_suite_for(const SpaceSpec& space, const SuiteSelection& sel,
                                       const QuadratureConfig& cfg);

std::string reports_to_json(const std::vector<CheckReport>& reports);

}  // namespace bergman
