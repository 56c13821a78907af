#pragma once

#include <functional>
#include <string>

#include "bergman/geometry.hpp"
#include "bergman/laplace_kernel.hpp"
#include "bergman/weights.hpp"

namespace bergman {

// Domain tag for map endpoints: either a tube over a base or a model domain.
struct DomainDesc {
    enum class Kind { Tube, Model } kind;
    TubeBase tube{BaseFamily::HalfLine, 1};
    ModelDomain model{ModelFamily::UnitBall, 1};

    static DomainDesc tube_over(const TubeBase& b);
    static DomainDesc model_of(const ModelDomain& m);
    bool contains_point(const CPoint& z) const;
    std::string name() const;
};

// Holomorphic change of variables with tracked Jacobian determinants.
// jac_det_inverse is evaluated by the chain rule, 1 / DPhi(Phi^{-1}(w)).
struct Biholomorphism {
    std::string name;
    DomainDesc source, target;
    std::function<CPoint(const CPoint&)> forward;
    std::function<CPoint(const CPoint&)> inverse;
    std::function<Complex(const CPoint&)> jac_det;          // DPhi(z), z in source
    std::function<Complex(const CPoint&)> jac_det_inverse;  // DPhi^{-1}(w), w in target
};

// Siegel domain { Im z_n > |z'|^2 } -> paraboloid tube, Phi(z) = (sqrt2 z', z_n - i z'.z'),
// constant Jacobian 2^{(n-1)/2}.
Biholomorphism phi_siegel_to_paraboloid_tube(int n);

// Cayley map unit ball -> Siegel domain,
// Phi(z) = (2 z'/(z_n+1), 4i (1-z_n)/(1+z_n)), DPhi = -i 2^{n+2} (1+z_n)^{-(n+1)}.
// Throws std::domain_error at the pole z_n = -1.
Biholomorphism cayley_ball_to_siegel(int n);

Biholomorphism identity_map(const DomainDesc& dom);

// second o first; Jacobian by the chain rule.
Biholomorphism compose(const Biholomorphism& second, const Biholomorphism& first);

// Kernel pulled back through phi:
//   K_pull(z, zeta) = DPhi(z) K_target(Phi z, Phi zeta) conj(DPhi(zeta)).
// Weight compatibility rho_src = rho_tgt o Phi is the caller's contract;
// it holds exactly for the built-in Siegel/paraboloid pair.
Complex pullback_kernel(const Biholomorphism& phi, const SpaceSpec& target_space,
                        const CPoint& z, const CPoint& zeta);

}  // namespace bergman
