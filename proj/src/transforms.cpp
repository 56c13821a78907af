#include "bergman/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

namespace {
bool same_domain(const DomainDesc& a, const DomainDesc& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == DomainDesc::Kind::Tube)
        return a.tube.family == b.tube.family && a.tube.dim == b.tube.dim;
    return a.model.family == b.model.family && a.model.dim == b.model.dim;
}
}  // namespace

DomainDesc DomainDesc::tube_over(const TubeBase& b) {
    DomainDesc d;
    d.kind = Kind::Tube;
    d.tube = b;
    return d;
}

DomainDesc DomainDesc::model_of(const ModelDomain& m) {
    DomainDesc d;
    d.kind = Kind::Model;
    d.model = m;
    return d;
}

bool DomainDesc::contains_point(const CPoint& z) const {
    if (kind == Kind::Tube) {
        if (static_cast<int>(z.size()) != tube.dim) return false;
        const auto y = imag_part(z);
        return contains(tube, y);
    }
    if (static_cast<int>(z.size()) != model.dim) return false;
    return model_contains(model, z);
}

std::string DomainDesc::name() const {
    if (kind == Kind::Tube) return "tube over " + tube.name();
    return model.name();
}

Biholomorphism phi_siegel_to_paraboloid_tube(int n) {
    if (n < 1) throw std::invalid_argument("phi_siegel_to_paraboloid_tube: n must be >= 1");
    Biholomorphism phi;
    phi.name = "siegel-to-paraboloid-tube";
    phi.source = DomainDesc::model_of(ModelDomain::siegel(n));
    phi.target = DomainDesc::tube_over(n == 1 ? TubeBase::half_line() : TubeBase::paraboloid(n));
    const double root2 = std::sqrt(2.0);
    const double jac = std::pow(2.0, 0.5 * (n - 1));
    phi.forward = [n, root2](const CPoint& z) {
        if (static_cast<int>(z.size()) != n)
            throw std::invalid_argument("siegel map: bad point dimension");
        CPoint w(n);
        Complex head_sq(0.0, 0.0);
        for (int k = 0; k + 1 < n; ++k) {
            w[k] = root2 * z[k];
            head_sq += z[k] * z[k];
        }
        w[n - 1] = z[n - 1] - imag_unit() * head_sq;
        return w;
    };
    phi.inverse = [n, root2](const CPoint& w) {
        if (static_cast<int>(w.size()) != n)
            throw std::invalid_argument("siegel map inverse: bad point dimension");
        CPoint z(n);
        Complex head_sq(0.0, 0.0);
        for (int k = 0; k + 1 < n; ++k) {
            z[k] = w[k] / root2;
            head_sq += w[k] * w[k];
        }
        z[n - 1] = w[n - 1] + 0.5 * imag_unit() * head_sq;
        return z;
    };
    phi.jac_det = [jac](const CPoint&) { return Complex(jac, 0.0); };
    auto inv = phi.inverse;
    auto jd = phi.jac_det;
    phi.jac_det_inverse = [inv, jd](const CPoint& w) { return 1.0 / jd(inv(w)); };
    return phi;
}

Biholomorphism cayley_ball_to_siegel(int n) {
    if (n < 1) throw std::invalid_argument("cayley_ball_to_siegel: n must be >= 1");
    Biholomorphism phi;
    phi.name = "cayley-ball-to-siegel";
    phi.source = DomainDesc::model_of(ModelDomain::unit_ball(n));
    phi.target = DomainDesc::model_of(ModelDomain::siegel(n));
    phi.forward = [n](const CPoint& z) {
        if (static_cast<int>(z.size()) != n)
            throw std::invalid_argument("cayley map: bad point dimension");
        const Complex den = 1.0 + z[n - 1];
        if (std::abs(den) < 1e-14)
            throw std::domain_error("cayley map: pole at z_n = -1");
        CPoint w(n);
        for (int k = 0; k + 1 < n; ++k) w[k] = 2.0 * z[k] / den;
        w[n - 1] = 4.0 * imag_unit() * (1.0 - z[n - 1]) / den;
        return w;
    };
    phi.inverse = [n](const CPoint& w) {
        if (static_cast<int>(w.size()) != n)
            throw std::invalid_argument("cayley map inverse: bad point dimension");
        const Complex den = 1.0 - 0.25 * imag_unit() * w[n - 1];
        if (std::abs(den) < 1e-14)
            throw std::domain_error("cayley map inverse: pole");
        CPoint z(n);
        for (int k = 0; k + 1 < n; ++k) z[k] = w[k] / den;
        z[n - 1] = (1.0 + 0.25 * imag_unit() * w[n - 1]) / den;
        return z;
    };
    phi.jac_det = [n](const CPoint& z) {
        const Complex den = 1.0 + z[n - 1];
        if (std::abs(den) < 1e-14)
            throw std::domain_error("cayley map: pole at z_n = -1");
        return -imag_unit() * std::pow(2.0, n + 2.0) * principal_pow(den, -(n + 1.0));
    };
    auto inv = phi.inverse;
    auto jd = phi.jac_det;
    phi.jac_det_inverse = [inv, jd](const CPoint& w) { return 1.0 / jd(inv(w)); };
    return phi;
}

Biholomorphism identity_map(const DomainDesc& dom) {
    Biholomorphism phi;
    phi.name = "identity";
    phi.source = dom;
    phi.target = dom;
    phi.forward = [](const CPoint& z) { return z; };
    phi.inverse = [](const CPoint& z) { return z; };
    phi.jac_det = [](const CPoint&) { return Complex(1.0, 0.0); };
    phi.jac_det_inverse = [](const CPoint&) { return Complex(1.0, 0.0); };
    return phi;
}

Biholomorphism compose(const Biholomorphism& second, const Biholomorphism& first) {
    if (!same_domain(first.target, second.source))
        throw std::invalid_argument("compose: inner map target differs from outer map source");
    Biholomorphism phi;
    phi.name = second.name + " . " + first.name;
    phi.source = first.source;
    phi.target = second.target;
    auto f1 = first.forward, f2 = second.forward;
    auto i1 = first.inverse, i2 = second.inverse;
    auto j1 = first.jac_det, j2 = second.jac_det;
    auto ji1 = first.jac_det_inverse, ji2 = second.jac_det_inverse;
    phi.forward = [f1, f2](const CPoint& z) { return f2(f1(z)); };
    phi.inverse = [i1, i2](const CPoint& w) { return i1(i2(w)); };
    phi.jac_det = [f1, j1, j2](const CPoint& z) { return j2(f1(z)) * j1(z); };
    phi.jac_det_inverse = [i2, ji1, ji2](const CPoint& w) { return ji1(i2(w)) * ji2(w); };
    return phi;
}

Complex pullback_kernel(const Biholomorphism& phi, const SpaceSpec& target_space,
                        const CPoint& z, const CPoint& zeta) {
    if (!phi.source.contains_point(z) || !phi.source.contains_point(zeta))
        throw std::domain_error("pullback_kernel: point outside " + phi.source.name());
    const Complex K = kernel_closed(target_space, phi.forward(z), phi.forward(zeta));
    return phi.jac_det(z) * K * std::conj(phi.jac_det(zeta));
}

}  // namespace bergman
