#include "bergman/weights.hpp"

#include <cmath>
#include <sstream>

namespace bergman {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const double kInf = std::numeric_limits<double>::infinity();

std::string fmt_num(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

void require_len(const SpaceSpec& s, size_t len) {
    if (static_cast<int>(len) != s.dim)
        throw std::invalid_argument("point dimension does not match space dimension");
}

double head_sq(std::span<const double> t) {
    double s = 0.0;
    for (size_t k = 0; k + 1 < t.size(); ++k) s += t[k] * t[k];
    return s;
}

double lorentz_gap(std::span<const double> t) { return t.back() - std::sqrt(head_sq(t)); }

double lorentz_delta(std::span<const double> t) {
    return t.back() * t.back() - head_sq(t);
}

// log of the Lorentz symbol normalization, valid uniformly for n >= 2:
//   Ctilde = pi^{(n-1)/2} G(a+1) G(2a+n) / ((4 pi)^{2a+n} G(a+(n+1)/2)).
// At n = 2 this reduces (Legendre duplication) to
// 2^{2a+1} G(a+1)^2 (4 pi)^{-2a-2}.
double log_lorentz_ctilde(int n, double alpha) {
    return 0.5 * (n - 1) * std::log(kPi) + std::lgamma(alpha + 1.0) +
           std::lgamma(2.0 * alpha + n) - (2.0 * alpha + n) * std::log(4.0 * kPi) -
           std::lgamma(alpha + 0.5 * (n + 1.0));
}
}  // namespace

SpaceSpec SpaceSpec::unweighted_half_plane() { return SpaceSpec{Family::UnweightedHalfPlane, 1, 0.0}; }

SpaceSpec SpaceSpec::half_plane_power(double v) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument("half_plane_power: v must be finite and > 0");
    return SpaceSpec{Family::HalfPlanePower, 1, v};
}

SpaceSpec SpaceSpec::bergman_selberg(double q) {
    if (!(q > 0.5) || !std::isfinite(q))
        throw std::invalid_argument("bergman_selberg: q must be finite and > 1/2");
    return SpaceSpec{Family::BergmanSelberg, 1, q};
}

SpaceSpec SpaceSpec::paraboloid_tube(int n, double alpha) {
    if (n < 2) throw std::invalid_argument("paraboloid_tube: n must be >= 2");
    if (!(alpha > -1.0) || !std::isfinite(alpha))
        throw std::invalid_argument("paraboloid_tube: alpha must be finite and > -1");
    return SpaceSpec{Family::ParaboloidTube, n, alpha};
}

SpaceSpec SpaceSpec::lorentz_tube(int n, double alpha) {
    if (n < 2) throw std::invalid_argument("lorentz_tube: n must be >= 2");
    if (!(alpha > -1.0) || !std::isfinite(alpha))
        throw std::invalid_argument("lorentz_tube: alpha must be finite and > -1");
    return SpaceSpec{Family::LorentzTube, n, alpha};
}

SpaceSpec SpaceSpec::siegel(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("siegel: n must be >= 1");
    if (!(alpha > -1.0) || !std::isfinite(alpha))
        throw std::invalid_argument("siegel: alpha must be finite and > -1");
    return SpaceSpec{Family::SiegelSpace, n, alpha};
}

SpaceSpec SpaceSpec::ball(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("ball: n must be >= 1");
    if (!(alpha > -1.0) || !std::isfinite(alpha))
        throw std::invalid_argument("ball: alpha must be finite and > -1");
    return SpaceSpec{Family::BallSpace, n, alpha};
}

double SpaceSpec::alpha() const {
    switch (family) {
        case Family::ParaboloidTube:
        case Family::LorentzTube:
        case Family::SiegelSpace:
        case Family::BallSpace:
            return param;
        default:
            throw std::logic_error("alpha() called on a non-alpha family");
    }
}

double SpaceSpec::power_v() const {
    if (family != Family::HalfPlanePower) throw std::logic_error("power_v() on wrong family");
    return param;
}

double SpaceSpec::selberg_q() const {
    if (family != Family::BergmanSelberg) throw std::logic_error("selberg_q() on wrong family");
    return param;
}

bool SpaceSpec::tube_eligible() const {
    switch (family) {
        case Family::UnweightedHalfPlane:
        case Family::HalfPlanePower:
        case Family::BergmanSelberg:
        case Family::ParaboloidTube:
        case Family::LorentzTube:
            return true;
        default:
            return false;
    }
}

TubeBase SpaceSpec::tube_base() const {
    switch (family) {
        case Family::UnweightedHalfPlane:
        case Family::HalfPlanePower:
        case Family::BergmanSelberg:
            return TubeBase::half_line();
        case Family::ParaboloidTube:
            return TubeBase::paraboloid(dim);
        case Family::LorentzTube:
            return TubeBase::lorentz_cone(dim);
        default:
            throw UnsupportedError("space is not realized as a tube domain");
    }
}

bool SpaceSpec::in_domain(const CPoint& z) const {
    require_len(*this, z.size());
    switch (family) {
        case Family::SiegelSpace:
            return model_contains(ModelDomain::siegel(dim), z);
        case Family::BallSpace:
            return model_contains(ModelDomain::unit_ball(dim), z);
        default: {
            const auto y = imag_part(z);
            return contains(tube_base(), y);
        }
    }
}

std::string SpaceSpec::family_token() const {
    switch (family) {
        case Family::UnweightedHalfPlane: return "unweighted-halfplane";
        case Family::HalfPlanePower: return "halfplane-power";
        case Family::BergmanSelberg: return "bergman-selberg";
        case Family::ParaboloidTube: return "paraboloid";
        case Family::LorentzTube: return "lorentz";
        case Family::SiegelSpace: return "siegel";
        case Family::BallSpace: return "ball";
    }
    return "?";
}

std::string SpaceSpec::name() const {
    switch (family) {
        case Family::UnweightedHalfPlane: return "unweighted-halfplane";
        case Family::HalfPlanePower: return "halfplane-power v=" + fmt_num(param);
        case Family::BergmanSelberg: return "bergman-selberg q=" + fmt_num(param);
        default:
            return family_token() + " n=" + std::to_string(dim) + " alpha=" + fmt_num(param);
    }
}

std::optional<Family> family_from_token(const std::string& token) {
    if (token == "unweighted-halfplane") return Family::UnweightedHalfPlane;
    if (token == "halfplane-power") return Family::HalfPlanePower;
    if (token == "bergman-selberg") return Family::BergmanSelberg;
    if (token == "paraboloid") return Family::ParaboloidTube;
    if (token == "lorentz") return Family::LorentzTube;
    if (token == "siegel") return Family::SiegelSpace;
    if (token == "ball") return Family::BallSpace;
    return std::nullopt;
}

double rho(const SpaceSpec& space, const CPoint& z) {
    require_len(space, z.size());
    if (!space.in_domain(z)) return 0.0;
    switch (space.family) {
        case Family::UnweightedHalfPlane:
            return 1.0;
        case Family::HalfPlanePower:
            return std::pow(z[0].imag(), space.param - 1.0);
        case Family::BergmanSelberg:
            return 2.0 * std::pow(z[0].imag(), 2.0 * space.param - 2.0) /
                   (kPi * gamma_fn(2.0 * space.param - 1.0));
        case Family::ParaboloidTube: {
            const auto y = imag_part(z);
            const double gap = y.back() - head_sq(y);
            return std::pow(gap, space.param);
        }
        case Family::LorentzTube: {
            const auto y = imag_part(z);
            return std::pow(lorentz_delta(y), space.param);
        }
        case Family::SiegelSpace: {
            const double gap = z.back().imag() - sq_norm_head(z);
            return std::pow(gap, space.param);
        }
        case Family::BallSpace: {
            double s = 0.0;
            for (const auto& c : z) s += std::norm(c);
            const double base = 1.0 - s;
            return std::pow(base, space.param) / std::pow(std::abs(1.0 + z.back()), 2.0 * space.param);
        }
    }
    return 0.0;
}

double weight_exponent(const SpaceSpec& space) {
    switch (space.family) {
        case Family::UnweightedHalfPlane:
            return 0.0;
        case Family::HalfPlanePower:
            return space.param - 1.0;
        case Family::BergmanSelberg:
            return 2.0 * space.param - 2.0;
        default:
            throw UnsupportedError("weight_exponent: half-line families only");
    }
}

bool in_support(const SpaceSpec& space, std::span<const double> t) {
    if (!space.tube_eligible())
        throw UnsupportedError("Laplace symbol is defined for tube families only");
    require_len(space, t.size());
    switch (space.family) {
        case Family::UnweightedHalfPlane:
        case Family::HalfPlanePower:
        case Family::BergmanSelberg:
            return t[0] > 0.0;
        case Family::ParaboloidTube:
            return t.back() > 0.0;
        case Family::LorentzTube:
            return lorentz_gap(t) > 0.0;
        default:
            return false;
    }
}

double log_symbol_closed(const SpaceSpec& space, std::span<const double> t) {
    if (!in_support(space, t))
        throw std::domain_error("log_symbol_closed: t outside the symbol support");
    const int n = space.dim;
    switch (space.family) {
        case Family::UnweightedHalfPlane:
            return -std::log(4.0 * kPi * t[0]);
        case Family::HalfPlanePower:
            return std::lgamma(space.param) - space.param * std::log(4.0 * kPi * t[0]);
        case Family::BergmanSelberg:
            return std::log(2.0 / kPi) + (1.0 - 2.0 * space.param) * std::log(4.0 * kPi * t[0]);
        case Family::ParaboloidTube: {
            const double a = space.param;
            const double tn = t.back();
            return (1.0 - n) * std::log(2.0) + std::lgamma(a + 1.0) -
                   (a + 1.0) * std::log(4.0 * kPi) + kPi * head_sq(t) / tn +
                   (0.5 * (1.0 - n) - a - 1.0) * std::log(tn);
        }
        case Family::LorentzTube: {
            const double a = space.param;
            return log_lorentz_ctilde(n, a) - (a + 0.5 * n) * std::log(lorentz_delta(t));
        }
        default:
            throw UnsupportedError("symbol undefined for this family");
    }
}

double symbol_closed(const SpaceSpec& space, std::span<const double> t) {
    if (!in_support(space, t)) return kInf;
    const double lg = log_symbol_closed(space, t);
    if (lg > 700.0) return kInf;  // value exceeds double range; still on-support
    return std::exp(lg);
}

double inv_symbol(const SpaceSpec& space, std::span<const double> t) {
    if (!in_support(space, t)) return 0.0;
    const double lg = log_symbol_closed(space, t);
    if (lg > 700.0) return 0.0;
    return std::exp(-lg);
}

IntegrationResult symbol_numeric(const SpaceSpec& space, std::span<const double> t,
                                 const QuadratureConfig& cfg) {
    if (!space.tube_eligible())
        throw UnsupportedError("Laplace symbol is defined for tube families only");
    require_len(space, t.size());
    if (!in_support(space, t)) {
        IntegrationResult r;
        r.value = Complex(kInf, 0.0);
        r.converged = true;
        return r;
    }
    const int n = space.dim;

    if (n == 1) {
        const double t0 = t[0];
        const double lam = 4.0 * kPi * t0;
        IntegrationResult res;
        switch (space.family) {
            case Family::UnweightedHalfPlane:
                res = integrate_semi_infinite([&](double y) { return Complex(std::exp(-lam * y), 0.0); },
                                              lam, cfg);
                break;
            case Family::HalfPlanePower: {
                // Substitute y = u^{1/v} when v < 1 to remove the endpoint
                // singularity of y^{v-1}; direct otherwise.
                const double v = space.param;
                if (v < 1.0) {
                    res = integrate_semi_infinite(
                        [&](double u) {
                            return Complex(std::exp(-lam * std::pow(u, 1.0 / v)) / v, 0.0);
                        },
                        lam, cfg);
                } else {
                    res = integrate_semi_infinite(
                        [&](double y) { return Complex(std::pow(y, v - 1.0) * std::exp(-lam * y), 0.0); },
                        lam, cfg);
                }
                break;
            }
            case Family::BergmanSelberg: {
                const double q = space.param;
                const double v = 2.0 * q - 1.0;
                const double c = 2.0 / (kPi * gamma_fn(v));
                IntegrationResult base;
                if (v < 1.0) {
                    base = integrate_semi_infinite(
                        [&](double u) {
                            return Complex(std::exp(-lam * std::pow(u, 1.0 / v)) / v, 0.0);
                        },
                        lam, cfg);
                } else {
                    base = integrate_semi_infinite(
                        [&](double y) { return Complex(std::pow(y, v - 1.0) * std::exp(-lam * y), 0.0); },
                        lam, cfg);
                }
                base.value *= c;
                base.error_estimate *= c;
                res = base;
                break;
            }
            default:
                throw UnsupportedError("unexpected 1-D family");
        }
        return res;
    }

    if (n == 2) {
        const double a = space.param;
        if (space.family == Family::ParaboloidTube) {
            return integrate_cone_2d(
                [&](double y1, double y2) {
                    const double gap = y2 - y1 * y1;
                    return Complex(std::pow(gap, a) * std::exp(-4.0 * kPi * (t[0] * y1 + t[1] * y2)), 0.0);
                },
                ConeKind::Paraboloid2, 4.0 * kPi * t[0], 4.0 * kPi * t[1], cfg);
        }
        return integrate_cone_2d(
            [&](double y1, double y2) {
                const double delta = y2 * y2 - y1 * y1;
                return Complex(std::pow(delta, a) * std::exp(-4.0 * kPi * (t[0] * y1 + t[1] * y2)), 0.0);
            },
            ConeKind::Lorentz2, 4.0 * kPi * t[0], 4.0 * kPi * t[1], cfg);
    }

    if (n == 3) {
        const double a = space.param;
        if (space.family == Family::LorentzTube) {
            const double gap = lorentz_gap(t);
            auto sampler = lorentz_cone_sampler(3, 2.0 * kPi * gap);
            return integrate_mc(
                [&](const std::vector<double>& y) {
                    const double delta = y[2] * y[2] - y[0] * y[0] - y[1] * y[1];
                    if (delta <= 0.0) return Complex(0.0, 0.0);
                    const double dot = y[0] * t[0] + y[1] * t[1] + y[2] * t[2];
                    return Complex(std::pow(delta, a) * std::exp(-4.0 * kPi * dot), 0.0);
                },
                sampler, cfg);
        }
        // Paraboloid base at n = 3: shear coordinates y3 = |y'|^2 + s. The
        // proposal draws s ~ Gamma(a+1, 2 pi t3) and y'_k ~ N(mu_k, 1/(4 pi t3))
        // with mu_k = -t_k / (2 t3); both are deliberately wider than the
        // integrand (half rate, double variance) so importance weights have
        // finite variance for every a > -1. The shear has unit Jacobian, so
        // the density transfers to y-coordinates unchanged.
        const double t3 = t[2];
        const double mu0 = -t[0] / (2.0 * t3), mu1 = -t[1] / (2.0 * t3);
        const double srate = 2.0 * kPi * t3;
        const double sigma = std::sqrt(1.0 / (4.0 * kPi * t3));
        const double log_norm = (a + 1.0) * std::log(srate) - std::lgamma(a + 1.0) -
                                std::log(2.0 * kPi * sigma * sigma);
        McSampler sampler;
        sampler.dim = 3;
        sampler.draw = [=](std::mt19937_64& rng) {
            std::gamma_distribution<double> gs(a + 1.0, 1.0 / srate);
            std::normal_distribution<double> nd(0.0, sigma);
            const double y0 = mu0 + nd(rng);
            const double y1 = mu1 + nd(rng);
            const double s = gs(rng);
            return std::vector<double>{y0, y1, y0 * y0 + y1 * y1 + s};
        };
        sampler.density = [=](const std::vector<double>& y) {
            const double s = y[2] - y[0] * y[0] - y[1] * y[1];
            if (s <= 0.0) return 0.0;
            const double d0 = y[0] - mu0, d1 = y[1] - mu1;
            const double lg = log_norm + a * std::log(s) - srate * s -
                              (d0 * d0 + d1 * d1) / (2.0 * sigma * sigma);
            return std::exp(lg);
        };
        return integrate_mc(
            [&](const std::vector<double>& y) {
                const double r2 = y[0] * y[0] + y[1] * y[1];
                const double gap = y[2] - r2;
                if (gap <= 0.0) return Complex(0.0, 0.0);
                const double dot = y[0] * t[0] + y[1] * t[1] + y[2] * t[2];
                return Complex(std::pow(gap, a) * std::exp(-4.0 * kPi * dot), 0.0);
            },
            sampler, cfg);
    }

    throw UnsupportedError("symbol_numeric supports n <= 3 only");
}

}  // namespace bergman
