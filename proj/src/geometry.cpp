#include "bergman/geometry.hpp"

#include <cmath>
#include <random>

namespace bergman {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

void require_dim(const TubeBase& base, std::span<const double> y) {
    if (static_cast<int>(y.size()) != base.dim)
        throw std::invalid_argument("point dimension does not match base dimension");
}

double head_norm(std::span<const double> y) {
    double s = 0.0;
    for (size_t k = 0; k + 1 < y.size(); ++k) s += y[k] * y[k];
    return std::sqrt(s);
}
}  // namespace

TubeBase TubeBase::half_line() { return TubeBase{BaseFamily::HalfLine, 1}; }

TubeBase TubeBase::paraboloid(int n) {
    if (n < 2) throw std::invalid_argument("paraboloid base requires n >= 2");
    return TubeBase{BaseFamily::Paraboloid, n};
}

TubeBase TubeBase::lorentz_cone(int n) {
    if (n < 2) throw std::invalid_argument("lorentz cone requires n >= 2");
    return TubeBase{BaseFamily::LorentzCone, n};
}

std::string TubeBase::name() const {
    switch (family) {
        case BaseFamily::HalfLine: return "halfline";
        case BaseFamily::Paraboloid: return "paraboloid n=" + std::to_string(dim);
        case BaseFamily::LorentzCone: return "lorentz-cone n=" + std::to_string(dim);
    }
    return "?";
}

bool contains(const TubeBase& base, std::span<const double> y) {
    require_dim(base, y);
    switch (base.family) {
        case BaseFamily::HalfLine:
            return y[0] > 0.0;
        case BaseFamily::Paraboloid: {
            const double r = head_norm(y);
            return y[base.dim - 1] > r * r;
        }
        case BaseFamily::LorentzCone:
            return y[base.dim - 1] > head_norm(y);
    }
    return false;
}

double paraboloid_projection_argmin(double r, double h) {
    if (r < 0.0) throw std::invalid_argument("radius must be nonnegative");
    // Critical points of g(p) = (p-r)^2 + (p^2-h)^2 solve
    // c(p) = 2 p^3 + (1-2h) p - r = 0.
    auto cubic = [&](double p) { return 2.0 * p * p * p + (1.0 - 2.0 * h) * p - r; };
    auto g = [&](double p) {
        const double dr = p - r, dh = p * p - h;
        return dr * dr + dh * dh;
    };
    const double pmax = std::max({r, std::sqrt(std::max(h, 0.0)), 1.0}) + 2.0;

    double best_p = 0.0;
    double best_g = g(0.0);
    const int grid = 256;
    double prev_x = 0.0, prev_c = cubic(0.0);
    for (int j = 1; j <= grid; ++j) {
        const double x = pmax * j / grid;
        const double c = cubic(x);
        if (prev_c == 0.0 || (prev_c < 0.0) != (c < 0.0)) {
            double lo = prev_x, hi = x;
            double clo = prev_c;
            double p = 0.5 * (lo + hi);
            for (int it = 0; it < 200; ++it) {
                const double cp = cubic(p);
                const double dcp = 6.0 * p * p + (1.0 - 2.0 * h);
                double next = (dcp != 0.0) ? p - cp / dcp : p;
                if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
                if ((cp < 0.0) == (clo < 0.0)) {
                    lo = p;
                    clo = cp;
                } else {
                    hi = p;
                }
                if (std::abs(next - p) <= 1e-12 * (1.0 + std::abs(p))) {
                    p = next;
                    break;
                }
                p = next;
            }
            const double gp = g(p);
            if (gp < best_g) {
                best_g = gp;
                best_p = p;
            }
        }
        prev_x = x;
        prev_c = c;
    }
    return best_p;
}

double paraboloid_projection_distance(double r, double h) {
    const double p = paraboloid_projection_argmin(r, h);
    const double dr = p - r, dh = p * p - h;
    return std::sqrt(dr * dr + dh * dh);
}

double boundary_distance(const TubeBase& base, std::span<const double> y) {
    require_dim(base, y);
    if (!contains(base, y)) throw std::domain_error("point is not interior to the base");
    switch (base.family) {
        case BaseFamily::HalfLine:
            return y[0];
        case BaseFamily::Paraboloid:
            return paraboloid_projection_distance(head_norm(y), y[base.dim - 1]);
        case BaseFamily::LorentzCone:
            return (y[base.dim - 1] - head_norm(y)) / std::sqrt(2.0);
    }
    return 0.0;
}

std::vector<double> nearest_boundary_point(const TubeBase& base, std::span<const double> y) {
    require_dim(base, y);
    if (!contains(base, y)) throw std::domain_error("point is not interior to the base");
    const int n = base.dim;
    std::vector<double> p(y.begin(), y.end());
    switch (base.family) {
        case BaseFamily::HalfLine:
            p[0] = 0.0;
            return p;
        case BaseFamily::Paraboloid: {
            const double r = head_norm(y);
            const double rho = paraboloid_projection_argmin(r, y[n - 1]);
            if (r > 0.0) {
                for (int k = 0; k < n - 1; ++k) p[k] = y[k] * (rho / r);
            } else {
                for (int k = 0; k < n - 1; ++k) p[k] = 0.0;
                p[0] = rho;
            }
            p[n - 1] = rho * rho;
            return p;
        }
        case BaseFamily::LorentzCone: {
            const double r = head_norm(y);
            const double step = (y[n - 1] - r) / 2.0;
            if (r > 0.0) {
                for (int k = 0; k < n - 1; ++k) p[k] = y[k] * (1.0 + step / r);
            } else {
                p[0] = step;
            }
            p[n - 1] = y[n - 1] - step;
            return p;
        }
    }
    return p;
}

ModelDomain ModelDomain::siegel(int n) {
    if (n < 1) throw std::invalid_argument("siegel domain requires n >= 1");
    return ModelDomain{ModelFamily::SiegelDomain, n};
}

ModelDomain ModelDomain::unit_ball(int n) {
    if (n < 1) throw std::invalid_argument("unit ball requires n >= 1");
    return ModelDomain{ModelFamily::UnitBall, n};
}

std::string ModelDomain::name() const {
    switch (family) {
        case ModelFamily::SiegelDomain: return "siegel n=" + std::to_string(dim);
        case ModelFamily::UnitBall: return "ball n=" + std::to_string(dim);
    }
    return "?";
}

bool model_contains(const ModelDomain& dom, const CPoint& z) {
    if (static_cast<int>(z.size()) != dom.dim)
        throw std::invalid_argument("point dimension does not match domain dimension");
    if (dom.family == ModelFamily::UnitBall) {
        double s = 0.0;
        for (const auto& c : z) s += std::norm(c);
        return s < 1.0;
    }
    return z.back().imag() > sq_norm_head(z);
}

double model_boundary_distance(const ModelDomain& dom, const CPoint& z) {
    if (!model_contains(dom, z)) throw std::domain_error("point is not interior to the domain");
    if (dom.family == ModelFamily::UnitBall) {
        double s = 0.0;
        for (const auto& c : z) s += std::norm(c);
        return 1.0 - std::sqrt(s);
    }
    // n = 1 has no z' block: plain upper half-plane, distance is Im z.
    if (dom.dim == 1) return z.back().imag();
    // Boundary { Im z_n = |z'|^2 } with Re z_n free: reduces to the real
    // paraboloid projection in (|z'|, Im z_n).
    return paraboloid_projection_distance(std::sqrt(sq_norm_head(z)), z.back().imag());
}

double unit_ball_volume(int d) {
    if (d < 0) throw std::invalid_argument("dimension must be nonnegative");
    if (d == 0) return 1.0;
    return std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

std::vector<std::vector<double>> sample_interior(const TubeBase& base, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::exponential_distribution<double> expo(1.0);
    const int n = base.dim;

    std::vector<std::vector<double>> pts;
    pts.reserve(count);
    while (static_cast<int>(pts.size()) < count) {
        std::vector<double> y(n, 0.0);
        switch (base.family) {
            case BaseFamily::HalfLine:
                y[0] = expo(rng);
                break;
            case BaseFamily::Paraboloid: {
                double r2 = 0.0;
                for (int k = 0; k < n - 1; ++k) {
                    y[k] = gauss(rng);
                    r2 += y[k] * y[k];
                }
                y[n - 1] = r2 + expo(rng);
                break;
            }
            case BaseFamily::LorentzCone: {
                const double yn = expo(rng);
                // uniform point in the (n-1)-ball of radius yn
                double r2 = 0.0;
                std::vector<double> dir(n - 1);
                for (int k = 0; k < n - 1; ++k) {
                    dir[k] = gauss(rng);
                    r2 += dir[k] * dir[k];
                }
                const double nrm = std::sqrt(r2);
                const double rad = (nrm > 0.0)
                                       ? yn * std::pow(unif(rng), 1.0 / (n - 1)) / nrm
                                       : 0.0;
                for (int k = 0; k < n - 1; ++k) y[k] = dir[k] * rad;
                y[n - 1] = yn;
                break;
            }
        }
        if (contains(base, y)) pts.push_back(std::move(y));
    }
    return pts;
}

double sample_density(const TubeBase& base, std::span<const double> y) {
    require_dim(base, y);
    if (!contains(base, y)) return 0.0;
    const int n = base.dim;
    switch (base.family) {
        case BaseFamily::HalfLine:
            return std::exp(-y[0]);
        case BaseFamily::Paraboloid: {
            const double r2 = head_norm(y) * head_norm(y);
            double phi = std::pow(2.0 * kPi, -(n - 1) / 2.0) * std::exp(-r2 / 2.0);
            return phi * std::exp(-(y[n - 1] - r2));
        }
        case BaseFamily::LorentzCone: {
            const double yn = y[n - 1];
            return std::exp(-yn) / (unit_ball_volume(n - 1) * std::pow(yn, n - 1));
        }
    }
    return 0.0;
}

}  // namespace bergman
