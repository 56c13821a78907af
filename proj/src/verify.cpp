#include "bergman/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace bergman {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& check, const std::string& space) {
    return fnv1a64(check + "|" + space + "|" + std::to_string(base));
}

double uni(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
}

double rel_gap(Complex a, Complex b) {
    const double denom = std::max(std::abs(b), 1e-300);
    return std::abs(a - b) / denom;
}

// Point in the dual support U_I, kept comfortably interior so quadratures
// have healthy decay rates.
std::vector<double> support_sample(const SpaceSpec& space, std::mt19937_64& rng) {
    const int n = space.dim;
    switch (space.family) {
        case Family::UnweightedHalfPlane:
        case Family::HalfPlanePower:
        case Family::BergmanSelberg:
            return {uni(rng, 0.05, 4.0)};
        case Family::ParaboloidTube: {
            std::vector<double> t(n);
            for (int k = 0; k + 1 < n; ++k) t[k] = uni(rng, -1.2, 1.2);
            t[n - 1] = uni(rng, 0.2, 2.2);
            return t;
        }
        case Family::LorentzTube: {
            std::vector<double> t(n);
            const double tn = uni(rng, 0.4, 2.2);
            double norm2 = 0.0;
            std::normal_distribution<double> nd(0.0, 1.0);
            for (int k = 0; k + 1 < n; ++k) {
                t[k] = nd(rng);
                norm2 += t[k] * t[k];
            }
            const double r = tn * uni(rng, 0.0, 0.7);
            const double sc = (norm2 > 0.0) ? r / std::sqrt(norm2) : 0.0;
            for (int k = 0; k + 1 < n; ++k) t[k] *= sc;
            t[n - 1] = tn;
            return t;
        }
        default:
            throw UnsupportedError("support_sample: tube families only");
    }
}

CheckReport base_report(const std::string& check, const SpaceSpec& space, long samples, double tol) {
    CheckReport r;
    r.check_name = check;
    r.space = space.name();
    r.samples = samples;
    r.tolerance = tol;
    if (space.family == Family::BergmanSelberg) r.notes = bergman_selberg_note(space.param);
    return r;
}

void append_note(CheckReport& r, const std::string& note) {
    if (!r.notes.empty()) r.notes += "; ";
    r.notes += note;
}
}  // namespace

std::string bergman_selberg_note(double q) {
    std::ostringstream os;
    os << "kernel constant 2^(2q-3)Gamma(2q) follows the Laplace-symbol normalization; "
          "a common alternative normalization uses Gamma(2q) alone (the two agree at q=1.5); "
          "here q=" << q;
    return os.str();
}

CPoint sample_domain_point(const SpaceSpec& space, std::mt19937_64& rng) {
    const int n = space.dim;
    CPoint z(n);
    switch (space.family) {
        case Family::UnweightedHalfPlane:
        case Family::HalfPlanePower:
        case Family::BergmanSelberg:
            return {Complex(uni(rng, -2.0, 2.0), uni(rng, 0.12, 2.4))};
        case Family::ParaboloidTube: {
            std::vector<double> y(n);
            double r2 = 0.0;
            for (int k = 0; k + 1 < n; ++k) {
                y[k] = uni(rng, -0.8, 0.8);
                r2 += y[k] * y[k];
            }
            y[n - 1] = r2 + uni(rng, 0.15, 1.6);
            for (int k = 0; k < n; ++k) z[k] = Complex(uni(rng, -1.2, 1.2), y[k]);
            return z;
        }
        case Family::LorentzTube: {
            std::vector<double> y(n);
            const double yn = uni(rng, 0.5, 2.0);
            std::normal_distribution<double> nd(0.0, 1.0);
            double norm2 = 0.0;
            for (int k = 0; k + 1 < n; ++k) {
                y[k] = nd(rng);
                norm2 += y[k] * y[k];
            }
            const double r = yn * uni(rng, 0.0, 0.6);
            const double sc = (norm2 > 0.0) ? r / std::sqrt(norm2) : 0.0;
            for (int k = 0; k + 1 < n; ++k) y[k] *= sc;
            y[n - 1] = yn;
            for (int k = 0; k < n; ++k) z[k] = Complex(uni(rng, -1.2, 1.2), y[k]);
            return z;
        }
        case Family::SiegelSpace: {
            double r2 = 0.0;
            for (int k = 0; k + 1 < n; ++k) {
                z[k] = Complex(uni(rng, -0.7, 0.7), uni(rng, -0.7, 0.7));
                r2 += std::norm(z[k]);
            }
            z[n - 1] = Complex(uni(rng, -2.0, 2.0), r2 + uni(rng, 0.15, 1.6));
            return z;
        }
        case Family::BallSpace: {
            std::normal_distribution<double> nd(0.0, 1.0);
            double norm2 = 0.0;
            std::vector<Complex> dir(n);
            for (int k = 0; k < n; ++k) {
                dir[k] = Complex(nd(rng), nd(rng));
                norm2 += std::norm(dir[k]);
            }
            const double radius =
                0.85 * std::pow(uni(rng, 0.0, 1.0), 1.0 / (2.0 * n)) / std::sqrt(std::max(norm2, 1e-300));
            for (int k = 0; k < n; ++k) z[k] = radius * dir[k];
            return z;
        }
    }
    throw std::logic_error("sample_domain_point: unhandled family");
}

CheckReport check_symmetry(const SpaceSpec& space, int samples, double tol, std::uint64_t seed) {
    auto r = base_report("hermitian-symmetry", space, samples, tol);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const CPoint z = sample_domain_point(space, rng);
        const CPoint w = sample_domain_point(space, rng);
        const Complex a = kernel_closed(space, z, w);
        const Complex b = kernel_closed(space, w, z);
        worst = std::max(worst, rel_gap(a, std::conj(b)));
    }
    r.max_rel_err = worst;
    r.passed = worst <= tol;
    return r;
}

CheckReport check_diagonal(const SpaceSpec& space, int samples, double tol, std::uint64_t seed) {
    auto r = base_report("diagonal-positivity", space, samples, tol);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    bool positive = true;
    for (int k = 0; k < samples; ++k) {
        const CPoint z = sample_domain_point(space, rng);
        const Complex d = kernel_closed(space, z, z);
        if (!(d.real() > 0.0)) positive = false;
        worst = std::max(worst, std::abs(d.imag()) / std::max(std::abs(d.real()), 1e-300));
    }
    r.max_rel_err = worst;
    r.passed = positive && worst <= tol;
    if (!positive) append_note(r, "encountered a non-positive diagonal value");
    return r;
}

CheckReport check_log_convexity(const SpaceSpec& space, int triples, double tol, std::uint64_t seed) {
    auto r = base_report("symbol-log-convexity", space, triples, tol);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < triples; ++k) {
        const auto t1 = support_sample(space, rng);
        const auto t2 = support_sample(space, rng);
        std::vector<double> mid(t1.size());
        for (size_t j = 0; j < t1.size(); ++j) mid[j] = 0.5 * (t1[j] + t2[j]);
        const double lhs = log_symbol_closed(space, mid);
        const double rhs = 0.5 * (log_symbol_closed(space, t1) + log_symbol_closed(space, t2));
        worst = std::max(worst, lhs - rhs);  // violation is a positive excess
    }
    r.max_rel_err = std::max(worst, 0.0);
    r.passed = worst <= tol;
    append_note(r, "midpoint convexity excess of log I, absolute scale");
    return r;
}

CheckReport check_symbol_oracle(const SpaceSpec& space, int points, const QuadratureConfig& cfg,
                                std::uint64_t seed) {
    const bool mc = space.dim >= 3;
    auto r = base_report("symbol-oracle", space, points, mc ? 1.0 : 1e-8);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    bool ok = true;
    int short_cert = 0;
    for (int k = 0; k < points; ++k) {
        const auto t = support_sample(space, rng);
        const double closed = symbol_closed(space, t);
        QuadratureConfig qc = cfg;
        qc.rel_tol = std::min(cfg.rel_tol, 1e-10);
        qc.seed = seed + 1000003ULL * (k + 1);
        const auto num = symbol_numeric(space, t, qc);
        if (mc) {
            // statistical agreement, measured in units of 3 * stderr
            const double sigma = std::max(num.error_estimate, 1e-300);
            const double units = std::abs(num.value.real() - closed) / (3.0 * sigma);
            worst = std::max(worst, units);
            if (units > 1.0) ok = false;
        } else {
            if (!num.converged) ++short_cert;
            const double gap = std::abs(num.value.real() - closed) / std::max(closed, 1e-300);
            worst = std::max(worst, gap);
            if (gap > r.tolerance) ok = false;
        }
    }
    r.max_rel_err = worst;
    r.passed = ok;
    if (mc) append_note(r, "Monte Carlo check; max_rel_err is the gap in units of 3*stderr");
    if (short_cert > 0)
        append_note(r, "quadrature certificate short of the internal target on " +
                           std::to_string(short_cert) + " points; verdict is the measured gap");
    return r;
}

CheckReport check_kernel_agreement(const SpaceSpec& space, int pairs, double tol,
                                   const QuadratureConfig& cfg, std::uint64_t seed) {
    const bool mc = space.dim >= 3;
    auto r = base_report("kernel-oracle", space, pairs, tol);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    bool ok = true;
    for (int k = 0; k < pairs; ++k) {
        const CPoint z = sample_domain_point(space, rng);
        const CPoint w = sample_domain_point(space, rng);
        const Complex closed = kernel_closed(space, z, w);
        QuadratureConfig qc = cfg;
        qc.rel_tol = std::min(cfg.rel_tol, tol / 100.0);
        qc.seed = seed + 2000003ULL * (k + 1);
        const auto num = kernel_numeric(space, z, w, qc);
        if (mc) {
            const double sigma = std::max(num.error_estimate, 1e-300);
            const double units = std::abs(num.value - closed) / (3.0 * sigma);
            worst = std::max(worst, units);
            if (units > 1.0) ok = false;
        } else {
            const double gap = rel_gap(num.value, closed);
            worst = std::max(worst, gap);
            if (gap > tol) ok = false;
        }
    }
    r.max_rel_err = worst;
    r.passed = ok;
    if (mc) {
        r.tolerance = 1.0;
        append_note(r, "Monte Carlo check; max_rel_err is the gap in units of 3*stderr");
    }
    return r;
}

namespace {
// int_0^inf rho(iv) [ int_R G(u, v) du ] dv for the half-plane families;
// the x-line via x = s tan(phi), the y-tail via y = Y0/u.
IntegrationResult tube1d_weighted_plane_integral(const SpaceSpec& space,
                                                 const std::function<Complex(double, double)>& G,
                                                 const QuadratureConfig& cfg) {
    QuadratureConfig inner_cfg = cfg;
    inner_cfg.rel_tol = std::max(cfg.rel_tol / 20.0, 1e-13);
    inner_cfg.max_evals = std::min<long>(cfg.max_evals, 200'000);

    IntegrationResult out;
    double worst_inner_rel = 0.0;
    bool inner_ok = true;

    auto slice = [&](double v) -> Complex {
        const double s = 1.0 + v;
        auto rr = adaptive_gk15(
            [&](double phi) {
                const double c = std::cos(phi);
                return G(s * std::tan(phi), v) * (s / (c * c));
            },
            -0.5 * kPi + 1e-12, 0.5 * kPi - 1e-12, inner_cfg);
        out.evals += rr.evals;
        if (!rr.converged) inner_ok = false;
        if (std::abs(rr.value) > 0.0)
            worst_inner_rel = std::max(worst_inner_rel, rr.error_estimate / std::abs(rr.value));
        return rr.value;
    };

    auto outer_integrand = [&](double v) -> Complex {
        const double wgt = rho(space, CPoint{Complex(0.0, v)});
        if (wgt == 0.0) return Complex(0.0, 0.0);
        return wgt * slice(v);
    };

    const double v0 = 3.0;
    // A weight exponent p in (-1, 0) puts an integrable singularity at v = 0
    // that defeats panel error estimates; v = u^{1/(1+p)} makes the weight
    // factor exactly constant there.
    const double pexp = weight_exponent(space);
    IntegrationResult head;
    if (pexp < 0.0) {
        const double m = 1.0 + pexp;
        const double crho = rho(space, CPoint{Complex(0.0, 1.0)});
        head = adaptive_gk15(
            [&](double u) { return (crho / m) * slice(std::pow(u, 1.0 / m)); }, 0.0,
            std::pow(v0, m), cfg, {std::pow(0.5, m)});
    } else {
        head = adaptive_gk15(outer_integrand, 0.0, v0, cfg, {0.5});
    }
    auto tail = adaptive_gk15(
        [&](double u) { return outer_integrand(v0 / u) * (v0 / (u * u)); }, 0.0, 1.0, cfg);

    out.value = head.value + tail.value;
    out.error_estimate = head.error_estimate + tail.error_estimate +
                         3.0 * worst_inner_rel * std::abs(out.value);
    out.converged = inner_ok && head.converged && tail.converged;
    return out;
}
}  // namespace

CheckReport check_self_reproduction(const SpaceSpec& space, int pairs, double tol,
                                    const QuadratureConfig& cfg, std::uint64_t seed) {
    auto r = base_report("self-reproduction", space, pairs, tol);
    if (space.dim != 1) throw UnsupportedError("check_self_reproduction: 1-D families only");
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    bool ok = true;
    int short_cert = 0;
    for (int k = 0; k < pairs; ++k) {
        const CPoint z = sample_domain_point(space, rng);
        const CPoint w = sample_domain_point(space, rng);
        const Complex target = kernel_closed(space, z, w);
        auto J = tube1d_weighted_plane_integral(
            space,
            [&](double u, double v) {
                const CPoint zeta{Complex(u, v)};
                return kernel_closed(space, zeta, w) * std::conj(kernel_closed(space, zeta, z));
            },
            cfg);
        if (!J.converged) ++short_cert;
        const double gap = rel_gap(J.value, target);
        worst = std::max(worst, gap);
        if (gap > tol) ok = false;
    }
    r.max_rel_err = worst;
    r.passed = ok;
    if (short_cert > 0)
        append_note(r, "quadrature certificate short of the internal target on " +
                           std::to_string(short_cert) + " pairs; verdict is the measured gap");
    return r;
}

CheckReport check_isometry(const SpaceSpec& space, const TestProfile& profile, double tol,
                           const QuadratureConfig& cfg) {
    auto r = base_report("laplace-isometry", space, 1, tol);
    if (!profile_admissible(space, profile))
        throw std::invalid_argument("check_isometry: profile not admissible for " + space.name());
    append_note(r, "profile " + profile.name());
    const auto lhs = laplace_a2_norm_sq(space, profile, cfg);
    const auto rhs = profile_l2i_norm_sq(space, profile, cfg);
    const double gap = rel_gap(lhs.value, rhs.value);
    r.max_rel_err = gap;
    r.passed = gap <= tol;
    if (!lhs.converged || !rhs.converged)
        append_note(r, "quadrature certificate short of the internal target; "
                       "verdict is the measured gap between the two norms");
    return r;
}

namespace {
// Minimum of the weight over the closed Euclidean ball B(z, delta); exact for
// the monotone half-line weights, a direction scan for the cone and Siegel
// weights, and a seeded sampled minimum (a safe over-estimate never used to
// weaken the asserted bound) for the two-sided ball weight.
double epsilon_min(const SpaceSpec& space, const CPoint& z, double delta, std::mt19937_64& rng) {
    const int n = space.dim;
    switch (space.family) {
        case Family::UnweightedHalfPlane:
            return 1.0;
        case Family::HalfPlanePower:
        case Family::BergmanSelberg: {
            const double y = z[0].imag();
            const double e = (space.family == Family::HalfPlanePower) ? space.param - 1.0
                                                                      : 2.0 * space.param - 2.0;
            const double c = (space.family == Family::HalfPlanePower)
                                 ? 1.0
                                 : 2.0 / (kPi * gamma_fn(2.0 * space.param - 1.0));
            return c * std::min(std::pow(y - delta, e), std::pow(y + delta, e));
        }
        case Family::ParaboloidTube:
        case Family::SiegelSpace: {
            double rr, h;
            if (space.family == Family::ParaboloidTube) {
                const auto y = imag_part(z);
                rr = std::sqrt(sq_norm(std::span<const double>(y.data(), y.size() - 1)));
                h = y.back();
            } else {
                rr = std::sqrt(sq_norm_head(z));
                h = z.back().imag();
            }
            const double a = space.param;
            if (a == 0.0) return 1.0;
            if (n == 1) {
                // Siegel n = 1: weight (Im z)^a, monotone in Im z alone.
                return std::min(std::pow(h - delta, a), std::pow(h + delta, a));
            }
            if (a > 0.0) {
                double gmin = std::numeric_limits<double>::infinity();
                for (int j = 0; j <= 256; ++j) {
                    const double phi = 0.5 * kPi * j / 256.0;
                    const double g = (h - delta * std::cos(phi)) -
                                     (rr + delta * std::sin(phi)) * (rr + delta * std::sin(phi));
                    gmin = std::min(gmin, g);
                }
                return std::pow(std::max(gmin, 1e-300), a);
            }
            const double rlo = std::max(rr - delta, 0.0);
            const double gmax = (h + delta) - rlo * rlo;
            return std::pow(gmax, a);
        }
        case Family::LorentzTube: {
            const auto y = imag_part(z);
            const double rr = std::sqrt(sq_norm(std::span<const double>(y.data(), y.size() - 1)));
            const double yn = y.back();
            const double a = space.param;
            if (a == 0.0) return 1.0;
            if (a > 0.0) {
                double dmin = std::numeric_limits<double>::infinity();
                for (int j = 0; j <= 256; ++j) {
                    const double phi = 0.5 * kPi * j / 256.0;
                    const double s = yn - delta * std::cos(phi);
                    const double t = rr + delta * std::sin(phi);
                    dmin = std::min(dmin, s * s - t * t);
                }
                return std::pow(std::max(dmin, 1e-300), a);
            }
            const double rlo = std::max(rr - delta, 0.0);
            return std::pow((yn + delta) * (yn + delta) - rlo * rlo, a);
        }
        case Family::BallSpace: {
            auto weight = [&](const CPoint& p) { return rho(space, p); };
            double best = weight(z);
            std::normal_distribution<double> nd(0.0, 1.0);
            std::uniform_real_distribution<double> ud(0.0, 1.0);
            for (int j = 0; j < 600; ++j) {
                CPoint p(n);
                double norm2 = 0.0;
                for (int k = 0; k < n; ++k) {
                    p[k] = Complex(nd(rng), nd(rng));
                    norm2 += std::norm(p[k]);
                }
                const double rad =
                    (j < 300) ? delta : delta * std::pow(ud(rng), 1.0 / (2.0 * n));
                const double sc = rad / std::sqrt(std::max(norm2, 1e-300));
                for (int k = 0; k < n; ++k) p[k] = z[k] + sc * p[k];
                best = std::min(best, weight(p));
            }
            // deterministic extreme candidates along the radial and z_n axes
            std::vector<CPoint> cands;
            if (std::abs(z[n - 1]) > 0.0 || n == 1) {
                for (double sgn : {1.0, -1.0}) {
                    CPoint p = z;
                    p[n - 1] += sgn * delta;
                    cands.push_back(p);
                    CPoint q = z;
                    q[n - 1] += Complex(0.0, sgn * delta);
                    cands.push_back(q);
                }
            }
            double zn2 = 0.0;
            for (int k = 0; k < n; ++k) zn2 += std::norm(z[k]);
            if (zn2 > 1e-20) {
                const double sc = delta / std::sqrt(zn2);
                CPoint pout = z, pin = z;
                for (int k = 0; k < n; ++k) {
                    pout[k] = z[k] * (1.0 + sc);
                    pin[k] = z[k] * (1.0 - sc);
                }
                cands.push_back(pout);
                cands.push_back(pin);
            }
            for (const auto& p : cands) {
                double s = 0.0;
                for (const auto& c : p) s += std::norm(c);
                if (s < 1.0) best = std::min(best, weight(p));
            }
            return best;
        }
    }
    throw std::logic_error("epsilon_min: unhandled family");
}

double interior_distance(const SpaceSpec& space, const CPoint& z) {
    switch (space.family) {
        case Family::SiegelSpace:
            return model_boundary_distance(ModelDomain::siegel(space.dim), z);
        case Family::BallSpace:
            return model_boundary_distance(ModelDomain::unit_ball(space.dim), z);
        default: {
            const auto y = imag_part(z);
            return boundary_distance(space.tube_base(), y);
        }
    }
}
}  // namespace

CheckReport check_point_eval_bound(const SpaceSpec& space, int instances, std::uint64_t seed) {
    auto r = base_report("point-evaluation-bound", space, instances, 1.0);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    bool ok = true;
    const int n = space.dim;
    const double vol = unit_ball_volume(2 * n);
    for (int k = 0; k < instances; ++k) {
        const CPoint z = sample_domain_point(space, rng);
        const CPoint w = sample_domain_point(space, rng);
        const double Kww = kernel_closed(space, w, w).real();
        const double F = std::abs(kernel_closed(space, z, w)) / std::sqrt(Kww);
        const double delta = std::min(1.0, 0.5 * interior_distance(space, z));
        const double eps = epsilon_min(space, z, delta, rng);
        const double bound = std::pow(vol * eps, -0.5) * std::pow(delta, -static_cast<double>(n));
        const double ratio = F / bound;
        worst = std::max(worst, ratio);
        if (!(ratio <= 1.0)) ok = false;
    }
    r.max_rel_err = worst;
    r.passed = ok;
    append_note(r, "max_rel_err is the largest |F(z)| / bound ratio; must stay <= 1");
    return r;
}

CheckReport check_extremal(const SpaceSpec& space, int points, double tol,
                           const QuadratureConfig& cfg, std::uint64_t seed) {
    auto r = base_report("extremal-normalization", space, points, tol);
    if (space.dim != 1) throw UnsupportedError("check_extremal: 1-D families only");
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    bool ok = true;
    int short_cert = 0;
    for (int k = 0; k < points; ++k) {
        const CPoint zeta = sample_domain_point(space, rng);
        const double Kzz = kernel_closed(space, zeta, zeta).real();
        auto norm2 = tube1d_weighted_plane_integral(
            space,
            [&](double u, double v) {
                const CPoint p{Complex(u, v)};
                return Complex(std::norm(kernel_closed(space, p, zeta)) / (Kzz * Kzz), 0.0);
            },
            cfg);
        if (!norm2.converged) ++short_cert;
        const double gap = rel_gap(norm2.value, Complex(1.0 / Kzz, 0.0));
        worst = std::max(worst, gap);
        if (gap > tol) ok = false;
    }
    r.max_rel_err = worst;
    r.passed = ok;
    if (short_cert > 0)
        append_note(r, "quadrature certificate short of the internal target on " +
                           std::to_string(short_cert) + " points; verdict is the measured gap");
    return r;
}

CheckReport check_pullback(PullbackPair pair, int n, double alpha, int samples, double tol,
                           std::uint64_t seed) {
    SpaceSpec source = (pair == PullbackPair::SiegelFromParaboloid) ? SpaceSpec::siegel(n, alpha)
                                                                    : SpaceSpec::ball(n, alpha);
    std::string label;
    Biholomorphism phi = identity_map(DomainDesc::model_of(ModelDomain::unit_ball(n)));
    SpaceSpec target = source;
    switch (pair) {
        case PullbackPair::SiegelFromParaboloid:
            phi = phi_siegel_to_paraboloid_tube(n);
            target = (n == 1) ? SpaceSpec::half_plane_power(alpha + 1.0)
                              : SpaceSpec::paraboloid_tube(n, alpha);
            label = "pullback-siegel-from-tube";
            break;
        case PullbackPair::BallFromSiegel:
            phi = cayley_ball_to_siegel(n);
            target = SpaceSpec::siegel(n, alpha);
            label = "pullback-ball-from-siegel";
            break;
        case PullbackPair::IdentityBall:
            label = "pullback-identity-ball";
            break;
    }
    auto r = base_report(label, source, samples, tol);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const CPoint z = sample_domain_point(source, rng);
        const CPoint zeta = sample_domain_point(source, rng);
        const Complex pulled = pullback_kernel(phi, target, z, zeta);
        const Complex direct = kernel_closed(source, z, zeta);
        worst = std::max(worst, rel_gap(pulled, direct));
    }
    r.max_rel_err = worst;
    r.passed = worst <= tol;
    return r;
}

CheckReport check_lorentz_homogeneity(const SpaceSpec& space, int samples, double tol,
                                      std::uint64_t seed) {
    auto r = base_report("kernel-homogeneity", space, samples, tol);
    if (space.family != Family::LorentzTube)
        throw UnsupportedError("check_lorentz_homogeneity: Lorentz tube only");
    std::mt19937_64 rng(seed);
    const double a = space.param;
    const int n = space.dim;
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const CPoint z = sample_domain_point(space, rng);
        const CPoint w = sample_domain_point(space, rng);
        const double lam = uni(rng, 0.5, 3.0);
        CPoint lz = z, lw = w;
        for (int j = 0; j < n; ++j) {
            lz[j] *= lam;
            lw[j] *= lam;
        }
        const Complex lhs = kernel_closed(space, lz, lw);
        const Complex rhs = std::pow(lam, -2.0 * (a + n)) * kernel_closed(space, z, w);
        worst = std::max(worst, rel_gap(lhs, rhs));
    }
    r.max_rel_err = worst;
    r.passed = worst <= tol;
    return r;
}

CheckReport check_degeneration(double alpha, int samples, double tol, std::uint64_t seed) {
    const SpaceSpec hp = SpaceSpec::half_plane_power(alpha + 1.0);
    CheckReport r;
    r.check_name = "dimension-degeneration";
    r.space = "paraboloid n=1 alpha=" + std::to_string(alpha);
    r.samples = samples;
    r.tolerance = tol;
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const CPoint z = sample_domain_point(hp, rng);
        const CPoint w = sample_domain_point(hp, rng);
        const Complex lhs = paraboloid_kernel_formula(1, alpha, z, w);
        const Complex rhs = kernel_closed(hp, z, w);
        worst = std::max(worst, rel_gap(lhs, rhs));
    }
    r.max_rel_err = worst;
    r.passed = worst <= tol;
    return r;
}

CheckReport check_disc_series_anchor(int samples, double tol, std::uint64_t seed) {
    const SpaceSpec disc = SpaceSpec::ball(1, 0.0);
    auto r = base_report("disc-series-anchor", disc, samples, tol);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double r1 = 0.5 * std::sqrt(uni(rng, 0.0, 1.0)), a1 = uni(rng, 0.0, 2.0 * kPi);
        const double r2 = 0.5 * std::sqrt(uni(rng, 0.0, 1.0)), a2 = uni(rng, 0.0, 2.0 * kPi);
        const CPoint z{Complex(r1 * std::cos(a1), r1 * std::sin(a1))};
        const CPoint w{Complex(r2 * std::cos(a2), r2 * std::sin(a2))};
        const Complex zw = z[0] * std::conj(w[0]);
        Complex series(0.0, 0.0);
        Complex pw(1.0, 0.0);
        for (int j = 0; j <= 200; ++j) {
            series += (j + 1.0) * pw;
            pw *= zw;
        }
        series /= kPi;
        worst = std::max(worst, rel_gap(kernel_closed(disc, z, w), series));
    }
    r.max_rel_err = worst;
    r.passed = worst <= tol;
    append_note(r, "kernel against the truncated Taylor series sum (k+1)(z conj w)^k / pi");
    return r;
}

namespace {
SpaceSpec desc_space(const DomainDesc& d) {
    if (d.kind == DomainDesc::Kind::Tube) {
        switch (d.tube.family) {
            case BaseFamily::HalfLine:
                return SpaceSpec::unweighted_half_plane();
            case BaseFamily::Paraboloid:
                return SpaceSpec::paraboloid_tube(d.tube.dim, 0.0);
            case BaseFamily::LorentzCone:
                return SpaceSpec::lorentz_tube(d.tube.dim, 0.0);
        }
    }
    if (d.model.family == ModelFamily::SiegelDomain) return SpaceSpec::siegel(d.model.dim, 0.0);
    return SpaceSpec::ball(d.model.dim, 0.0);
}
}  // namespace

CheckReport check_map_roundtrip(const Biholomorphism& phi, int samples, double tol,
                                std::uint64_t seed) {
    CheckReport r;
    r.check_name = "map-roundtrip";
    r.space = phi.name;
    r.samples = samples;
    r.tolerance = tol;
    std::mt19937_64 rng(seed);
    const SpaceSpec src = desc_space(phi.source);
    double worst = 0.0;
    bool ok = true;
    for (int k = 0; k < samples; ++k) {
        const CPoint z = sample_domain_point(src, rng);
        const CPoint w = phi.forward(z);
        if (!phi.target.contains_point(w)) {
            ok = false;
            append_note(r, "forward image left the target domain");
            continue;
        }
        const CPoint back = phi.inverse(w);
        double gap = 0.0;
        for (size_t j = 0; j < z.size(); ++j)
            gap = std::max(gap, std::abs(back[j] - z[j]) / (1.0 + std::abs(z[j])));
        const Complex jprod = phi.jac_det(z) * phi.jac_det_inverse(w);
        gap = std::max(gap, std::abs(jprod - 1.0));
        worst = std::max(worst, gap);
    }
    r.max_rel_err = worst;
    r.passed = ok && worst <= tol;
    return r;
}

CheckReport check_weight_compat(int n, double alpha, int samples, double tol, std::uint64_t seed) {
    CheckReport r;
    r.check_name = "weight-compatibility";
    const SpaceSpec src = SpaceSpec::siegel(n, alpha);
    const SpaceSpec tgt =
        (n == 1) ? SpaceSpec::half_plane_power(alpha + 1.0) : SpaceSpec::paraboloid_tube(n, alpha);
    r.space = src.name();
    r.samples = samples;
    r.tolerance = tol;
    auto phi = phi_siegel_to_paraboloid_tube(n);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const CPoint z = sample_domain_point(src, rng);
        const double lhs = rho(src, z);
        const double rhs = rho(tgt, phi.forward(z));
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300));
    }
    r.max_rel_err = worst;
    r.passed = worst <= tol;
    append_note(r, "rho_source == rho_target o Phi along the Siegel-to-tube map");
    return r;
}

CheckReport check_chain_consistency(int n, double alpha, int samples, double tol,
                                    std::uint64_t seed) {
    CheckReport r;
    r.check_name = "pullback-chain";
    const SpaceSpec ballsp = SpaceSpec::ball(n, alpha);
    r.space = ballsp.name();
    r.samples = samples;
    r.tolerance = tol;
    const auto cayley = cayley_ball_to_siegel(n);
    const auto siegel_map = phi_siegel_to_paraboloid_tube(n);
    const auto chain = compose(siegel_map, cayley);
    const SpaceSpec tube_target =
        (n == 1) ? SpaceSpec::half_plane_power(alpha + 1.0) : SpaceSpec::paraboloid_tube(n, alpha);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const CPoint z = sample_domain_point(ballsp, rng);
        const CPoint zeta = sample_domain_point(ballsp, rng);
        const Complex through_chain = pullback_kernel(chain, tube_target, z, zeta);
        const Complex staged = cayley.jac_det(z) *
                               pullback_kernel(siegel_map, tube_target, cayley.forward(z),
                                               cayley.forward(zeta)) *
                               std::conj(cayley.jac_det(zeta));
        const Complex direct = kernel_closed(ballsp, z, zeta);
        worst = std::max(worst, rel_gap(through_chain, staged));
        worst = std::max(worst, rel_gap(through_chain, direct));
    }
    r.max_rel_err = worst;
    r.passed = worst <= tol;
    append_note(r, "composed pullback vs staged pullback vs direct closed form");
    return r;
}

SuiteSelection SuiteSelection::none() {
    SuiteSelection s;
    s.symmetry = s.diagonal = s.log_convexity = s.symbol = s.kernel = s.reproduction = s.isometry =
        s.point_eval = s.extremal = s.pullback = s.properties = s.maps = false;
    return s;
}

SuiteSelection SuiteSelection::parse(const std::string& csv) {
    SuiteSelection s = none();
    std::stringstream ss(csv);
    std::string tok;
    bool any = false;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        any = true;
        if (tok == "all") {
            s = SuiteSelection{};
        } else if (tok == "symmetry") {
            s.symmetry = true;
        } else if (tok == "diagonal") {
            s.diagonal = true;
        } else if (tok == "log-convexity") {
            s.log_convexity = true;
        } else if (tok == "symbol") {
            s.symbol = true;
        } else if (tok == "kernel") {
            s.kernel = true;
        } else if (tok == "reproduction") {
            s.reproduction = true;
        } else if (tok == "isometry") {
            s.isometry = true;
        } else if (tok == "point-eval") {
            s.point_eval = true;
        } else if (tok == "extremal") {
            s.extremal = true;
        } else if (tok == "pullback") {
            s.pullback = true;
        } else if (tok == "properties") {
            s.properties = true;
        } else if (tok == "maps") {
            s.maps = true;
        } else {
            throw std::invalid_argument("unknown suite token '" + tok +
                                        "'; expected one of all, symmetry, diagonal, log-convexity, "
                                        "symbol, kernel, reproduction, isometry, point-eval, "
                                        "extremal, pullback, properties, maps");
        }
    }
    if (!any) throw std::invalid_argument("empty suite selection");
    return s;
}

std::vector<CheckReport> run_suite_for(const SpaceSpec& space, const SuiteSelection& sel,
                                       const QuadratureConfig& cfg) {
    std::vector<CheckReport> out;
    const auto seed_for = [&](const char* check) {
        return derive_seed(cfg.seed, check, space.name());
    };
    const bool tube = space.tube_eligible();
    const bool one_d = space.dim == 1 && tube;

    if (sel.symmetry) out.push_back(check_symmetry(space, 40, 1e-12, seed_for("symmetry")));
    if (sel.diagonal) out.push_back(check_diagonal(space, 40, 1e-12, seed_for("diagonal")));
    if (sel.log_convexity && tube)
        out.push_back(check_log_convexity(space, 60, 1e-10, seed_for("log-convexity")));
    if (sel.symbol && tube) {
        const int pts = (space.dim >= 3) ? 2 : 12;
        out.push_back(check_symbol_oracle(space, pts, cfg, seed_for("symbol")));
    }
    if (sel.kernel && tube && space.dim <= 2) {
        const double tol = (space.dim == 1) ? 1e-8
                           : (space.family == Family::ParaboloidTube) ? 1e-5
                                                                      : 1e-4;
        const int pairs = (space.dim == 1) ? 6 : 2;
        out.push_back(check_kernel_agreement(space, pairs, tol, cfg, seed_for("kernel")));
    }
    if (sel.reproduction && one_d)
        out.push_back(check_self_reproduction(space, 2, 1e-3, cfg, seed_for("reproduction")));
    if (sel.isometry && one_d) {
        const double pI = (space.family == Family::UnweightedHalfPlane) ? 1.0
                          : (space.family == Family::HalfPlanePower)
                              ? space.param
                              : 2.0 * space.param - 1.0;
        const double m1 = std::max(0.0, 0.5 * (pI - 1.0)) + 0.5;
        out.push_back(
            check_isometry(space, TestProfile::truncated_exponential(1.0, m1), 1e-6, cfg));
        out.push_back(
            check_isometry(space, TestProfile::truncated_exponential(2.0, m1 + 1.0), 1e-6, cfg));
    }
    if (sel.point_eval) out.push_back(check_point_eval_bound(space, 15, seed_for("point-eval")));
    if (sel.extremal && one_d)
        out.push_back(check_extremal(space, 1, 1e-3, cfg, seed_for("extremal")));
    if (sel.pullback) {
        if (space.family == Family::SiegelSpace)
            out.push_back(check_pullback(PullbackPair::SiegelFromParaboloid, space.dim, space.param,
                                         30, 1e-11, seed_for("pullback")));
        if (space.family == Family::BallSpace)
            out.push_back(check_pullback(PullbackPair::BallFromSiegel, space.dim, space.param, 30,
                                         1e-11, seed_for("pullback")));
    }
    if (sel.properties && space.family == Family::LorentzTube)
        out.push_back(check_lorentz_homogeneity(space, 30, 1e-12, seed_for("homogeneity")));
    if (sel.properties && space.family == Family::ParaboloidTube)
        out.push_back(check_degeneration(space.param, 30, 1e-12, seed_for("degeneration")));
    if (sel.properties && space.family == Family::BallSpace && space.dim == 1 &&
        space.param == 0.0)
        out.push_back(check_disc_series_anchor(50, 1e-8, seed_for("disc-series")));
    if (sel.maps && space.family == Family::SiegelSpace) {
        out.push_back(
            check_map_roundtrip(phi_siegel_to_paraboloid_tube(space.dim), 30, 1e-12, seed_for("roundtrip")));
        out.push_back(check_weight_compat(space.dim, space.param, 40, 1e-12, seed_for("weight-compat")));
    }
    if (sel.maps && space.family == Family::BallSpace) {
        out.push_back(
            check_map_roundtrip(cayley_ball_to_siegel(space.dim), 30, 1e-12, seed_for("roundtrip")));
        out.push_back(check_chain_consistency(space.dim, space.param, 20, 1e-11, seed_for("chain")));
    }
    return out;
}

std::vector<CheckReport> run_default_suite(const SuiteSelection& sel, const QuadratureConfig& cfg) {
    std::vector<SpaceSpec> specs;
    specs.push_back(SpaceSpec::unweighted_half_plane());
    for (double v : {0.5, 1.0, 2.5}) specs.push_back(SpaceSpec::half_plane_power(v));
    for (double q : {0.75, 1.0, 1.5}) specs.push_back(SpaceSpec::bergman_selberg(q));
    for (double a : {0.0, 0.5, 1.5}) specs.push_back(SpaceSpec::paraboloid_tube(2, a));
    for (double a : {0.0, 0.5, 1.5}) specs.push_back(SpaceSpec::lorentz_tube(2, a));
    for (int n : {1, 2})
        for (double a : {0.0, 0.5, 1.5}) specs.push_back(SpaceSpec::siegel(n, a));
    for (int n : {1, 2})
        for (double a : {0.0, 0.5, 1.5}) specs.push_back(SpaceSpec::ball(n, a));

    std::vector<CheckReport> out;
    for (const auto& s : specs) {
        auto part = run_suite_for(s, sel, cfg);
        out.insert(out.end(), part.begin(), part.end());
    }
    if (sel.symbol) {
        auto mc = check_symbol_oracle(SpaceSpec::lorentz_tube(3, 0.0), 2, cfg,
                                      derive_seed(cfg.seed, "symbol", "lorentz n=3 alpha=0"));
        out.push_back(mc);
    }
    return out;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json item;
        item["check"] = r.check_name;
        item["space"] = r.space;
        item["samples"] = r.samples;
        item["max_rel_err"] = r.max_rel_err;
        item["tolerance"] = r.tolerance;
        item["passed"] = r.passed;
        item["notes"] = r.notes;
        arr.push_back(item);
    }
    return arr.dump(2) + "\n";
}

}  // namespace bergman
