#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <vector>

#include "bergman/num_core.hpp"

namespace bergman {

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    long max_evals = 2'000'000;
    long mc_samples = 1'000'000;
    std::uint64_t seed = 0;
};

struct IntegrationResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    long evals = 0;
    bool converged = false;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (QUADPACK dqk15).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kK15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    Complex val;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

// One 15-point Kronrod panel with embedded 7-point Gauss error estimate.
template <class F>
Panel gk15_panel(F&& f, double a, double b, long& evals) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    Complex fv[15];
    double x[15];
    int m = 0;
    for (int j = 0; j < 7; ++j) {
        x[m++] = c - h * kGK15Nodes[j];
        x[m++] = c + h * kGK15Nodes[j];
    }
    x[m++] = c;
    for (int j = 0; j < 15; ++j) fv[j] = f(x[j]);
    evals += 15;

    Complex k15(0.0, 0.0), g7(0.0, 0.0);
    double resabs = 0.0;
    for (int j = 0; j < 7; ++j) {
        const Complex s = fv[2 * j] + fv[2 * j + 1];
        k15 += kK15Weights[j] * s;
        resabs += kK15Weights[j] * (std::abs(fv[2 * j]) + std::abs(fv[2 * j + 1]));
        if (j % 2 == 1) g7 += kG7Weights[(j - 1) / 2] * s;  // Kronrod odd entries are Gauss nodes
    }
    k15 += kK15Weights[7] * fv[14];
    resabs += kK15Weights[7] * std::abs(fv[14]);
    g7 += kG7Weights[3] * fv[14];

    k15 *= h;
    g7 *= h;
    resabs *= std::abs(h);

    const Complex mean = k15 / (b - a);
    double resasc = 0.0;
    for (int j = 0; j < 7; ++j)
        resasc += kK15Weights[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
    resasc += kK15Weights[7] * std::abs(fv[14] - mean);
    resasc *= std::abs(h);

    double err = std::abs(k15 - g7);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round_floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    err = std::max(err, round_floor);
    return Panel{a, b, k15, err};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod on [a, b]: repeatedly bisects the panel
// with the largest error estimate until sum(err) <= max(rel|I|, abs).
template <class F>
IntegrationResult adaptive_gk15(F&& f, double a, double b, const QuadratureConfig& cfg,
                                const std::vector<double>& breakpoints = {}) {
    IntegrationResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<detail::Panel> heap;
    Complex total(0.0, 0.0);
    double toterr = 0.0;

    std::vector<double> edges;
    edges.push_back(a);
    for (double t : breakpoints)
        if (t > a && t < b) edges.push_back(t);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    for (size_t j = 0; j + 1 < edges.size(); ++j) {
        auto p = detail::gk15_panel(f, edges[j], edges[j + 1], out.evals);
        total += p.val;
        toterr += p.err;
        heap.push(p);
    }

    const double min_width = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(a) + std::abs(b) + 1.0);
    while (toterr > std::max(cfg.rel_tol * std::abs(total), cfg.abs_tol) && out.evals + 30 <= cfg.max_evals) {
        detail::Panel worst = heap.top();
        if (worst.b - worst.a <= min_width) break;
        heap.pop();
        total -= worst.val;
        toterr -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = detail::gk15_panel(f, worst.a, mid, out.evals);
        auto right = detail::gk15_panel(f, mid, worst.b, out.evals);
        total += left.val + right.val;
        toterr += left.err + right.err;
        heap.push(left);
        heap.push(right);
    }
    out.value = total;
    out.error_estimate = toterr;
    out.converged = toterr <= std::max(cfg.rel_tol * std::abs(total), cfg.abs_tol);
    return out;
}

// Integral over (0, inf) of an integrand satisfying |f(t)| <= M exp(-decay_rate t)
// for t past the envelope bulk (M probed from samples). The tail beyond the
// truncation point is bounded analytically and folded into the error estimate.
template <class F>
IntegrationResult integrate_semi_infinite(F&& f, double decay_rate, const QuadratureConfig& cfg) {
    const double lam = decay_rate;
    double M = 0.0;
    {
        const double lo = 0.5 / lam, hi = 30.0 / lam;
        for (int j = 0; j < 24; ++j) {
            const double t = lo * std::pow(hi / lo, j / 23.0);
            const double v = std::abs(f(t)) * std::exp(std::min(lam * t, 690.0));
            if (std::isfinite(v)) M = std::max(M, v);
        }
    }
    if (M == 0.0) M = 1.0;

    double T = std::max(2.0 / lam, std::log(std::max(M / std::max(cfg.abs_tol, 1e-280), 10.0)) / lam);
    IntegrationResult res;
    double tail = 0.0;
    long total_evals = 24;
    for (int iter = 0; iter < 10; ++iter) {
        res = adaptive_gk15(f, 0.0, T, cfg, {std::min(1.0 / lam, T / 2.0)});
        total_evals += res.evals;
        tail = M * std::exp(-lam * T) / lam;
        if (tail <= std::max(cfg.abs_tol, 0.1 * cfg.rel_tol * std::abs(res.value))) break;
        T *= 1.6;
    }
    res.evals = total_evals;
    res.error_estimate += tail;
    res.converged = res.error_estimate <= std::max(cfg.rel_tol * std::abs(res.value), cfg.abs_tol);
    return res;
}

// Integral over the whole line by symmetric segment doubling around `center`.
// Stops once two consecutive shells contribute below tolerance; the last
// shell magnitude is retained as a tail term in the error estimate.
template <class F>
IntegrationResult integrate_real_line(F&& f, double center, double width0, const QuadratureConfig& cfg) {
    IntegrationResult out;
    QuadratureConfig seg = cfg;
    auto run = [&](double lo, double hi) {
        auto r = adaptive_gk15(f, lo, hi, seg);
        out.evals += r.evals;
        out.error_estimate += r.error_estimate;
        return r.value;
    };
    double w = std::max(width0, 1e-8);
    Complex total = run(center - w, center + w);
    double lo = center - w, hi = center + w;
    int calm = 0;
    double last_shell = 0.0;
    for (int iter = 0; iter < 48 && calm < 2; ++iter) {
        const Complex right = run(hi, hi + w);
        const Complex left = run(lo - w, lo);
        hi += w;
        lo -= w;
        w *= 2.0;
        total += left + right;
        last_shell = std::abs(left) + std::abs(right);
        if (last_shell <= 0.25 * std::max(cfg.rel_tol * std::abs(total), cfg.abs_tol))
            ++calm;
        else
            calm = 0;
    }
    out.value = total;
    out.error_estimate += last_shell;
    out.converged = calm >= 2 && out.error_estimate <= std::max(4.0 * cfg.rel_tol * std::abs(total), cfg.abs_tol);
    return out;
}

enum class ConeKind { Paraboloid2, Lorentz2 };

// Iterated adaptive quadrature of f(y1, y2) over a planar cone base, in
// cone-adapted coordinates. `decay` = (d1, d2) is the linear decay hint:
// |f(y)| <~ M exp(-d1 y1 - d2 y2). For Paraboloid2 the shift
// y = (x1, x2 + x1^2) straightens the boundary; for Lorentz2 the hyperbolic
// substitution y = (xi sinh th, xi cosh th), Jacobian xi, is used.
template <class F>
IntegrationResult integrate_cone_2d(F&& f, ConeKind kind, double d1, double d2,
                                    const QuadratureConfig& cfg) {
    IntegrationResult out;
    QuadratureConfig inner_cfg = cfg;
    inner_cfg.rel_tol = std::max(cfg.rel_tol / 20.0, 1e-13);
    inner_cfg.max_evals = std::min<long>(cfg.max_evals, 40'000);
    double worst_bad_rel = 0.0;
    bool inner_all_converged = true;

    // A converged slice is charged its certified tolerance, not its measured
    // error ratio: tail slices with tiny values converge through abs_tol and
    // their (absolutely negligible) errors must not be scaled up to the outer
    // value. Only slices that missed their certificate are charged as seen.
    auto note_inner = [&](const IntegrationResult& r) {
        out.evals += r.evals;
        if (!r.converged) {
            inner_all_converged = false;
            if (std::abs(r.value) > 0.0)
                worst_bad_rel = std::max(worst_bad_rel, r.error_estimate / std::abs(r.value));
        }
    };

    IntegrationResult outer;
    if (kind == ConeKind::Paraboloid2) {
        // After the shift, |integrand| <~ exp(-d2 x1^2 - d1 x1) in x1.
        const double L = std::log(1.0 / std::max(cfg.rel_tol * 1e-3, 1e-300)) + 5.0;
        const double R = (std::abs(d1) + std::sqrt(d1 * d1 + 4.0 * d2 * L)) / (2.0 * d2);
        auto outer_f = [&](double x2) -> Complex {
            auto r = adaptive_gk15([&](double x1) { return f(x1, x2 + x1 * x1); }, -R, R, inner_cfg);
            note_inner(r);
            return r.value;
        };
        outer = integrate_semi_infinite(outer_f, d2, cfg);
    } else {
        const double th0 = (d2 > std::abs(d1)) ? std::atanh(-d1 / d2) : 0.0;
        auto outer_f = [&](double th) -> Complex {
            const double sh = std::sinh(th), ch = std::cosh(th);
            const double lam = d1 * sh + d2 * ch;
            auto r = integrate_semi_infinite(
                [&](double xi) { return f(xi * sh, xi * ch) * xi; }, lam, inner_cfg);
            note_inner(r);
            return r.value;
        };
        outer = integrate_real_line(outer_f, th0, 1.0, cfg);
    }
    out.value = outer.value;
    out.error_estimate = outer.error_estimate +
                         3.0 * (inner_cfg.rel_tol + worst_bad_rel) * std::abs(outer.value) +
                         10.0 * inner_cfg.abs_tol;
    out.converged =
        inner_all_converged && outer.converged &&
        out.error_estimate <= std::max(30.0 * cfg.rel_tol * std::abs(out.value), 20.0 * cfg.abs_tol);
    return out;
}

// Importance sampler over a region of R^d with known proposal density.
struct McSampler {
    int dim;
    std::function<std::vector<double>(std::mt19937_64&)> draw;
    std::function<double(const std::vector<double>&)> density;
};

// Sampler over the open Lorentz cone { y_n > |y'| }: y_n ~ Exp(rate),
// y' uniform in the (n-1)-ball of radius y_n.
McSampler lorentz_cone_sampler(int n, double rate);

// Sampler over the half-space { t_n > 0 } adapted to Gaussian-in-t' kernels:
// t_n ~ Gamma(shape, rate), t_k ~ N(mean_k(t_n), t_n/(2 pi)).
McSampler paraboloid_dual_sampler(int n, double shape, double rate, std::vector<double> drift);

// Monte Carlo mean of f/p over the sampler's region; error_estimate is the
// standard error of the mean and `converged` only signals that the variance
// estimate is finite -- accuracy is statistical, so callers should judge
// agreement in multiples of error_estimate. Deterministic for a fixed seed.
IntegrationResult integrate_mc(const std::function<Complex(const std::vector<double>&)>& f,
                               const McSampler& sampler, const QuadratureConfig& cfg);

}  // namespace bergman
