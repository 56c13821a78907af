#include "bergman/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double ball_volume(int d) {
    if (d == 0) return 1.0;
    return std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}
}  // namespace

McSampler lorentz_cone_sampler(int n, double rate) {
    if (n < 2) throw std::invalid_argument("lorentz_cone_sampler: n must be >= 2");
    if (!(rate > 0.0)) throw std::invalid_argument("lorentz_cone_sampler: rate must be > 0");
    const int d = n - 1;
    const double vol = ball_volume(d);
    McSampler s;
    s.dim = n;
    s.draw = [n, d, rate](std::mt19937_64& rng) {
        std::exponential_distribution<double> expo(rate);
        std::normal_distribution<double> nd(0.0, 1.0);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        const double yn = expo(rng);
        std::vector<double> y(n, 0.0);
        double norm2 = 0.0;
        for (int k = 0; k < d; ++k) {
            y[k] = nd(rng);
            norm2 += y[k] * y[k];
        }
        const double r = yn * std::pow(uni(rng), 1.0 / d);
        const double scale = (norm2 > 0.0) ? r / std::sqrt(norm2) : 0.0;
        for (int k = 0; k < d; ++k) y[k] *= scale;
        y[n - 1] = yn;
        return y;
    };
    s.density = [d, rate, vol](const std::vector<double>& y) {
        const double yn = y.back();
        if (yn <= 0.0) return 0.0;
        double norm2 = 0.0;
        for (int k = 0; k < d; ++k) norm2 += y[k] * y[k];
        if (norm2 >= yn * yn) return 0.0;
        return rate * std::exp(-rate * yn) / (vol * std::pow(yn, d));
    };
    return s;
}

McSampler paraboloid_dual_sampler(int n, double shape, double rate, std::vector<double> drift) {
    if (n < 2) throw std::invalid_argument("paraboloid_dual_sampler: n must be >= 2");
    if (!(shape > 0.0) || !(rate > 0.0))
        throw std::invalid_argument("paraboloid_dual_sampler: shape and rate must be > 0");
    if (static_cast<int>(drift.size()) != n - 1)
        throw std::invalid_argument("paraboloid_dual_sampler: drift must have n-1 entries");
    McSampler s;
    s.dim = n;
    s.draw = [n, shape, rate, drift](std::mt19937_64& rng) {
        std::gamma_distribution<double> gd(shape, 1.0 / rate);
        const double tn = gd(rng);
        std::vector<double> t(n, 0.0);
        std::normal_distribution<double> nd(0.0, std::sqrt(tn / (2.0 * kPi)));
        for (int k = 0; k + 1 < n; ++k) t[k] = drift[k] * tn + nd(rng);
        t[n - 1] = tn;
        return t;
    };
    const double log_gamma_norm = shape * std::log(rate) - std::lgamma(shape);
    s.density = [n, shape, rate, drift, log_gamma_norm](const std::vector<double>& t) {
        const double tn = t.back();
        if (tn <= 0.0) return 0.0;
        const double var = tn / (2.0 * kPi);
        double lg = log_gamma_norm + (shape - 1.0) * std::log(tn) - rate * tn;
        for (int k = 0; k + 1 < n; ++k) {
            const double d = t[k] - drift[k] * tn;
            lg += -0.5 * std::log(2.0 * kPi * var) - d * d / (2.0 * var);
        }
        return std::exp(lg);
    };
    return s;
}

IntegrationResult integrate_mc(const std::function<Complex(const std::vector<double>&)>& f,
                               const McSampler& sampler, const QuadratureConfig& cfg) {
    if (cfg.mc_samples < 2) throw std::invalid_argument("integrate_mc: need at least 2 samples");
    std::mt19937_64 rng(cfg.seed);
    Complex mean(0.0, 0.0);
    double m2 = 0.0;  // running sum of |w - mean|^2 (Welford)
    long count = 0;
    for (long k = 0; k < cfg.mc_samples; ++k) {
        const auto x = sampler.draw(rng);
        const double p = sampler.density(x);
        if (!(p > 0.0) || !std::isfinite(p))
            throw std::logic_error("integrate_mc: sampler density not positive at a drawn sample");
        const Complex w = f(x) / p;
        ++count;
        const Complex delta = w - mean;
        mean += delta / static_cast<double>(count);
        m2 += std::real(delta * std::conj(w - mean));
    }
    IntegrationResult out;
    out.value = mean;
    out.evals = count;
    out.error_estimate = std::sqrt(std::max(m2, 0.0) / (static_cast<double>(count - 1) * count));
    out.converged = std::isfinite(out.error_estimate);
    return out;
}

}  // namespace bergman
