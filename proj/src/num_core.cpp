#include "bergman/num_core.hpp"

#include <cmath>

namespace bergman {

double gamma_fn(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("gamma_fn: argument must be finite and positive");
    return std::tgamma(x);
}

double log_gamma(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("log_gamma: argument must be finite and positive");
    return std::lgamma(x);
}

double beta_fn(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0)
        throw std::domain_error("beta_fn: arguments must be finite and positive");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

bool on_branch_cut(Complex w) { return w.imag() == 0.0 && w.real() <= 0.0; }

Complex principal_pow(Complex w, double s) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || !std::isfinite(s))
        throw std::domain_error("principal_pow: non-finite argument");
    if (on_branch_cut(w))
        throw BranchCutError("principal_pow: base on the cut (-inf, 0]");
    return std::exp(s * std::log(w));
}

std::vector<double> real_part(const CPoint& z) {
    std::vector<double> r(z.size());
    for (size_t k = 0; k < z.size(); ++k) r[k] = z[k].real();
    return r;
}

std::vector<double> imag_part(const CPoint& z) {
    std::vector<double> r(z.size());
    for (size_t k = 0; k < z.size(); ++k) r[k] = z[k].imag();
    return r;
}

CPoint sub_conj(const CPoint& z, const CPoint& w) {
    if (z.size() != w.size())
        throw std::invalid_argument("sub_conj: dimension mismatch");
    CPoint r(z.size());
    for (size_t k = 0; k < z.size(); ++k) r[k] = z[k] - std::conj(w[k]);
    return r;
}

Complex bilinear_dot(const CPoint& a, const CPoint& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("bilinear_dot: dimension mismatch");
    Complex s(0.0, 0.0);
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

Complex dot_z_wbar(const CPoint& z, const CPoint& w) {
    if (z.size() != w.size())
        throw std::invalid_argument("dot_z_wbar: dimension mismatch");
    Complex s(0.0, 0.0);
    for (size_t k = 0; k < z.size(); ++k) s += z[k] * std::conj(w[k]);
    return s;
}

double sq_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

double sq_norm_head(const CPoint& z) {
    double s = 0.0;
    for (size_t k = 0; k + 1 < z.size(); ++k) s += std::norm(z[k]);
    return s;
}

}  // namespace bergman
