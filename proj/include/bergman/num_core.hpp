#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bergman {

using Complex = std::complex<double>;
using CPoint = std::vector<Complex>;

// Thrown when a principal power is requested on the cut (-inf, 0].
struct BranchCutError : std::domain_error {
    explicit BranchCutError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a quadrature routine cannot meet its tolerance; carries the
// best estimate produced so far.
struct ConvergenceError : std::runtime_error {
    Complex partial;
    double error_bound;
    ConvergenceError(const std::string& what, Complex p, double e)
        : std::runtime_error(what), partial(p), error_bound(e) {}
};

struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Gamma function on the positive real axis. Arguments must be finite and > 0.
double gamma_fn(double x);
double log_gamma(double x);

// Euler beta, computed in log space so beta(a,b) == beta(b,a) exactly.
double beta_fn(double a, double b);

// Principal branch power w^s = exp(s(log|w| + i Arg w)), Arg in (-pi, pi).
// Throws BranchCutError when w lies on (-inf, 0].
Complex principal_pow(Complex w, double s);
bool on_branch_cut(Complex w);

// Small vector helpers for points in C^n.
std::vector<double> real_part(const CPoint& z);
std::vector<double> imag_part(const CPoint& z);

// z - conj(w), componentwise.
CPoint sub_conj(const CPoint& z, const CPoint& w);

// Bilinear dot sum_k a_k b_k (no conjugation).
Complex bilinear_dot(const CPoint& a, const CPoint& b);

// Hermitian pairing sum_k z_k conj(w_k).
Complex dot_z_wbar(const CPoint& z, const CPoint& w);

double sq_norm(std::span<const double> v);
double sq_norm_head(const CPoint& z);  // |z'|^2 = sum_{k<n-1} |z_k|^2

inline Complex imag_unit() { return Complex(0.0, 1.0); }

}  // namespace bergman
