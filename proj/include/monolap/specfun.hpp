#pragma once

#include "monolap/kernels.hpp"
#include "monolap/quadrature.hpp"

namespace monolap::specfun {

// psi(x) by upward recurrence into the asymptotic regime (x >= 12, 8-term
// tail). Relative error <= 1e-12 on (0, inf).
double digamma(double x);

// psi(z) - ln z, stable for large z (no cancellation).
double digamma_minus_log(double z);

// psi(x+1) - ln x; the denominator of A(x).
double digamma_plus_one_minus_log(double x);

// psi(x+1/2) - ln x; the denominator of Phi(x).
double digamma_plus_half_minus_log(double x);

// ln x + 1/(2x) - psi(x+1); the denominator of Q(x). Fused to survive the
// 1/(12x^2) cancellation at large x.
double log_plus_half_inv_minus_digamma(double x);

// 2 psi(x+1) - ln(x(x+1)); the denominator of L(x).
double two_digamma_minus_log_product(double x);

// K_v(x) from the integral representation; symmetry K_v = K_{-v} applied
// first. Documented range |v| <= 50, x in [1e-3, 1e3].
double bessel_k(double v, double x, const quadrature::QuadConfig& cfg = {});

// K_v'(x) = -integral of cosh t cosh(vt) e^{-x cosh t}; always negative.
double bessel_k_prime(double v, double x, const quadrature::QuadConfig& cfg = {});

// e^x K_v(x) and e^x K_v'(x) via the shifted weight cosh t - 1. These stay
// O(1)-scaled for large x and are what ratio work should use.
double bessel_k_scaled(double v, double x, const quadrature::QuadConfig& cfg = {});
double bessel_k_prime_scaled(double v, double x, const quadrature::QuadConfig& cfg = {});

// x K_v'(x)/K_v(x), computed from the scaled pair.
double bessel_log_deriv(double v, double x, const quadrature::QuadConfig& cfg = {});

} // namespace monolap::specfun
