#include "monolap/specfun.hpp"

#include <cmath>

#include "monolap/errors.hpp"

namespace monolap::specfun {

namespace {

// psi(z) ~ ln z - 1/(2z) - sum B_{2k}/(2k z^{2k}); coefficients of z^{-2k}.
constexpr double kPsiTail[8] = {
    -1.0 / 12.0,       1.0 / 120.0,  -1.0 / 252.0,       1.0 / 240.0,
    -1.0 / 132.0,      691.0 / 32760.0, -1.0 / 12.0,     3617.0 / 8160.0,
};

constexpr double kAsymCut = 12.0;

// sum over the 8-term tail at argument z >= 12; signs baked into the table
double psi_tail(double z) {
    double w = 1.0 / (z * z);
    double acc = 0.0;
    double p = w;
    for (int k = 0; k < 8; ++k) {
        acc += kPsiTail[k] * p;
        p *= w;
    }
    return acc;
}

} // namespace

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma: x > 0 required");
    double acc = 0.0;
    while (x < kAsymCut) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    return acc + std::log(x) - 0.5 / x + psi_tail(x);
}

double digamma_minus_log(double z) {
    if (!(z > 0.0)) throw DomainError("digamma_minus_log: z > 0 required");
    if (z >= kAsymCut) return -0.5 / z + psi_tail(z);
    return digamma(z) - std::log(z);
}

namespace {

// Watson's lemma on the kernel's Maclaurin series: the Laplace transform of
// sum c_k t^k expands as sum c_k k! / x^{k+1}. At x >= 12 this evaluates the
// digamma differences without any cancellation; the kernels' series carry
// enough terms for ~1e-15 relative truncation there.
double watson(const std::vector<double>& coeff, double x) {
    double acc = 0.0;
    double fact = 1.0;           // k!
    double xpow = 1.0 / x;       // x^{-(k+1)}
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        if (k > 0) fact *= static_cast<double>(k);
        if (coeff[k] != 0.0) acc += coeff[k] * fact * xpow;
        xpow /= x;
    }
    return acc;
}

} // namespace

double digamma_plus_one_minus_log(double x) {
    if (!(x > 0.0)) throw DomainError("digamma_plus_one_minus_log: x > 0 required");
    // psi(x+1) - ln x = (1/2) L(p1)(x)
    if (x >= kAsymCut) return 0.5 * watson(p1_series().coefficients, x);
    return digamma(x + 1.0) - std::log(x);
}

double digamma_plus_half_minus_log(double x) {
    if (!(x > 0.0)) throw DomainError("digamma_plus_half_minus_log: x > 0 required");
    // psi(x+1/2) - ln x = L(q)(x)
    if (x >= kAsymCut) return watson(q_series().coefficients, x);
    return digamma(x + 0.5) - std::log(x);
}

double log_plus_half_inv_minus_digamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_plus_half_inv_minus_digamma: x > 0 required");
    // ln x + 1/(2x) - psi(x+1) = L(p3)(x)
    if (x >= kAsymCut) return watson(p3_series().coefficients, x);
    return std::log(x) + 0.5 / x - digamma(x + 1.0);
}

double two_digamma_minus_log_product(double x) {
    if (!(x > 0.0)) throw DomainError("two_digamma_minus_log_product: x > 0 required");
    // 2 psi(x+1) - ln(x(x+1)) = L(p2)(x)
    if (x >= kAsymCut) return watson(p2_series().coefficients, x);
    return digamma_plus_one_minus_log(x) + digamma_minus_log(x + 1.0);
}

namespace {

void check_bessel_domain(double v, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k: x > 0 required");
    if (std::fabs(v) > 50.0)
        throw DomainError("bessel_k: |v| <= 50 supported (integral representation)");
}

quadrature::TransformSpec scaled_spec(double v) {
    quadrature::TransformSpec spec;
    spec.kernel = spec_bessel_g(std::fabs(v));
    spec.weight = weight_cosh_minus_one();
    return spec;
}

} // namespace

double bessel_k_scaled(double v, double x, const quadrature::QuadConfig& cfg) {
    check_bessel_domain(v, x);
    auto res = quadrature::integrate(scaled_spec(v), x, cfg);
    return res.value;
}

double bessel_k_prime_scaled(double v, double x, const quadrature::QuadConfig& cfg) {
    check_bessel_domain(v, x);
    double av = std::fabs(v);
    quadrature::TransformSpec spec;
    // cosh t cosh(vt) grows like e^{(1+v)t}
    spec.kernel = {[av](double t) {
                       double c = std::cosh(t);
                       double cv = av == 0.0 ? 1.0 : std::cosh(av * t);
                       double prod = c * cv;
                       return -(std::isfinite(prod) ? prod : 5e303);
                   },
                   0.0, quadrature::DecayClass::exponential(1.0 + av), "-cosh(t)cosh(vt)"};
    spec.weight = weight_cosh_minus_one();
    return quadrature::integrate(spec, x, cfg).value;
}

double bessel_k(double v, double x, const quadrature::QuadConfig& cfg) {
    return std::exp(-x) * bessel_k_scaled(v, x, cfg);
}

double bessel_k_prime(double v, double x, const quadrature::QuadConfig& cfg) {
    return std::exp(-x) * bessel_k_prime_scaled(v, x, cfg);
}

double bessel_log_deriv(double v, double x, const quadrature::QuadConfig& cfg) {
    double s = bessel_k_scaled(v, x, cfg);
    double sp = bessel_k_prime_scaled(v, x, cfg);
    if (std::fabs(s) < 1e-300) throw DegenerateDivisionError("bessel_log_deriv: K_v underflow");
    return x * sp / s;
}

} // namespace monolap::specfun
