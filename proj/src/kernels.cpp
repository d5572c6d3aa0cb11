#include "monolap/kernels.hpp"

#include <cmath>

#include "monolap/errors.hpp"

namespace monolap::specfun {

namespace {

constexpr double kThreshold = 0.5;

void require_positive(double t, const char* who) {
    if (!(t > 0.0)) throw DomainError(std::string(who) + ": t > 0 required");
}

// csch s = 1/s + sum c_n s^{2n-1}, c_n = 2(1 - 2^{2n-1}) B_{2n} / (2n)!.
constexpr double kCsch[8] = {
    -1.0 / 6.0,
    7.0 / 360.0,
    -31.0 / 15120.0,
    127.0 / 604800.0,
    -73.0 / 3421440.0,
    1414477.0 / 653837184000.0,
    -57337.0 / 261534873600.0,
    118518239.0 / 5335311421440000.0,
};

// 1/(e^t - 1) = 1/t - 1/2 + sum B_{2n} t^{2n-1} / (2n)!.
constexpr double kBernoulliExp[8] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

std::vector<double> differentiate(const std::vector<double>& c) {
    std::vector<double> d;
    if (c.size() <= 1) return {0.0};
    d.resize(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
    return d;
}

// c = a / b as truncated power series, b[0] != 0.
std::vector<double> series_divide(const std::vector<double>& a, const std::vector<double>& b,
                                  std::size_t n) {
    std::vector<double> c(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double s = k < a.size() ? a[k] : 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t i = k - j;
            if (i < b.size()) s -= c[j] * b[i];
        }
        c[k] = s / b[0];
    }
    return c;
}

SeriesBranch make_branch(std::vector<double> coeff, double threshold) {
    SeriesBranch sb;
    sb.threshold = threshold;
    // crude a-posteriori remainder scale: magnitude of last kept term at threshold
    double last = 0.0;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        double term = std::fabs(coeff[k]) * std::pow(threshold, static_cast<double>(k));
        if (coeff[k] != 0.0) last = term;
    }
    sb.remainder_bound = last;
    sb.coefficients = std::move(coeff);
    return sb;
}

struct Tables {
    SeriesBranch q, q2;
    SeriesBranch p1, p1p, p1pp;
    SeriesBranch p2, p2p, p2pp;
    SeriesBranch p3, p3pp;

    Tables() {
        // q: odd powers only, coefficient of t^{2n-1} is -kCsch[n-1] / 2^{2n}
        std::vector<double> qc(16, 0.0);
        for (int n = 1; n <= 8; ++n)
            qc[2 * n - 1] = -kCsch[n - 1] / std::pow(2.0, 2.0 * n);
        q = make_branch(qc, kThreshold);
        q2 = make_branch(differentiate(differentiate(qc)), kThreshold);

        // p1 = 1 - 2 sum B_{2n} t^{2n-1}/(2n)!
        std::vector<double> p1c(16, 0.0);
        p1c[0] = 1.0;
        for (int n = 1; n <= 8; ++n) p1c[2 * n - 1] = -2.0 * kBernoulliExp[n - 1];
        p1 = make_branch(p1c, kThreshold);
        p1p = make_branch(differentiate(p1c), kThreshold);
        p1pp = make_branch(differentiate(differentiate(p1c)), kThreshold);

        // p2 = 2 * [(sinh t - t)/t^2] / [(e^t - 1)/t]
        std::vector<double> num(18, 0.0), den(18, 0.0);
        double fact = 1.0;
        for (std::size_t k = 0; k < den.size(); ++k) {
            fact *= static_cast<double>(k + 1);
            den[k] = 1.0 / fact;  // t^k / (k+1)!
        }
        // (sinh t - t)/t^2 = sum t^{2k+1} / (2k+3)!
        double f3 = 6.0;
        for (std::size_t k = 0; 2 * k + 1 < num.size(); ++k) {
            num[2 * k + 1] = 1.0 / f3;
            f3 *= static_cast<double>(2 * k + 4) * static_cast<double>(2 * k + 5);
        }
        auto p2c = series_divide(num, den, 17);
        for (auto& c : p2c) c *= 2.0;
        p2 = make_branch(p2c, kThreshold);
        p2p = make_branch(differentiate(p2c), kThreshold);
        p2pp = make_branch(differentiate(differentiate(p2c)), kThreshold);

        // p3 = (1 - p1)/2
        std::vector<double> p3c(p1c.size(), 0.0);
        for (std::size_t k = 0; k < p1c.size(); ++k) p3c[k] = -0.5 * p1c[k];
        p3c[0] += 0.5;
        p3 = make_branch(p3c, kThreshold);
        p3pp = make_branch(differentiate(differentiate(p3c)), kThreshold);
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

} // namespace

// Closed forms below are written in powers of e^{-t} so they neither
// overflow nor lose accuracy at large t.

double kernel_q(double t) {
    require_positive(t, "kernel_q");
    if (t < kThreshold) return tables().q.eval(t);
    double es = std::exp(-0.5 * t);
    // 1/(2 sinh(t/2)) = e^{-t/2} / (1 - e^{-t})
    return 1.0 / t - es / (1.0 - es * es);
}

double kernel_q2(double t) {
    require_positive(t, "kernel_q2");
    if (t < kThreshold) return tables().q2.eval(t);
    double e2 = std::exp(-t);  // e^{-2s}, s = t/2
    double es = std::exp(-0.5 * t);
    double csch = 2.0 * es / (1.0 - e2);
    double coth = (1.0 + e2) / (1.0 - e2);
    return 2.0 / (t * t * t) - 0.125 * (csch * coth * coth + csch * csch * csch);
}

double kernel_p1(double t) {
    require_positive(t, "kernel_p1");
    if (t < kThreshold) return tables().p1.eval(t);
    double e = std::exp(-t);
    return 2.0 / t - 2.0 * e / (1.0 - e);
}

double kernel_p1_prime(double t) {
    require_positive(t, "kernel_p1_prime");
    if (t < kThreshold) return tables().p1p.eval(t);
    double e = std::exp(-t);
    double d = 1.0 - e;
    return -2.0 / (t * t) + 2.0 * e / (d * d);
}

double kernel_p1_second(double t) {
    require_positive(t, "kernel_p1_second");
    if (t < kThreshold) return tables().p1pp.eval(t);
    double e = std::exp(-t);
    double d = 1.0 - e;
    return 4.0 / (t * t * t) - 2.0 * e * (1.0 + e) / (d * d * d);
}

double kernel_p2(double t) {
    require_positive(t, "kernel_p2");
    if (t < kThreshold) return tables().p2.eval(t);
    double e = std::exp(-t);
    return (1.0 - 2.0 * t * e - e * e) / (t * (1.0 - e));
}

namespace {
// u = sinh t - t, v = t(e^t - 1) and derivatives, all scaled by e^{-t}
struct P2Parts {
    double u, up, upp, v, vp, vpp;
};
P2Parts p2_parts(double t) {
    double e = std::exp(-t);
    P2Parts p;
    p.u = 0.5 * (1.0 - e * e) - t * e;
    p.up = 0.5 * (1.0 - e) * (1.0 - e);
    p.upp = 0.5 * (1.0 - e * e);
    p.v = t * (1.0 - e);
    p.vp = 1.0 - e + t;
    p.vpp = t + 2.0;
    return p;
}
} // namespace

double kernel_p2_prime(double t) {
    require_positive(t, "kernel_p2_prime");
    if (t < kThreshold) return tables().p2p.eval(t);
    P2Parts p = p2_parts(t);
    return 2.0 * (p.up * p.v - p.u * p.vp) / (p.v * p.v);
}

double kernel_p2_second(double t) {
    require_positive(t, "kernel_p2_second");
    if (t < kThreshold) return tables().p2pp.eval(t);
    P2Parts p = p2_parts(t);
    return 2.0 *
           (p.upp * p.v * p.v - 2.0 * p.up * p.vp * p.v + 2.0 * p.u * p.vp * p.vp -
            p.u * p.v * p.vpp) /
           (p.v * p.v * p.v);
}

double kernel_p3(double t) {
    require_positive(t, "kernel_p3");
    if (t < kThreshold) return tables().p3.eval(t);  // (1 - p1)/2 cancels near 0
    return 0.5 * (1.0 - kernel_p1(t));
}

double kernel_p3_second(double t) {
    require_positive(t, "kernel_p3_second");
    if (t < kThreshold) return tables().p3pp.eval(t);
    return -0.5 * kernel_p1_second(t);
}

double kernel_hv(double v, double t) {
    if (!(v > 0.0) || !(t > 0.0)) throw DomainError("kernel_hv: v > 0 and t > 0 required");
    double e = std::exp(-t);
    double ev2 = std::exp(-2.0 * v * t);
    double inv_cosh1 = 2.0 * e / ((1.0 + e) * (1.0 + e));
    double tanh_vt = (1.0 - ev2) / (1.0 + ev2);
    double tanh_half = (1.0 - e) / (1.0 + e);
    return inv_cosh1 + v * tanh_vt * tanh_half;
}

double kernel_hv_prime(double v, double t) {
    if (!(v > 0.0) || !(t > 0.0)) throw DomainError("kernel_hv_prime: v > 0 and t > 0 required");
    double e = std::exp(-t);
    double ev2 = std::exp(-2.0 * v * t);
    double one_e = 1.0 + e;
    double term1 = -2.0 * e * (1.0 - e) / (one_e * one_e * one_e);
    double sech2_vt = 4.0 * ev2 / ((1.0 + ev2) * (1.0 + ev2));
    double tanh_half = (1.0 - e) / one_e;
    double tanh_vt = (1.0 - ev2) / (1.0 + ev2);
    double sech2_half = 4.0 * e / (one_e * one_e);
    return term1 + v * v * sech2_vt * tanh_half + 0.5 * v * tanh_vt * sech2_half;
}

const SeriesBranch& q_series() { return tables().q; }
const SeriesBranch& q2_series() { return tables().q2; }
const SeriesBranch& p1_series() { return tables().p1; }
const SeriesBranch& p1_prime_series() { return tables().p1p; }
const SeriesBranch& p1_second_series() { return tables().p1pp; }
const SeriesBranch& p2_series() { return tables().p2; }
const SeriesBranch& p2_prime_series() { return tables().p2p; }
const SeriesBranch& p2_second_series() { return tables().p2pp; }
const SeriesBranch& p3_series() { return tables().p3; }
const SeriesBranch& p3_second_series() { return tables().p3pp; }

namespace {
// cosh that saturates instead of producing inf; the product with the
// underflowing weight in the far tail is then 0 rather than NaN.
double cosh_safe(double y) {
    return y > 700.0 ? 5e303 : std::cosh(y);
}
} // namespace

using quadrature::DecayClass;
using quadrature::KernelSpec;
using quadrature::Weight;

KernelSpec spec_one() {
    return {[](double) { return 1.0; }, 0.0, DecayClass::bounded(), "one"};
}

KernelSpec spec_monomial(int k) {
    return {[k](double t) { return std::pow(t, k); }, 0.0,
            DecayClass::polynomial(static_cast<double>(k)), "t^" + std::to_string(k)};
}

KernelSpec spec_power_over_factorial(int n) {
    double fact = 1.0;
    for (int j = 2; j < n; ++j) fact *= j;
    return {[n, fact](double t) { return std::pow(t, n - 1) / fact; }, 0.0,
            DecayClass::polynomial(static_cast<double>(n - 1)),
            "t^" + std::to_string(n - 1) + "/(n-1)!"};
}

KernelSpec spec_q() {
    return {[](double t) { return kernel_q(t); }, kThreshold, DecayClass::bounded(), "q"};
}

KernelSpec spec_neg24_q2() {
    return {[](double t) { return -24.0 * kernel_q2(t); }, kThreshold, DecayClass::bounded(),
            "-24*q''"};
}

KernelSpec spec_p1() {
    return {[](double t) { return kernel_p1(t); }, kThreshold, DecayClass::bounded(), "p1"};
}

KernelSpec spec_neg_p1_prime() {
    return {[](double t) { return -kernel_p1_prime(t); }, kThreshold, DecayClass::bounded(),
            "-p1'"};
}

KernelSpec spec_p2() {
    return {[](double t) { return kernel_p2(t); }, kThreshold, DecayClass::bounded(), "p2"};
}

KernelSpec spec_l_numerator() {
    return {[](double t) { return -6.0 * (kernel_p2_second(t) + kernel_p2_prime(t)); },
            kThreshold, DecayClass::bounded(), "-6*(p2''+p2')"};
}

KernelSpec spec_p3() {
    return {[](double t) { return kernel_p3(t); }, kThreshold, DecayClass::bounded(), "p3"};
}

KernelSpec spec_q_numerator() {
    return {[](double t) { return -12.0 * kernel_p3_second(t); }, kThreshold,
            DecayClass::bounded(), "-12*p3''"};
}

KernelSpec spec_bessel_g(double v) {
    double av = std::fabs(v);
    if (av == 0.0) return {[](double) { return 1.0; }, 0.0, DecayClass::bounded(), "cosh(0)"};
    return {[av](double t) { return cosh_safe(av * t); }, 0.0, DecayClass::exponential(av),
            "cosh(vt)"};
}

KernelSpec spec_bessel_f(double v) {
    double av = std::fabs(v);
    if (av == 0.0) {
        return {[](double t) {
                    double e = std::exp(-t);
                    return -2.0 * e / ((1.0 + e) * (1.0 + e));  // -1/(cosh t + 1)
                },
                0.0, DecayClass::bounded(), "-1/(cosh t+1)"};
    }
    return {[av](double t) { return -kernel_hv(av, t) * cosh_safe(av * t); }, 0.0,
            DecayClass::exponential(av), "-h_v*cosh(vt)"};
}

Weight weight_cosh() {
    return Weight::mu_exp([](double t) { return std::cosh(t); }, "cosh");
}

Weight weight_cosh_minus_one() {
    // 2 sinh^2(t/2) = cosh t - 1 without cancellation near 0
    return Weight::mu_exp(
        [](double t) {
            double s = std::sinh(0.5 * t);
            return 2.0 * s * s;
        },
        "cosh-1");
}

} // namespace monolap::specfun
