#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "monolap/kernels.hpp"
#include "monolap/specfun.hpp"

using namespace monolap;
using namespace monolap::specfun;

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;
constexpr double kPi = 3.1415926535897932384626433832795029;

// Independent gamma-constant oracle: partial harmonic sum with Euler-Maclaurin
// correction, long double. Error ~ 1/(252 N^6).
long double euler_gamma_oracle() {
    const long N = 1000000;
    long double h = 0.0L;
    for (long k = N; k >= 1; --k) h += 1.0L / static_cast<long double>(k);
    long double n = static_cast<long double>(N);
    return h - std::log(n) - 1.0L / (2.0L * n) + 1.0L / (12.0L * n * n) -
           1.0L / (120.0L * n * n * n * n);
}
const double kGamma = static_cast<double>(euler_gamma_oracle());

// Series oracle for K_0, K_1 at small arguments (independent of the integral
// representation): K_0 = -(ln(x/2)+gamma) I_0 + sum H_k (x^2/4)^k/(k!)^2,
// K_1 = 1/x + ln(x/2) I_1 - (x/4) sum (H_k + H_{k+1}) (x^2/4)^k/(k!(k+1)!).
double k0_series_oracle(double x) {
    long double q = x * x / 4.0L;
    long double i0 = 0.0L, s = 0.0L, term = 1.0L, hk = 0.0L;
    for (int k = 0; k < 40; ++k) {
        i0 += term;
        s += term * hk;
        term *= q / ((k + 1.0L) * (k + 1.0L));
        hk += 1.0L / (k + 1.0L);
    }
    return static_cast<double>(-(std::log(x / 2.0L) + (long double)kGamma) * i0 + s);
}

double k1_series_oracle(double x) {
    long double q = x * x / 4.0L;
    long double i1 = 0.0L, s = 0.0L;
    long double term = 1.0L;  // q^k / (k! (k+1)!)
    long double hk = 0.0L, hk1 = 1.0L;
    for (int k = 0; k < 40; ++k) {
        i1 += term;
        s += term * (hk + hk1);
        term *= q / ((k + 1.0L) * (k + 2.0L));
        hk += 1.0L / (k + 1.0L);
        hk1 += 1.0L / (k + 2.0L);
    }
    i1 *= x / 2.0L;
    // K_1 = 1/x + (ln(x/2) + gamma) I_1 - (x/4) sum (H_k + H_{k+1}) q^k/(k!(k+1)!)
    return static_cast<double>(1.0L / x + (std::log(x / 2.0L) + (long double)kGamma) * i1 -
                               (x / 4.0L) * s);
}

} // namespace

TEST_CASE("gamma oracle sanity") {
    CHECK(std::fabs(kGamma - 0.5772156649015329) < 1e-14);
}

TEST_CASE("digamma closed forms") {
    CHECK(std::fabs(digamma(1.0) + kGamma) < 1e-13);
    CHECK(std::fabs(digamma(0.5) + kGamma + 2.0 * kLn2) < 1e-12 * 1.97);
    CHECK(std::fabs(digamma(2.0) - digamma(1.0) - 1.0) < 1e-13);
    CHECK(std::fabs(digamma(1.5) - (2.0 - kGamma - 2.0 * kLn2)) < 1e-12);
    CHECK_THROWS_AS(digamma(0.0), DomainError);
    CHECK_THROWS_AS(digamma(-1.5), DomainError);
}

TEST_CASE("digamma recurrence residuals") {
    for (double x : {0.3, 1.7, 9.2}) {
        double res = digamma(x + 1.0) - digamma(x) - 1.0 / x;
        CHECK(std::fabs(res) <= 1e-12 * (std::fabs(digamma(x)) + 1.0));
    }
}

TEST_CASE("stable digamma-minus-log forms match the direct difference") {
    for (double x : {0.2, 1.0, 5.0, 11.0, 13.0, 50.0}) {
        CHECK(digamma_plus_one_minus_log(x) ==
              doctest::Approx(digamma(x + 1.0) - std::log(x)).epsilon(1e-11));
        CHECK(digamma_plus_half_minus_log(x) ==
              doctest::Approx(digamma(x + 0.5) - std::log(x)).epsilon(1e-11));
        CHECK(log_plus_half_inv_minus_digamma(x) ==
              doctest::Approx(std::log(x) + 0.5 / x - digamma(x + 1.0)).epsilon(1e-9));
    }
    // large-x asymptotics: psi(x+1/2) - ln x ~ 1/(24 x^2)
    double d = digamma_plus_half_minus_log(1e6);
    CHECK(d * 24.0 * 1e12 == doctest::Approx(1.0).epsilon(1e-6));
    // ln x + 1/(2x) - psi(x+1) ~ 1/(12 x^2)
    double dq = log_plus_half_inv_minus_digamma(1e6);
    CHECK(dq * 12.0 * 1e12 == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("q kernel limits") {
    CHECK(kernel_q(1e-8) / 1e-8 == doctest::Approx(1.0 / 24.0).epsilon(1e-12));
    CHECK(kernel_q(60.0) * 60.0 == doctest::Approx(1.0).epsilon(1e-10));
    // -24 q''/q -> 21/5 as t -> 0+
    double t = 1e-4;
    CHECK(-24.0 * kernel_q2(t) / kernel_q(t) == doctest::Approx(4.2).epsilon(1e-6));
    CHECK_THROWS_AS(kernel_q(0.0), DomainError);
    CHECK_THROWS_AS(kernel_q2(-1.0), DomainError);
}

TEST_CASE("series and direct branches agree at the threshold") {
    struct Probe {
        const SeriesBranch& sb;
        double (*direct)(double);
    };
    // evaluate both representations exactly at the switch point
    std::vector<std::pair<const SeriesBranch*, double>> pairs = {
        {&q_series(), kernel_q(0.5)},
        {&q2_series(), kernel_q2(0.5)},
        {&p1_series(), kernel_p1(0.5)},
        {&p1_prime_series(), kernel_p1_prime(0.5)},
        {&p1_second_series(), kernel_p1_second(0.5)},
        {&p2_series(), kernel_p2(0.5)},
        {&p2_prime_series(), kernel_p2_prime(0.5)},
        {&p2_second_series(), kernel_p2_second(0.5)},
        {&p3_series(), kernel_p3(0.5)},
        {&p3_second_series(), kernel_p3_second(0.5)},
    };
    for (auto& [sb, direct] : pairs) {
        REQUIRE(sb->coefficients.size() >= 8);
        double series = sb->eval(sb->threshold);
        CHECK(std::fabs(series - direct) <= 1e-12 * std::max(1e-6, std::fabs(direct)));
    }
}

TEST_CASE("p kernel limits and signs") {
    CHECK(kernel_p1(1e-9) == doctest::Approx(1.0).epsilon(1e-9));  // deviation is t/6
    CHECK(kernel_p3(1e-7) / 1e-7 == doctest::Approx(1.0 / 12.0).epsilon(1e-10));
    for (double t : {0.1, 1.0, 10.0}) CHECK(kernel_p2(t) > 0.0);
    // p3 = (1 - p1)/2 identity spot check against the closed coth form
    for (double t : {0.7, 2.0, 9.0}) {
        double coth_form = 0.5 * (std::cosh(0.5 * t) / std::sinh(0.5 * t) - 2.0 / t);
        CHECK(kernel_p3(t) == doctest::Approx(coth_form).epsilon(1e-13));
    }
}

TEST_CASE("h_v closed form and limits") {
    // direct formula at v=1, t=1: (cosh1 + sinh^2 1)/((cosh1+1) cosh1)
    double c1 = std::cosh(1.0), s1 = std::sinh(1.0);
    double direct = (c1 + s1 * s1) / ((c1 + 1.0) * c1);
    CHECK(kernel_hv(1.0, 1.0) == doctest::Approx(direct).epsilon(1e-14));
    CHECK(direct == doctest::Approx(0.7451695928190784).epsilon(1e-13));
    // t -> 0+: 1/2 for any v; t -> inf: v
    for (double v : {0.25, 0.75, 1.0, 3.0}) {
        CHECK(kernel_hv(v, 1e-8) == doctest::Approx(0.5).epsilon(1e-8));
        CHECK(kernel_hv(v, 800.0) == doctest::Approx(v).epsilon(1e-12));
    }
    CHECK_THROWS_AS(kernel_hv(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(kernel_hv(1.0, 0.0), DomainError);
}

TEST_CASE("h_v bounds per regime") {
    for (double v : {0.1, 0.25, 0.4}) {
        for (double t = 0.05; t < 40.0; t *= 1.7) CHECK(kernel_hv(v, t) < 0.5);
    }
    for (double v : {1.0, 2.0, 5.0}) {
        for (double t = 0.05; t < 40.0; t *= 1.7) {
            CHECK(kernel_hv(v, t) > 0.5);
            CHECK(kernel_hv(v, t) < v);
        }
    }
}

TEST_CASE("h_v prime matches finite differences") {
    for (double v : {0.25, 0.75, 1.5}) {
        for (double t : {0.3, 1.0, 4.0, 12.0}) {
            double h = 1e-6;
            double fd = (kernel_hv(v, t + h) - kernel_hv(v, t - h)) / (2.0 * h);
            CHECK(kernel_hv_prime(v, t) == doctest::Approx(fd).epsilon(1e-7));
        }
    }
    // h_{1/2} is constant
    for (double t : {0.2, 3.0, 30.0}) CHECK(std::fabs(kernel_hv_prime(0.5, t)) < 1e-15);
}

TEST_CASE("K_{1/2} closed form at several x") {
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
        double closed = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
        double viaint = bessel_k(0.5, x);
        CHECK(std::fabs(viaint - closed) <= 1e-9 * closed);
    }
    CHECK(bessel_k(0.5, 1.0) == doctest::Approx(0.4610685044478945).epsilon(1e-10));
}

TEST_CASE("K symmetry in v") {
    CHECK(bessel_k(-3.0, 2.0) == bessel_k(3.0, 2.0));
    CHECK(bessel_k_prime(-0.75, 1.3) == bessel_k_prime(0.75, 1.3));
}

TEST_CASE("K_0 and K_1 against the series oracle") {
    for (double x : {0.5, 1.0, 2.0}) {
        CHECK(bessel_k(0.0, x) == doctest::Approx(k0_series_oracle(x)).epsilon(1e-10));
        CHECK(bessel_k(1.0, x) == doctest::Approx(k1_series_oracle(x)).epsilon(1e-10));
    }
    CHECK(bessel_k(0.0, 1.0) == doctest::Approx(0.4210244382407083).epsilon(1e-10));
    CHECK(bessel_k(1.0, 1.0) == doctest::Approx(0.6019072301972346).epsilon(1e-10));
}

TEST_CASE("K_{1/2}' closed form") {
    double k = bessel_k(0.5, 1.0);
    CHECK(bessel_k_prime(0.5, 1.0) == doctest::Approx(-1.5 * k).epsilon(1e-9));
    CHECK(bessel_k_prime(1.0, 1.0) < 0.0);
}

TEST_CASE("recurrence x K_v'/K_v + v + x K_{v-1}/K_v = 0") {
    double v = 2.0, x = 3.0;
    double residual = bessel_log_deriv(v, x) + v +
                      x * bessel_k(v - 1.0, x) / bessel_k(v, x);
    CHECK(std::fabs(residual) < 1e-9);
}

TEST_CASE("Turan identity (x K'/K)^2 - v^2 = x^2 K_{v-1} K_{v+1} / K_v^2") {
    for (double v : {0.0, 0.25, 0.75, 1.0, 2.0}) {
        for (double x : {0.5, 1.0, 2.0, 5.0}) {
            double lhs = bessel_log_deriv(v, x);
            lhs = lhs * lhs - v * v;
            double num = bessel_k_scaled(v - 1.0, x) * bessel_k_scaled(v + 1.0, x);
            double den = bessel_k_scaled(v, x);
            double rhs = x * x * num / (den * den);
            CHECK(std::fabs(lhs - rhs) <= 1e-8 * (std::fabs(lhs) + std::fabs(rhs)));
        }
    }
}

TEST_CASE("scaled evaluations stay conditioned at large x") {
    double s = bessel_k_scaled(0.5, 100.0);
    CHECK(s == doctest::Approx(std::sqrt(kPi / 200.0)).epsilon(1e-11));
    // x K'/K = -x - 1/2 exactly at v = 1/2
    CHECK(bessel_log_deriv(0.5, 100.0) == doctest::Approx(-100.5).epsilon(1e-11));
    CHECK_THROWS_AS(bessel_k(51.0, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), DomainError);
}

TEST_CASE("documented domain corners at v = 50") {
    // small-x leading order: K_v(x) ~ (Gamma(v)/2)(x/2)^{-v}
    double lead = 0.5 * std::exp(std::lgamma(50.0) + 50.0 * std::log(2.0 / 1e-3));
    double k = bessel_k(50.0, 1e-3);
    CHECK(std::isfinite(k));
    CHECK(k == doctest::Approx(lead).epsilon(1e-4));
    // the scaled values obey the three-term recurrence K_{v+1} = K_{v-1} + (2v/x) K_v
    for (double x : {1.0, 1e3}) {
        double s48 = bessel_k_scaled(48.0, x);
        double s49 = bessel_k_scaled(49.0, x);
        double s50 = bessel_k_scaled(50.0, x);
        double res = (s50 - s48 - 98.0 / x * s49) / s50;
        CHECK(std::fabs(res) < 1e-9);
    }
}
