#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "monolap/kernels.hpp"
#include "monolap/quadrature.hpp"

using namespace monolap;
using namespace monolap::quadrature;
using namespace monolap::specfun;

namespace {

// psi(3/2) = 2 - gamma - 2 ln 2 (half-integer closed form); gamma and ln 2
// as high-precision constants.
constexpr double kGamma = 0.5772156649015328606065120900824024;
constexpr double kLn2 = 0.6931471805599453094172321214581766;
constexpr double kPsi32 = 2.0 - kGamma - 2.0 * kLn2;
constexpr double kPi = 3.1415926535897932384626433832795029;

TransformSpec exp_spec(KernelSpec k) {
    TransformSpec s;
    s.kernel = std::move(k);
    return s;
}

} // namespace

TEST_CASE("constant kernel reproduces 1/x") {
    auto r = integrate(exp_spec(spec_one()), 2.0);
    CHECK(r.converged);
    CHECK(std::fabs(r.value - 0.5) < 1e-12);
}

TEST_CASE("t^{n-1}/(n-1)! reproduces 1/x^n") {
    auto r = integrate(exp_spec(spec_power_over_factorial(3)), 1.0);
    CHECK(std::fabs(r.value - 1.0) < 1e-10);
    auto r2 = integrate(exp_spec(spec_power_over_factorial(5)), 2.0);
    CHECK(std::fabs(r2.value - 1.0 / 32.0) < 1e-11);
}

TEST_CASE("q kernel at x=1 gives psi(3/2)") {
    auto r = integrate(exp_spec(spec_q()), 1.0);
    CHECK(std::fabs(r.value - kPsi32) < 1e-11);
    CHECK(std::fabs(kPsi32 - 0.0364899739785765) < 1e-13);
}

TEST_CASE("transform derivatives use the analytic integrand") {
    // d/dx (1/x) at 1
    auto d1 = transform_derivative(exp_spec(spec_one()), 1.0, 1);
    CHECK(std::fabs(d1.value + 1.0) < 1e-10);
    // d2/dx2 (1/x) = 2/x^3 at 2
    auto d2 = transform_derivative(exp_spec(spec_one()), 2.0, 2);
    CHECK(std::fabs(d2.value - 0.25) < 1e-10);
    // G'(1) for G = L(q): psi'(3/2) - 1 = pi^2/2 - 5 (trigamma oracle)
    auto dq = transform_derivative(exp_spec(spec_q()), 1.0, 1);
    double expected = kPi * kPi / 2.0 - 5.0;
    CHECK(std::fabs(dq.value - expected) < 1e-9);
}

TEST_CASE("derivative order bounds enforced") {
    CHECK_THROWS_AS(transform_derivative(exp_spec(spec_one()), 1.0, 0), DomainError);
    CHECK_THROWS_AS(transform_derivative(exp_spec(spec_one()), 1.0, 9), DomainError);
    // top order still works: F^{(8)}(x) = 8!/x^9 for F = 1/x
    auto d8 = transform_derivative(exp_spec(spec_one()), 2.0, 8);
    CHECK(d8.value == doctest::Approx(40320.0 / 512.0).epsilon(1e-9));
}

TEST_CASE("non-convergent transform rejected") {
    KernelSpec grow{[](double t) { return std::exp(2.0 * t); }, 0.0,
                    DecayClass::exponential(2.0), "e^{2t}"};
    CHECK_THROWS_AS(integrate(exp_spec(grow), 1.0), NonConvergentError);
    // accepted above the growth rate: integral of e^{(2-x)t} = 1/(x-2)
    auto ok = integrate(exp_spec(grow), 3.0);
    CHECK(std::fabs(ok.value - 1.0) < 1e-9);
    // a finite interval converges regardless of the decay check
    TransformSpec fin = exp_spec(grow);
    fin.a = 0.0;
    fin.b = 1.0;
    auto f = integrate(fin, 1.0);  // integral of e^t over (0,1)
    CHECK(std::fabs(f.value - std::expm1(1.0)) < 1e-10);
}

TEST_CASE("tolerance-not-met is flagged, best value returned") {
    QuadConfig cfg;
    cfg.rel_tol = 1e-15;
    cfg.abs_tol = 1e-300;
    cfg.max_panels = 4;
    auto r = integrate(exp_spec(spec_q()), 0.01, cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.value == r.value);  // still finite
}

TEST_CASE("linearity within 10 rel_tol") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    QuadConfig cfg;
    KernelSpec pool[3] = {spec_q(), spec_p1(), spec_one()};
    for (int i = 0; i < 12; ++i) {
        double alpha = coef(rng), beta = coef(rng);
        const KernelSpec& f = pool[i % 3];
        const KernelSpec& g = pool[(i + 1) % 3];
        KernelSpec combo{[&f, &g, alpha, beta](double t) {
                             return alpha * f.eval(t) + beta * g.eval(t);
                         },
                         0.0, DecayClass::bounded(), "combo"};
        double x = 0.5 + 0.5 * (i % 5);
        double lhs = integrate(exp_spec(combo), x, cfg).value;
        double rhs = alpha * integrate(exp_spec(f), x, cfg).value +
                     beta * integrate(exp_spec(g), x, cfg).value;
        CHECK(std::fabs(lhs - rhs) <=
              10.0 * cfg.rel_tol * (std::fabs(lhs) + std::fabs(rhs) + 1.0));
    }
}

TEST_CASE("laplace shift on a finite interval") {
    // integral_a^b f(t) e^{-xt} dt = e^{-ax} integral_0^{b-a} f(a+u) e^{-xu} du
    const double a = 1.0, b = 2.5, x = 1.7;
    TransformSpec s = exp_spec(spec_q());
    s.a = a;
    s.b = b;
    double lhs = integrate(s, x).value;
    TransformSpec shifted;
    shifted.kernel = {[a](double u) { return kernel_q(a + u); }, 0.0, DecayClass::bounded(),
                      "q(a+u)"};
    shifted.a = 0.0;
    shifted.b = b - a;
    double rhs = std::exp(-a * x) * integrate(shifted, x).value;
    CHECK(std::fabs(lhs - rhs) < 1e-12);
}

TEST_CASE("analytic first derivative matches central differences") {
    TransformSpec s = exp_spec(spec_p1());
    for (double x : {0.5, 1.0, 3.0, 10.0}) {
        double h = 1e-5 * x;
        double fd = (integrate(s, x + h).value - integrate(s, x - h).value) / (2.0 * h);
        double an = transform_derivative(s, x, 1).value;
        CHECK(std::fabs(an - fd) <= 1e-6 * std::fabs(an));
    }
}

TEST_CASE("identity mu reproduces plain weight bit-for-bit") {
    TransformSpec plain = exp_spec(spec_q());
    TransformSpec mu = plain;
    mu.weight = Weight::mu_exp([](double t) { return t; }, "t");
    for (double x : {0.3, 1.0, 4.0}) {
        auto a = integrate(plain, x);
        auto b = integrate(mu, x);
        CHECK(a.value == b.value);
        CHECK(a.err_estimate == b.err_estimate);
    }
    // finite interval too
    plain.a = mu.a = 0.5;
    plain.b = mu.b = 3.0;
    CHECK(integrate(plain, 2.0).value == integrate(mu, 2.0).value);
}

TEST_CASE("cosh weight evaluates the Bessel integral") {
    // K_0(1) = 0.42102443824070834 (series oracle, see test_specfun)
    TransformSpec s;
    s.kernel = spec_bessel_g(0.0);
    s.weight = weight_cosh();
    auto r = integrate(s, 1.0);
    CHECK(std::fabs(r.value - 0.42102443824070834) < 1e-10);
}

TEST_CASE("non-finite integrand is rejected, not silently accepted") {
    KernelSpec bad{[](double t) { return t > 2.0 ? std::nan("") : 1.0; }, 0.0,
                   DecayClass::bounded(), "nan-tail"};
    CHECK_THROWS_AS(integrate(exp_spec(bad), 0.5), NonConvergentError);
}

TEST_CASE("config validation") {
    QuadConfig cfg;
    cfg.rel_tol = -1.0;
    CHECK_THROWS_AS(integrate(exp_spec(spec_one()), 1.0, cfg), DomainError);
    QuadConfig cfg2;
    cfg2.max_panels = 1;
    CHECK_THROWS_AS(integrate(exp_spec(spec_one()), 1.0, cfg2), DomainError);
    CHECK_THROWS_AS(integrate(exp_spec(spec_one()), -2.0), DomainError);
}
