#pragma once

#include <functional>
#include <limits>
#include <string>

#include "monolap/errors.hpp"

namespace monolap::quadrature {

// How the kernel behaves as t -> infinity; drives truncation of the
// semi-infinite integral.
struct DecayClass {
    enum Kind { Bounded, PolynomialGrowth, ExponentialGrowth };
    Kind kind = Bounded;
    double param = 0.0;  // degree for PolynomialGrowth, rate for ExponentialGrowth

    static DecayClass bounded() { return {Bounded, 0.0}; }
    static DecayClass polynomial(double degree) { return {PolynomialGrowth, degree}; }
    static DecayClass exponential(double rate) { return {ExponentialGrowth, rate}; }
};

// A real kernel t > 0 -> f(t). Kernels own their small-t series branch; the
// threshold is carried as metadata and the integrator never evaluates t = 0.
struct KernelSpec {
    std::function<double(double)> eval;
    double small_t_threshold = 0.0;
    DecayClass decay = DecayClass::bounded();
    std::string name;
};

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_panels = 1 << 16;
    double truncation_tail_bound = 1e-16;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw DomainError("QuadConfig: tolerances must be positive");
        if (max_panels < 2) throw DomainError("QuadConfig: max_panels >= 2 required");
    }
};

// Weight family: e^{-x t} or e^{-x mu(t)} with mu strictly increasing and
// positive on (0, inf).
struct Weight {
    enum Kind { Exp, MuExp };
    Kind kind = Exp;
    std::function<double(double)> mu;  // used when kind == MuExp
    std::string mu_name;

    static Weight exp_weight() { return {Exp, {}, ""}; }
    static Weight mu_exp(std::function<double(double)> m, std::string name) {
        return {MuExp, std::move(m), std::move(name)};
    }
    double w(double t) const { return kind == Exp ? t : mu(t); }
};

struct TransformSpec {
    KernelSpec kernel;
    Weight weight = Weight::exp_weight();
    double a = 0.0;
    double b = std::numeric_limits<double>::infinity();
};

struct Integral {
    double value = 0.0;
    double err_estimate = 0.0;
    bool converged = true;  // false when max_panels was exhausted (ToleranceNotMet)
};

// F(x) = integral over (a,b) of f(t) e^{-x w(t)} dt.
Integral integrate(const TransformSpec& spec, double x, const QuadConfig& cfg = {});

// F^{(order)}(x) via the analytically differentiated integrand
// (-w(t))^order f(t) e^{-x w(t)}; order in [1, 8].
Integral transform_derivative(const TransformSpec& spec, double x, int order,
                              const QuadConfig& cfg = {});

} // namespace monolap::quadrature
