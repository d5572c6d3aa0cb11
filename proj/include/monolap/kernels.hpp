#pragma once

#include <vector>

#include "monolap/quadrature.hpp"

namespace monolap::specfun {

// Maclaurin branch used below `threshold`; `coefficients[k]` multiplies t^k.
// At the threshold the branch agrees with the direct formula to <= 1e-12
// relative (tested).
struct SeriesBranch {
    double threshold = 0.0;
    std::vector<double> coefficients;
    double remainder_bound = 0.0;

    double eval(double t) const {
        double acc = 0.0;
        for (std::size_t k = coefficients.size(); k-- > 0;)
            acc = acc * t + coefficients[k];
        return acc;
    }
};

// q(t) = 1/t - 1/(2 sinh(t/2)) and its second derivative.
double kernel_q(double t);
double kernel_q2(double t);

// p1(t) = 2(1/t - 1/(e^t - 1)) with derivatives.
double kernel_p1(double t);
double kernel_p1_prime(double t);
double kernel_p1_second(double t);

// p2(t) = (e^{2t} - 2t e^t - 1)/(t (e^t - 1) e^t) = 2(sinh t - t)/(t(e^t-1)).
double kernel_p2(double t);
double kernel_p2_prime(double t);
double kernel_p2_second(double t);

// p3(t) = (coth(t/2) - 2/t)/2 = (1 - p1(t))/2.
double kernel_p3(double t);
double kernel_p3_second(double t);

// h_v(t) = (cosh(tv) + v sinh(tv) sinh t)/((cosh t + 1) cosh(tv)),
// evaluated in the overflow-safe form 1/(cosh t + 1) + v tanh(vt) tanh(t/2).
double kernel_hv(double v, double t);
double kernel_hv_prime(double v, double t);

const SeriesBranch& q_series();
const SeriesBranch& q2_series();
const SeriesBranch& p1_series();
const SeriesBranch& p1_prime_series();
const SeriesBranch& p1_second_series();
const SeriesBranch& p2_series();
const SeriesBranch& p2_prime_series();
const SeriesBranch& p2_second_series();
const SeriesBranch& p3_series();
const SeriesBranch& p3_second_series();

// Ready-made KernelSpecs for the transform pairs used across the project.
quadrature::KernelSpec spec_one();                    // f(t) = 1
quadrature::KernelSpec spec_monomial(int k);          // f(t) = t^k
quadrature::KernelSpec spec_power_over_factorial(int n);  // t^{n-1}/(n-1)!
quadrature::KernelSpec spec_q();
quadrature::KernelSpec spec_neg24_q2();               // -24 q''
quadrature::KernelSpec spec_p1();
quadrature::KernelSpec spec_neg_p1_prime();           // -p1'
quadrature::KernelSpec spec_p2();
quadrature::KernelSpec spec_l_numerator();            // -6 (p2'' + p2')
quadrature::KernelSpec spec_p3();
quadrature::KernelSpec spec_q_numerator();            // -12 p3''
quadrature::KernelSpec spec_bessel_g(double v);       // cosh(vt)
quadrature::KernelSpec spec_bessel_f(double v);       // -h_v(t) cosh(vt)

// Weights: w(t) = cosh t (the generalized transform of the Bessel section)
// and its shifted version cosh t - 1 used for e^x-scaled evaluation.
quadrature::Weight weight_cosh();
quadrature::Weight weight_cosh_minus_one();

} // namespace monolap::specfun
