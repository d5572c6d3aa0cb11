#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monolap/quadrature.hpp"
#include "monolap/rational.hpp"

namespace monolap::monorules {

// Sign of H_{F,G}(0+) = lim_{x->0+} (F'/G') G - F.
enum class HSign { Positive, Negative, Zero, Unresolved };

struct HZeroResult {
    HSign sign = HSign::Unresolved;
    std::optional<double> extrapolated;
    std::vector<double> diagonal;  // Richardson diagonal, for diagnostics
};

enum class VerdictKind { Increasing, Decreasing, UnimodalMax, UnimodalMin, Indeterminate };

struct EvidencePoint {
    double x;
    double ratio;
    double ratio_prime;
};

struct MonotoneVerdict {
    VerdictKind kind = VerdictKind::Indeterminate;
    double x_star = 0.0;  // turning point for the unimodal kinds
    HSign h_zero_sign = HSign::Unresolved;
    std::vector<EvidencePoint> evidence;
    // The H(0+) < 0 branch guarantees "at least one" turning point, not
    // exactly one; set when the sign scan finds more than one.
    bool multiple_sign_changes = false;
    std::string note;
};

enum class ShapeHint { MonotoneRatio, UnimodalRatio };

// A pair of transforms F = T(f), G = T(g) sharing one weight and interval.
struct RatioPair {
    quadrature::KernelSpec f;
    quadrature::KernelSpec g;
    quadrature::Weight weight = quadrature::Weight::exp_weight();
    double a = 0.0;
    double b = std::numeric_limits<double>::infinity();

    quadrature::TransformSpec spec_f() const { return {f, weight, a, b}; }
    quadrature::TransformSpec spec_g() const { return {g, weight, a, b}; }
};

// H_{F,G}(x) = (F'(x)/G'(x)) G(x) - F(x) with analytic transform derivatives.
double aux_H(const RatioPair& pair, double x, const quadrature::QuadConfig& cfg = {});

// Sign of H_{F,G}(0+) by Richardson extrapolation over x_k = 2^{-k}, k=0..8.
HZeroResult h_sign_at_zero(const RatioPair& pair, const quadrature::QuadConfig& cfg = {});

struct Discretization {
    double ratio;  // F_n(y)/G_n(y)
    double y;      // e^{-(b-a)x/n}
};

// Riemann-sum polynomial ratio from the finite-interval proof:
// t_i = a + (b-a) i/n, F_n(y) = sum f(t_i) y^i.
Discretization discretize_ratio(const quadrature::KernelSpec& f,
                                const quadrature::KernelSpec& g, double a, double b, int n,
                                double x);

// Classify x -> F(x)/G(x) on (0, inf) per the monotonicity rules. The shape
// hint is validated by sampling f/g; a violated hint throws ShapeHintError.
MonotoneVerdict classify_ratio(const RatioPair& pair, ShapeHint hint,
                               const quadrature::QuadConfig& cfg = {});

struct RatioLimits {
    double at_zero;      // lim_{x->0+} F/G  (= lim_{t->inf} f/g)
    double at_infinity;  // lim_{x->inf} F/G (= lim_{t->0+} f/g, or f(a)/g(a))
    double probe_low;    // F/G at the small-x probe
    double probe_high;   // F/G at the large-x probe
};

RatioLimits ratio_limits(const RatioPair& pair, const quadrature::QuadConfig& cfg = {});

// Exact polynomial-ratio verdict on (0, r): A = sum a_k t^k, B = sum b_k t^k,
// b_k > 0, a_k/b_k increasing-then-decreasing or the mirror. All decisions in
// exact rational arithmetic; t0 located by exact-sign bisection.
MonotoneVerdict poly_ratio_verdict(const std::vector<BigRat>& a_coeffs,
                                   const std::vector<BigRat>& b_coeffs, const BigRat& r);

enum class SignPattern { AllNegative, AllPositive, SingleCrossing, NoPattern };

struct SignChangeReport {
    SignPattern pattern = SignPattern::NoPattern;
    double t0 = 0.0;  // crossing location for SingleCrossing
    std::optional<int> first_positive_index;
    std::optional<int> first_negative_index;
};

// Sign analysis of S(t) = sum c_k t^k on (0, r) for coefficient patterns
// (-,...,-,+,...,+) or the mirror; r may be +inf.
SignChangeReport series_sign_change(const std::vector<double>& coeffs, double r);

enum class CmMode { CompletelyMonotonic, Bernstein };

struct CmViolation {
    double x;
    int order;
    double value;  // the offending signed difference
};

struct CmReport {
    bool consistent = true;
    CmMode mode = CmMode::CompletelyMonotonic;
    int max_order = 0;
    std::vector<CmViolation> violations;
};

// Finite-difference monotonicity certificate: checks (-1)^n Delta_h^n F(x)
// >= 0 (CM) for n = 0..order, or F >= 0 plus (-1)^n Delta_h^n F(x) <= 0 for
// n = 1..order (Bernstein), with noise band 1e-9 |F(x)|. h <= 0 selects the
// default step max(0.05 x, 1e-3).
CmReport cm_check(const std::function<double(double)>& F, int order,
                  const std::vector<double>& grid, double h = 0.0,
                  CmMode mode = CmMode::CompletelyMonotonic);

} // namespace monolap::monorules
