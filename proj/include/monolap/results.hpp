#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monolap/monorules.hpp"
#include "monolap/quadrature.hpp"

namespace monolap::results {

// Phi(x) = 1/(psi(x+1/2) - ln x) - 24 x^2, strictly increasing onto (0, 21/5).
double phi_fn(double x);

// A(x) = (1/2)/(psi(x+1) - ln x) - x.
double alzer_A(double x);

// L(x) = 2/(2 psi(x+1) - ln(x(x+1))) - 6x(x+1).
double villarino_L(double x);

// Q(x) = 1/(ln x + 1/(2x) - psi(x+1)) - 12 x^2.
double qi_Q(double x);

// The same four functions through their Laplace-transform-ratio forms
// (numerator/denominator kernel pairs), for cross-validation.
double phi_ratio_form(double x, const quadrature::QuadConfig& cfg = {});
double alzer_A_ratio_form(double x, const quadrature::QuadConfig& cfg = {});
double villarino_L_ratio_form(double x, const quadrature::QuadConfig& cfg = {});
double qi_Q_ratio_form(double x, const quadrature::QuadConfig& cfg = {});

// Lambda(x) = x + x K_v'(x)/K_v(x).
double lambda_v(double v, double x, const quadrature::QuadConfig& cfg = {});

struct ThetaResult {
    double t_star;  // unique zero of h_v' on (0, inf)
    double theta;   // h_v(t_star)
};

// Extremum of h_v for v in (0,1) \ {1/2}: a maximum for v in (1/2,1), a
// minimum for v in (0,1/2).
ThetaResult theta_v(double v);

// One inequality instance: margin = rhs - lhs must exceed the noise band.
struct BoundPoint {
    double v = 0.0;
    double x = 0.0;
    double y = 0.0;  // used by the kratio suite only
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    std::string side;  // "lower" / "upper"
};

struct BoundSweepReport {
    std::string suite_id;
    std::vector<BoundPoint> grid;
    std::vector<BoundPoint> violations;    // margin < -band
    int inconclusive = 0;                  // |margin| <= band
    double min_margin = 0.0;
    bool pass = false;                     // zero violations
    static constexpr double kNoiseBand = 1e-9;
};

struct BoundConfig {
    std::vector<double> v_grid;  // empty = default
    std::vector<double> x_grid;  // empty = default
    std::optional<double> r1;    // kratio lower exponent (default min(|v|,1/2))
    std::optional<double> r2;    // kratio upper exponent (default max(|v|,1/2))
};

// Tight default tolerances for the bound sweeps (margins sit near the noise
// band at the grid corners).
quadrature::QuadConfig bounds_quad_defaults();

// suite_id: "xdkk" | "xdkk-improved" | "turan" | "kratio"
BoundSweepReport bound_suite(const std::string& suite_id, const BoundConfig& grid = {},
                             const quadrature::QuadConfig& cfg = bounds_quad_defaults());

// Monotonicity of x^r e^x K_v(x) via the sign of phi(x) = r + Lambda(x).
monorules::MonotoneVerdict xr_ex_kv_monotonicity(double v, double r,
                                                 const std::vector<double>& x_grid = {},
                                                 const quadrature::QuadConfig& cfg = {});

enum class PLambdaStatus { Confirmed, ViolationMatchesPrediction, InconclusiveNoWitness,
                           Contradiction };

struct PLambdaReport {
    double v = 0.0;
    double lambda = 0.0;
    double threshold = 0.0;        // CM threshold for +P from the case table
    std::string regime;            // which case of the table applied
    bool expected_cm = false;      // threshold-table prediction for +P_lambda
    monorules::CmReport measured;  // finite-difference certificate for +P_lambda
    PLambdaStatus status = PLambdaStatus::InconclusiveNoWitness;
};

// P_lambda(x) = (x+lambda) e^x K_v(x) + x e^x K_v'(x); checks the measured
// finite-difference certificate against the threshold table.
PLambdaReport p_lambda_cm(double v, double lambda, const quadrature::QuadConfig& cfg = {});

// -P_lambda variant (CM for lambda below the mirrored threshold).
PLambdaReport p_lambda_cm_negated(double v, double lambda,
                                  const quadrature::QuadConfig& cfg = {});

} // namespace monolap::results
