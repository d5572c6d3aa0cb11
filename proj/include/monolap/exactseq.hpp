#pragma once

#include <string>
#include <vector>

#include "monolap/bigint.hpp"
#include "monolap/rational.hpp"

namespace monolap::exactseq {

// All arithmetic in this module is exact; doubles appear only in rendering.

enum class Requirement { Zero, Positive, Negative };

struct SeqValue {
    long n;
    std::string value;  // exact integer or "p/q"
};

struct ResidualCheck {
    long n;
    std::string value;
    Requirement must_be;
    bool ok;
};

struct SignClaim {
    std::string range;
    std::string claim;
    bool verified;
};

struct ExactSeqReport {
    std::string name;
    std::vector<SeqValue> values;
    std::vector<ResidualCheck> recurrence_residuals;
    std::vector<SignClaim> sign_claims;

    bool all_ok() const {
        for (const auto& r : recurrence_residuals)
            if (!r.ok) return false;
        for (const auto& c : sign_claims)
            if (!c.verified) return false;
        return true;
    }
};

// Integer numerators of the series coefficients behind q''/q:
// a_hat(n) = 3^{2n-1} - (2n-1)(2n-2)(2n-3) 2^{2n-4} - 3   (n >= 3)
// b_hat(n) = 3^{2n-3} - (2n-3) 2^{2n-3} - 3               (n >= 2)
BigInt phi_a_hat(long n);
BigInt phi_b_hat(long n);

// d_n via the closed form (five terms combined over denominator 108; the
// division is asserted exact). Domain n >= 4.
BigInt phi_dn(long n);

// d_n via the coefficient route (2n-1)!(2n+1)! (a_n b_{n+1} - a_{n+1} b_n);
// index alignment fixed by matching d_4.
BigInt phi_dn_definitional(long n);

// Rational split d_n = 18(4n-1) + (4n-1) 6^{2n} a*_n + (64n^2-132n+41) 2^{2n} b*_n.
BigRat phi_a_star(long n);
BigRat phi_b_star(long n);

// Coefficient sequences behind the series of 4 r_v (rational in v):
// a_n = (v+1)(2v-1)^{2n-1} + (v-1)(2v+1)^{2n-1} + (2v)^{2n} + v^2 2^{2n} + 2(2v^2-1)
// b_n = 2v(v^2-1)(v-1/2)^{2n-1} + 2v(v^2-1)(v+1/2)^{2n-1} + (4v^2-1)v^{2n} + 3v^2
BigRat hv_a(const BigRat& v, long n);
BigRat hv_b(const BigRat& v, long n);

// Report suites.
ExactSeqReport phi_dn_report(long n_max);      // n_max >= 4
ExactSeqReport phi_bn_checks(long n_max);      // n_max >= 4
ExactSeqReport phi_star_checks(long n_max);    // n_max >= 10
ExactSeqReport hv_sequences(const BigRat& v, long n_max);  // v > 0, v != 1/2, 1

} // namespace monolap::exactseq
