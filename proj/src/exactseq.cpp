#include "monolap/exactseq.hpp"

#include <algorithm>

#include "monolap/errors.hpp"
#include "monolap/parallel.hpp"

namespace monolap::exactseq {

namespace {

BigInt ipow(long base, long exp) {
    return BigInt::pow(BigInt(base), static_cast<unsigned long>(exp));
}

const char* kPublishedDn[6] = {
    "-66802176",            // d_4
    "-13774616064",         // d_5
    "-1570251361536",       // d_6
    "-127269822161664",     // d_7
    "-7526731991528448",    // d_8
    "-240861038835686400",  // d_9
};

} // namespace

BigInt phi_a_hat(long n) {
    if (n < 3) throw DomainError("phi_a_hat: n >= 3 required");
    BigInt m = BigInt(2 * n - 1) * BigInt(2 * n - 2) * BigInt(2 * n - 3);
    return ipow(3, 2 * n - 1) - m * ipow(2, 2 * n - 4) - BigInt(3);
}

BigInt phi_b_hat(long n) {
    if (n < 2) throw DomainError("phi_b_hat: n >= 2 required");
    return ipow(3, 2 * n - 3) - BigInt(2 * n - 3) * ipow(2, 2 * n - 3) - BigInt(3);
}

BigInt phi_dn(long n) {
    if (n < 4) throw DomainError("phi_dn: n >= 4 required");
    BigInt nn(n);
    BigInt n4(4 * n - 1);
    BigInt P = BigInt(20) * ipow(n, 4) - BigInt(56) * ipow(n, 3) - BigInt(77) * nn * nn +
               BigInt(464) * nn - BigInt(243);
    BigInt Q = BigInt(6) * ipow(n, 3) + BigInt(5) * nn * nn + BigInt(2) * nn - BigInt(1);
    BigInt C = BigInt(64) * nn * nn - BigInt(132) * nn + BigInt(41);
    // 108 d_n: the fractional coefficients 2/9, 1/108, 4/9, 3/4 combined over
    // the common denominator 108; integrality asserted below
    BigInt N = BigInt(108) * BigInt(18) * n4 + BigInt(24) * n4 * ipow(3, 4 * n) -
               BigInt(2 * n - 1) * P * ipow(6, 2 * n) + BigInt(48) * C * ipow(3, 2 * n) -
               BigInt(81) * BigInt(2 * n - 1) * BigInt(2 * n - 3) * Q * ipow(2, 2 * n);
    BigInt q, r;
    BigInt::divmod(N, BigInt(108), q, r);
    if (!r.is_zero()) throw DomainError("phi_dn: closed form not integral (internal error)");
    return q;
}

BigInt phi_dn_definitional(long n) {
    if (n < 4) throw DomainError("phi_dn_definitional: n >= 4 required");
    // (2n-1)!(2n+1)! (a_n b_{n+1} - a_{n+1} b_n) with a_n = a_hat(n)/(2n-1)!
    // and b_n = b_hat(n)/(2n-3)! reduces to this integer combination; the
    // factorial alignment is pinned by matching d_4
    BigInt t1 = BigInt(2 * n) * BigInt(2 * n + 1) * phi_a_hat(n) * phi_b_hat(n + 1);
    BigInt t2 = BigInt(2 * n - 2) * BigInt(2 * n - 1) * phi_a_hat(n + 1) * phi_b_hat(n);
    return t1 - t2;
}

BigRat phi_a_star(long n) {
    BigRat pow32 = BigRat::pow(BigRat(BigInt(3), BigInt(2)), static_cast<unsigned long>(2 * n));
    BigRat P(BigInt(20) * ipow(n, 4) - BigInt(56) * ipow(n, 3) -
                 BigInt(77) * BigInt(n) * BigInt(n) + BigInt(464) * BigInt(n) - BigInt(243),
             BigInt(1));
    return BigRat(2) / BigRat(9) * pow32 -
           BigRat(1) / BigRat(108) * BigRat(2 * n - 1) * P / BigRat(4 * n - 1);
}

BigRat phi_b_star(long n) {
    BigRat pow32 = BigRat::pow(BigRat(BigInt(3), BigInt(2)), static_cast<unsigned long>(2 * n));
    BigRat Q(BigInt(6) * ipow(n, 3) + BigInt(5) * BigInt(n) * BigInt(n) + BigInt(2) * BigInt(n) -
                 BigInt(1),
             BigInt(1));
    BigRat C(BigInt(64) * BigInt(n) * BigInt(n) - BigInt(132) * BigInt(n) + BigInt(41), BigInt(1));
    return BigRat(4) / BigRat(9) * pow32 -
           BigRat(3) / BigRat(4) * BigRat(2 * n - 1) * BigRat(2 * n - 3) * Q / C;
}

BigRat hv_a(const BigRat& v, long n) {
    if (!(v > BigRat(0)) || n < 1) throw DomainError("hv_a: v > 0 and n >= 1 required");
    unsigned long e = static_cast<unsigned long>(2 * n - 1);
    BigRat two_v = BigRat(2) * v;
    return (v + BigRat(1)) * BigRat::pow(two_v - BigRat(1), e) +
           (v - BigRat(1)) * BigRat::pow(two_v + BigRat(1), e) +
           BigRat::pow(two_v, static_cast<unsigned long>(2 * n)) +
           v * v * BigRat(BigInt::pow(BigInt(2), static_cast<unsigned long>(2 * n))) +
           BigRat(2) * (BigRat(2) * v * v - BigRat(1));
}

BigRat hv_b(const BigRat& v, long n) {
    if (!(v > BigRat(0)) || n < 1) throw DomainError("hv_b: v > 0 and n >= 1 required");
    unsigned long e = static_cast<unsigned long>(2 * n - 1);
    const BigRat half(BigInt(1), BigInt(2));
    BigRat c = BigRat(2) * v * (v * v - BigRat(1));
    return c * BigRat::pow(v - half, e) + c * BigRat::pow(v + half, e) +
           (BigRat(4) * v * v - BigRat(1)) * BigRat::pow(v, static_cast<unsigned long>(2 * n)) +
           BigRat(3) * v * v;
}

ExactSeqReport phi_dn_report(long n_max) {
    if (n_max < 4) throw DomainError("phi_dn_report: n_max >= 4 required");
    ExactSeqReport rep;
    rep.name = "phi-dn";

    std::vector<BigInt> dn(static_cast<std::size_t>(n_max - 3));
    parallel_for(dn.size(), [&](std::size_t i) { dn[i] = phi_dn(static_cast<long>(i) + 4); });

    for (long n = 4; n <= n_max && n <= 12; ++n)
        rep.values.push_back({n, dn[static_cast<std::size_t>(n - 4)].to_string()});

    // the six published reference values
    for (long n = 4; n <= 9 && n <= n_max; ++n) {
        BigInt expected = BigInt::from_string(kPublishedDn[n - 4]);
        rep.sign_claims.push_back({"n=" + std::to_string(n), "d_n = " + expected.to_string(),
                                   dn[static_cast<std::size_t>(n - 4)] == expected});
    }
    {
        bool neg_ok = true;
        for (long n = 4; n <= std::min(9L, n_max); ++n)
            neg_ok = neg_ok && dn[static_cast<std::size_t>(n - 4)].is_negative();
        rep.sign_claims.push_back({"4<=n<=9", "d_n < 0", neg_ok});
        if (n_max >= 10) {
            bool pos_ok = true;
            for (long n = 10; n <= n_max; ++n)
                pos_ok = pos_ok && dn[static_cast<std::size_t>(n - 4)].sign() > 0;
            rep.sign_claims.push_back({"10<=n<=" + std::to_string(n_max), "d_n > 0", pos_ok});
        }
    }
    // closed form == definitional coefficient route, exactly
    long upper = std::min(n_max, 30L);
    for (long n = 4; n <= upper; ++n) {
        BigInt diff = dn[static_cast<std::size_t>(n - 4)] - phi_dn_definitional(n);
        rep.recurrence_residuals.push_back(
            {n, diff.to_string(), Requirement::Zero, diff.is_zero()});
    }
    return rep;
}

ExactSeqReport phi_bn_checks(long n_max) {
    if (n_max < 4) throw DomainError("phi_bn_checks: n_max >= 4 required");
    ExactSeqReport rep;
    rep.name = "phi-bn";
    rep.sign_claims.push_back({"n=3", "b_3 = 0", phi_b_hat(3).is_zero()});
    for (long n = 3; n <= n_max; ++n) {
        // (2n-1)! b_{n+1} - 9 (2n-3)! b_n = (10n-23) 2^{2n-3} + 24
        BigInt rhs = BigInt(10 * n - 23) * ipow(2, 2 * n - 3) + BigInt(24);
        BigInt residual = phi_b_hat(n + 1) - BigInt(9) * phi_b_hat(n) - rhs;
        rep.recurrence_residuals.push_back(
            {n, residual.to_string(), Requirement::Zero, residual.is_zero()});
        if (n <= 8) rep.values.push_back({n, phi_b_hat(n).to_string()});
    }
    bool rhs_pos = true;
    for (long n = 3; n <= n_max; ++n)
        rhs_pos = rhs_pos && (BigInt(10 * n - 23) * ipow(2, 2 * n - 3) + BigInt(24)).sign() > 0;
    rep.sign_claims.push_back(
        {"3<=n<=" + std::to_string(n_max), "(10n-23)2^{2n-3}+24 > 0", rhs_pos});
    bool bn_pos = true;
    for (long n = 4; n <= n_max; ++n) bn_pos = bn_pos && phi_b_hat(n).sign() > 0;
    rep.sign_claims.push_back({"4<=n<=" + std::to_string(n_max), "b_n > 0", bn_pos});
    return rep;
}

ExactSeqReport phi_star_checks(long n_max) {
    if (n_max < 10) throw DomainError("phi_star_checks: n_max >= 10 required");
    ExactSeqReport rep;
    rep.name = "phi-star";

    BigRat a10 = phi_a_star(10), b10 = phi_b_star(10);
    rep.values.push_back({10, a10.to_string()});
    rep.values.push_back({10, b10.to_string()});
    rep.sign_claims.push_back(
        {"n=10", "a*_10 = 710697141/6815744", a10 == BigRat::from_string("710697141/6815744")});
    rep.sign_claims.push_back({"n=10", "b*_10 = 174443916097/149159936",
                               b10 == BigRat::from_string("174443916097/149159936")});

    // the split the positivity argument rests on:
    // d_n = 18(4n-1) + (4n-1) 6^{2n} a*_n + (64n^2-132n+41) 2^{2n} b*_n
    bool decomp_ok = true;
    for (long n = 10; n <= std::min(n_max, 40L); ++n) {
        BigRat lhs(phi_dn(n));
        BigRat C(BigInt(64) * BigInt(n) * BigInt(n) - BigInt(132) * BigInt(n) + BigInt(41),
                 BigInt(1));
        BigRat rhs = BigRat(18 * (4 * n - 1)) +
                     BigRat(4 * n - 1) * BigRat(ipow(6, 2 * n)) * phi_a_star(n) +
                     C * BigRat(ipow(2, 2 * n)) * phi_b_star(n);
        decomp_ok = decomp_ok && lhs == rhs;
    }
    rep.sign_claims.push_back({"10<=n<=" + std::to_string(std::min(n_max, 40L)),
                               "d_n = 18(4n-1) + (4n-1)6^{2n}a*_n + (64n^2-132n+41)2^{2n}b*_n",
                               decomp_ok});

    const BigRat nine_fourths(BigInt(9), BigInt(4));
    bool a_growth_pos = true, b_growth_pos = true;
    for (long n = 10; n <= n_max; ++n) {
        // a*_{n+1} - (9/4)a*_n = (1/432)(2n^2+n-9)(400n^4-2500n^3+1448n^2+1789n-777)/((4n-1)(4n+3))
        BigRat lhs_a = phi_a_star(n + 1) - nine_fourths * phi_a_star(n);
        BigRat poly_a =
            BigRat(BigInt(2) * BigInt(n) * BigInt(n) + BigInt(n) - BigInt(9), BigInt(1)) *
            BigRat(BigInt(400) * ipow(n, 4) - BigInt(2500) * ipow(n, 3) +
                       BigInt(1448) * BigInt(n) * BigInt(n) + BigInt(1789) * BigInt(n) -
                       BigInt(777),
                   BigInt(1));
        BigRat rhs_a = poly_a / BigRat(432) / BigRat(4 * n - 1) / BigRat(4 * n + 3);
        BigRat res_a = lhs_a - rhs_a;
        if (n <= 20 || n == n_max)
            rep.recurrence_residuals.push_back(
                {n, res_a.to_string(), Requirement::Zero, res_a.is_zero()});
        a_growth_pos = a_growth_pos && lhs_a.sign() > 0;

        // b*_{n+1} - (9/4)b*_n = (3/16)(2n-1)(4n^4(960n^2-3004n-1181)+19204n^3+16517n^2-684n-2697)
        //                        / ((64n^2-4n-27)(64n^2-132n+41))
        BigRat lhs_b = phi_b_star(n + 1) - nine_fourths * phi_b_star(n);
        BigRat poly_b(BigInt(4) * ipow(n, 4) *
                              (BigInt(960) * BigInt(n) * BigInt(n) - BigInt(3004) * BigInt(n) -
                               BigInt(1181)) +
                          BigInt(19204) * ipow(n, 3) + BigInt(16517) * BigInt(n) * BigInt(n) -
                          BigInt(684) * BigInt(n) - BigInt(2697),
                      BigInt(1));
        BigRat denom(
            (BigInt(64) * BigInt(n) * BigInt(n) - BigInt(4) * BigInt(n) - BigInt(27)) *
                (BigInt(64) * BigInt(n) * BigInt(n) - BigInt(132) * BigInt(n) + BigInt(41)),
            BigInt(1));
        BigRat rhs_b = BigRat(3) / BigRat(16) * BigRat(2 * n - 1) * poly_b / denom;
        BigRat res_b = lhs_b - rhs_b;
        if (n <= 20 || n == n_max)
            rep.recurrence_residuals.push_back(
                {n, res_b.to_string(), Requirement::Zero, res_b.is_zero()});
        b_growth_pos = b_growth_pos && lhs_b.sign() > 0;
    }
    rep.sign_claims.push_back(
        {"10<=n<=" + std::to_string(n_max), "a*_{n+1} - (9/4)a*_n > 0", a_growth_pos});
    rep.sign_claims.push_back(
        {"10<=n<=" + std::to_string(n_max), "b*_{n+1} - (9/4)b*_n > 0", b_growth_pos});

    bool factors_pos = true;
    for (long n = 10; n <= n_max; ++n) {
        BigInt fa = (BigInt(2) * BigInt(n) * BigInt(n) + BigInt(n) - BigInt(9)) *
                    (BigInt(400) * ipow(n, 4) - BigInt(2500) * ipow(n, 3) +
                     BigInt(1448) * BigInt(n) * BigInt(n) + BigInt(1789) * BigInt(n) -
                     BigInt(777));
        BigInt fb = BigInt(4) * ipow(n, 4) *
                        (BigInt(960) * BigInt(n) * BigInt(n) - BigInt(3004) * BigInt(n) -
                         BigInt(1181)) +
                    BigInt(19204) * ipow(n, 3) + BigInt(16517) * BigInt(n) * BigInt(n) -
                    BigInt(684) * BigInt(n) - BigInt(2697);
        factors_pos = factors_pos && fa.sign() > 0 && fb.sign() > 0;
    }
    rep.sign_claims.push_back({"10<=n<=" + std::to_string(n_max),
                               "starred recurrence polynomial factors > 0", factors_pos});
    return rep;
}

ExactSeqReport hv_sequences(const BigRat& v, long n_max) {
    if (!(v > BigRat(0))) throw DomainError("hv_sequences: v > 0 required");
    if (v == BigRat(BigInt(1), BigInt(2)) || v == BigRat(1))
        throw DomainError("hv_sequences: v = 1/2 and v = 1 are excluded (recurrence Dbn)");
    if (n_max < 2) throw DomainError("hv_sequences: n_max >= 2 required");

    ExactSeqReport rep;
    rep.name = "hv(v=" + v.to_string() + ")";
    const BigRat half(BigInt(1), BigInt(2));
    const BigRat one(1);

    std::vector<BigRat> a(static_cast<std::size_t>(n_max) + 2), b(a.size());
    for (long n = 1; n <= n_max + 1; ++n) {
        a[static_cast<std::size_t>(n)] = hv_a(v, n);
        b[static_cast<std::size_t>(n)] = hv_b(v, n);
    }
    for (long n = 1; n <= std::min(n_max, 6L); ++n) {
        rep.values.push_back({n, "a_n=" + a[static_cast<std::size_t>(n)].to_string()});
        rep.values.push_back({n, "b_n=" + b[static_cast<std::size_t>(n)].to_string()});
    }

    BigRat a1_expected = BigRat(4) * (BigRat(2) * v - one) * (BigRat(2) * v + one);
    BigRat b1_expected = BigRat(2) * v * v * (BigRat(2) * v - one) * (BigRat(2) * v + one);
    rep.sign_claims.push_back({"n=1", "a_1 = 4(2v-1)(2v+1)", a[1] == a1_expected});
    rep.sign_claims.push_back({"n=1", "b_1 = 2v^2(2v-1)(2v+1)", b[1] == b1_expected});

    // (Dan): a_{n+1} - a_n = 2^{2n} b_n, exactly
    for (long n = 1; n <= n_max; ++n) {
        BigRat res = a[static_cast<std::size_t>(n + 1)] - a[static_cast<std::size_t>(n)] -
                     BigRat(BigInt::pow(BigInt(2), static_cast<unsigned long>(2 * n))) *
                         b[static_cast<std::size_t>(n)];
        rep.recurrence_residuals.push_back({n, res.to_string(), Requirement::Zero, res.is_zero()});
    }
    // (Dbn)
    BigRat dbn_factor = v * (v * v - one) * (v * v - BigRat(BigInt(1), BigInt(4)));
    for (long n = 1; n < n_max; ++n) {
        unsigned long e = static_cast<unsigned long>(2 * n - 2);
        BigRat bracket = (BigRat(2) * v - BigRat(3)) * BigRat::pow(v - half, e) +
                         (BigRat(2) * v + BigRat(3)) * BigRat::pow(v + half, e) +
                         BigRat(4) * BigRat::pow(v, static_cast<unsigned long>(2 * n - 1));
        BigRat res = b[static_cast<std::size_t>(n + 1)] - b[static_cast<std::size_t>(n)] -
                     dbn_factor * bracket;
        rep.recurrence_residuals.push_back({n, res.to_string(), Requirement::Zero, res.is_zero()});
        if (n <= 4)
            rep.sign_claims.push_back(
                {"n=" + std::to_string(n), "(Dbn) bracket > 0", bracket.sign() > 0});
    }

    auto first_index_where = [&](auto pred, const std::vector<BigRat>& seq) {
        for (long n = 1; n <= n_max; ++n)
            if (pred(seq[static_cast<std::size_t>(n)])) return n;
        return -1L;
    };
    auto count_changes = [&](const std::vector<BigRat>& seq) {
        int changes = 0;
        int prev = 0;
        for (long n = 1; n <= n_max; ++n) {
            int s = seq[static_cast<std::size_t>(n)].sign();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
        return changes;
    };

    if (v > one) {
        bool all_pos = true;
        for (long n = 1; n <= n_max; ++n)
            all_pos = all_pos && a[static_cast<std::size_t>(n)].sign() > 0;
        rep.sign_claims.push_back(
            {"1<=n<=" + std::to_string(n_max), "a_n > 0 (case v > 1)", all_pos});
    } else if (v > half) {
        // Case 2: one sign change in b at n1, one in a at n0, with n0 > n1
        long n1 = first_index_where([](const BigRat& x) { return x.sign() < 0; }, b);
        long n0 = first_index_where([](const BigRat& x) { return x.sign() < 0; }, a);
        rep.sign_claims.push_back(
            {"b_n", "exactly one sign change (+ to -)", count_changes(b) == 1 && n1 > 1});
        rep.sign_claims.push_back(
            {"a_n", "exactly one sign change (+ to -)", count_changes(a) == 1 && n0 > 1});
        rep.sign_claims.push_back({"ordering", "n_0 > n_1 (a flips after b)", n0 > n1 && n1 > 0});
    } else {
        // Case 3: mirrored
        long n1 = first_index_where([](const BigRat& x) { return x.sign() > 0; }, b);
        long n0 = first_index_where([](const BigRat& x) { return x.sign() > 0; }, a);
        rep.sign_claims.push_back(
            {"b_n", "exactly one sign change (- to +)", count_changes(b) == 1 && n1 > 1});
        rep.sign_claims.push_back(
            {"a_n", "exactly one sign change (- to +)", count_changes(a) == 1 && n0 > 1});
        rep.sign_claims.push_back({"ordering", "n_0 > n_1 (a flips after b)", n0 > n1 && n1 > 0});
    }
    return rep;
}

} // namespace monolap::exactseq
