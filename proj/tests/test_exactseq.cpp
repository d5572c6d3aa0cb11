#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>

#include "monolap/errors.hpp"
#include "monolap/exactseq.hpp"

using namespace monolap;
using namespace monolap::exactseq;

TEST_CASE("d_4..d_9 match the published table exactly") {
    const char* expected[6] = {
        "-66802176",        "-13774616064",      "-1570251361536",
        "-127269822161664", "-7526731991528448", "-240861038835686400",
    };
    for (long n = 4; n <= 9; ++n) CHECK(phi_dn(n).to_string() == expected[n - 4]);
    CHECK_THROWS_AS(phi_dn(3), DomainError);
}

TEST_CASE("closed form equals the coefficient route for 4 <= n <= 30") {
    for (long n = 4; n <= 30; ++n) CHECK(phi_dn(n) == phi_dn_definitional(n));
}

TEST_CASE("d_n > 0 exactly for 10 <= n <= 200, under ten seconds") {
    auto start = std::chrono::steady_clock::now();
    for (long n = 10; n <= 200; ++n) CHECK(phi_dn(n).sign() > 0);
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    CHECK(elapsed.count() < 10.0);
}

TEST_CASE("a_hat and b_hat basics") {
    CHECK(phi_b_hat(3).is_zero());
    CHECK(phi_b_hat(4).to_int64() == 80);
    CHECK(phi_b_hat(5).to_int64() == 1288);
    CHECK(phi_a_hat(3).is_zero());
    CHECK(phi_a_hat(4).to_int64() == -1176);
}

TEST_CASE("b_n identity residual is exactly zero for 3 <= n <= 100") {
    auto rep = phi_bn_checks(100);
    CHECK(rep.all_ok());
    for (const auto& r : rep.recurrence_residuals) {
        CHECK(r.ok);
        CHECK(r.value == "0");
    }
}

TEST_CASE("starred values and recurrences") {
    CHECK(phi_a_star(10).to_string() == "710697141/6815744");
    CHECK(phi_b_star(10).to_string() == "174443916097/149159936");
    auto rep = phi_star_checks(60);
    CHECK(rep.all_ok());
}

TEST_CASE("phi-dn report aggregates all claims") {
    auto rep = phi_dn_report(50);
    CHECK(rep.all_ok());
    CHECK(rep.values.front().value == "-66802176");
}

TEST_CASE("h_v sequences: initial values at v = 3/4") {
    BigRat v = BigRat::from_string("3/4");
    CHECK(hv_a(v, 1) == BigRat(5));
    CHECK(hv_b(v, 1) == BigRat::from_string("45/32"));
}

TEST_CASE("h_v recurrence residuals exactly zero for n <= 50") {
    for (const char* vs : {"1/4", "3/4", "3/2", "5/4"}) {
        auto rep = hv_sequences(BigRat::from_string(vs), 50);
        for (const auto& r : rep.recurrence_residuals) {
            CHECK(r.ok);
            CHECK(r.value == "0");
        }
    }
}

TEST_CASE("h_v case-2 sign pattern at v = 3/4") {
    auto rep = hv_sequences(BigRat::from_string("3/4"), 50);
    CHECK(rep.all_ok());
}

TEST_CASE("h_v case-3 sign pattern at v = 1/4") {
    auto rep = hv_sequences(BigRat::from_string("1/4"), 50);
    CHECK(rep.all_ok());
    // a_n <= 0 up to n0 then >= 0
    BigRat v = BigRat::from_string("1/4");
    long n0 = -1;
    for (long n = 1; n <= 50; ++n) {
        if (hv_a(v, n).sign() > 0) {
            n0 = n;
            break;
        }
    }
    REQUIRE(n0 > 1);
    for (long n = 1; n < n0; ++n) CHECK(hv_a(v, n).sign() <= 0);
    for (long n = n0; n <= 50; ++n) CHECK(hv_a(v, n).sign() >= 0);
}

TEST_CASE("h_v case-1 at v = 3/2") {
    auto rep = hv_sequences(BigRat::from_string("3/2"), 50);
    CHECK(rep.all_ok());
}

TEST_CASE("excluded v values rejected") {
    CHECK_THROWS_AS(hv_sequences(BigRat::from_string("1/2"), 10), DomainError);
    CHECK_THROWS_AS(hv_sequences(BigRat(1), 10), DomainError);
    CHECK_THROWS_AS(hv_sequences(BigRat(-1), 10), DomainError);
}
