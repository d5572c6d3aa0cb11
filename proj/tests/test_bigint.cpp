#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>

#include "monolap/bigint.hpp"
#include "monolap/rational.hpp"

using monolap::BigInt;
using monolap::BigRat;

TEST_CASE("small arithmetic agrees with int64") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<std::int64_t> dist(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
    }
}

TEST_CASE("divmod round-trips on large operands") {
    std::mt19937_64 rng(7);
    auto random_big = [&](int limbs) {
        BigInt x(0);
        BigInt shift = BigInt::pow(BigInt(2), 32);
        for (int i = 0; i < limbs; ++i)
            x = x * shift + BigInt(static_cast<long long>(rng() & 0xffffffffull));
        return x;
    };
    for (int i = 0; i < 60; ++i) {
        BigInt a = random_big(2 + static_cast<int>(rng() % 12));
        BigInt b = random_big(1 + static_cast<int>(rng() % 6));
        if (b.is_zero()) continue;
        if (rng() & 1) a.negate();
        if (rng() & 1) b.negate();
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("powers and factorials match known digit strings") {
    CHECK(BigInt::pow(BigInt(3), 50).to_string() == "717897987691852588770249");
    CHECK(BigInt::factorial(25).to_string() == "15511210043330985984000000");
    CHECK(BigInt::from_string("-717897987691852588770249") ==
          -BigInt::pow(BigInt(3), 50));
    CHECK(BigInt::from_string("66 802 176").to_int64() == 66802176);
}

TEST_CASE("decimal round-trip on random wide integers") {
    std::mt19937_64 rng(3331);
    BigInt shift = BigInt::pow(BigInt(2), 32);
    for (int i = 0; i < 40; ++i) {
        BigInt x(0);
        int limbs = 1 + static_cast<int>(rng() % 40);
        for (int j = 0; j < limbs; ++j)
            x = x * shift + BigInt(static_cast<long long>(rng() & 0xffffffffull));
        if (rng() & 1) x.negate();
        CHECK(BigInt::from_string(x.to_string()) == x);
    }
}

TEST_CASE("gcd basics") {
    CHECK(BigInt::gcd(BigInt(0), BigInt(-6)).to_int64() == 6);
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)).to_int64() == 6);
    BigInt a = BigInt::pow(BigInt(2), 97) * BigInt(81);
    BigInt b = BigInt::pow(BigInt(2), 64) * BigInt(27) * BigInt(49);
    CHECK(BigInt::gcd(a, b) == BigInt::pow(BigInt(2), 64) * BigInt(27));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        BigInt x(static_cast<long long>(rng() % 1000000 + 1));
        BigInt y(static_cast<long long>(rng() % 1000000 + 1));
        BigInt g = BigInt::gcd(x, y);
        CHECK((x % g).is_zero());
        CHECK((y % g).is_zero());
        CHECK(BigInt::gcd(x / g, y / g).is_one());
    }
}

TEST_CASE("rationals normalize and compare") {
    BigRat half(BigInt(2), BigInt(4));
    CHECK(half.to_string() == "1/2");
    CHECK(BigRat(BigInt(-3), BigInt(-6)) == half);
    CHECK(BigRat(BigInt(3), BigInt(-6)) == -half);
    CHECK(half + half == BigRat(1));
    CHECK(half * BigRat(BigInt(2), BigInt(3)) == BigRat(BigInt(1), BigInt(3)));
    CHECK(BigRat::from_string("710697141/6815744").to_string() == "710697141/6815744");
    CHECK(BigRat::from_string("3/4") < BigRat::from_string("4/5"));
    CHECK(doctest::Approx(BigRat::from_string("-7/30").to_double()) == -7.0 / 30.0);
    BigRat p = BigRat::pow(BigRat::from_string("3/2"), 20);
    CHECK(p.to_string() == "3486784401/1048576");
}
