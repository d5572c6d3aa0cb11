#pragma once

#include <string>
#include <string_view>

#include "monolap/bigint.hpp"
#include "monolap/errors.hpp"

namespace monolap {

// Exact rational. Always normalized: den > 0, gcd(num, den) = 1, 0 = 0/1.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(long long v) : num_(v), den_(1) {}
    BigRat(long v) : num_(v), den_(1) {}
    BigRat(int v) : num_(v), den_(1) {}
    BigRat(BigInt v) : num_(std::move(v)), den_(1) {}
    BigRat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    // Accepts "p", "-p" or "p/q".
    static BigRat from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return BigRat(BigInt::from_string(s));
        return BigRat(BigInt::from_string(s.substr(0, slash)),
                      BigInt::from_string(s.substr(slash + 1)));
    }

    static BigRat pow(const BigRat& base, unsigned long exp) {
        return BigRat(BigInt::pow(base.num_, exp), BigInt::pow(base.den_, exp));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend BigRat operator+(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRat operator-(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRat operator*(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        if (b.is_zero()) throw DomainError("BigRat: division by zero");
        return BigRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    BigRat operator-() const {
        BigRat r = *this;
        r.num_.negate();
        return r;
    }
    BigRat& operator+=(const BigRat& o) { *this = *this + o; return *this; }
    BigRat& operator-=(const BigRat& o) { *this = *this - o; return *this; }
    BigRat& operator*=(const BigRat& o) { *this = *this * o; return *this; }
    BigRat& operator/=(const BigRat& o) { *this = *this / o; return *this; }

    friend bool operator==(const BigRat& a, const BigRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return !(a == b); }
    friend bool operator<(const BigRat& a, const BigRat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const BigRat& a, const BigRat& b) { return b < a; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return !(b < a); }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return !(a < b); }

    // "p" when integral, else "p/q".
    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    // For report rendering only; exact values live in to_string().
    double to_double() const {
        if (num_.is_zero()) return 0.0;
        BigInt q, r;
        BigInt::divmod(num_, den_, q, r);
        double head = q.to_double();
        // refine with two more 2^53-scaled digits of the remainder
        BigInt scale = BigInt::pow(BigInt(2), 53);
        BigInt q2, r2;
        BigInt::divmod(r * scale, den_, q2, r2);
        return head + q2.to_double() / 9007199254740992.0;
    }

private:
    BigInt num_;
    BigInt den_;

    void normalize() {
        if (den_.is_zero()) throw DomainError("BigRat: zero denominator");
        if (den_.is_negative()) {
            den_.negate();
            num_.negate();
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

} // namespace monolap
