#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace monolap {

// Signed arbitrary-precision integer. Magnitude is little-endian base 2^32.
// Sizes in this project stay below a few thousand bits, so schoolbook
// multiplication and shift-subtract division are plenty.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s);
    static BigInt pow(const BigInt& base, unsigned long exp);
    static BigInt factorial(unsigned long n);
    // gcd of magnitudes; result is nonnegative.
    static BigInt gcd(BigInt a, BigInt b);
    // Truncated division: q = trunc(a/b), r = a - q*b (r has the sign of a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;
    BigInt abs() const;
    BigInt& negate() { sign_ = -sign_; return *this; }

    bool fits_int64() const;
    long long to_int64() const;  // DomainError if it does not fit
    double to_double() const;
    std::string to_string() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);
    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;  // no trailing zero limbs; empty iff zero

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
    static std::size_t bit_length(const std::vector<std::uint32_t>& m);
    static bool get_bit(const std::vector<std::uint32_t>& m, std::size_t i);
    static void shl1(std::vector<std::uint32_t>& m, bool carry_in);
};

} // namespace monolap
