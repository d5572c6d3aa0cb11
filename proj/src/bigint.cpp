#include "monolap/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "monolap/errors.hpp"

namespace monolap {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                                 : 0ull - static_cast<unsigned long long>(v);
    while (u != 0) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffull));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const {
    return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out;
    out.reserve(big.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        out.push_back(static_cast<std::uint32_t>(s & 0xffffffffull));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::size_t BigInt::bit_length(const std::vector<std::uint32_t>& m) {
    if (m.empty()) return 0;
    std::uint32_t top = m.back();
    std::size_t bits = (m.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigInt::get_bit(const std::vector<std::uint32_t>& m, std::size_t i) {
    std::size_t limb = i / 32, off = i % 32;
    if (limb >= m.size()) return false;
    return (m[limb] >> off) & 1u;
}

void BigInt::shl1(std::vector<std::uint32_t>& m, bool carry_in) {
    std::uint32_t carry = carry_in ? 1u : 0u;
    for (auto& limb : m) {
        std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) m.push_back(carry);
}

void BigInt::divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    if (v.empty()) throw DomainError("BigInt: division by zero");
    q.clear();
    r.clear();
    if (cmp_mag(u, v) < 0) {
        r = u;
        return;
    }
    if (v.size() == 1) {
        // single-limb fast path
        std::uint64_t d = v[0];
        q.assign(u.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = u.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | u[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }
    // binary restoring division
    std::size_t nbits = bit_length(u);
    q.assign(u.size(), 0);
    for (std::size_t i = nbits; i-- > 0;) {
        shl1(r, get_bit(u, i));
        if (cmp_mag(r, v) >= 0) {
            r = sub_mag(r, v);
            q[i / 32] |= (1u << (i % 32));
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
        out.sign_ = a.sign_;
        out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt{};
        if (c > 0) {
            out.sign_ = a.sign_;
            out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            out.sign_ = b.sign_;
            out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    out.trim();
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt nb = b;
    nb.negate();
    return a + nb;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    if (a.sign_ == 0 || b.sign_ == 0) return out;
    out.sign_ = a.sign_ * b.sign_;
    out.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    out.trim();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.negate();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt{};
    r = BigInt{};
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    // binary gcd on magnitudes
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;

    auto trailing_zeros = [](const std::vector<std::uint32_t>& m) {
        std::size_t tz = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                tz += 32;
            } else {
                std::uint32_t x = m[i];
                while ((x & 1u) == 0) {
                    ++tz;
                    x >>= 1;
                }
                break;
            }
        }
        return tz;
    };
    auto shr = [](std::vector<std::uint32_t>& m, std::size_t k) {
        std::size_t limbs = k / 32, bits = k % 32;
        if (limbs) m.erase(m.begin(), m.begin() + std::min(limbs, m.size()));
        if (bits && !m.empty()) {
            for (std::size_t i = 0; i + 1 < m.size(); ++i)
                m[i] = (m[i] >> bits) | (m[i + 1] << (32 - bits));
            m.back() >>= bits;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
    };
    auto shl = [](std::vector<std::uint32_t>& m, std::size_t k) {
        if (m.empty()) return;
        std::size_t limbs = k / 32, bits = k % 32;
        if (bits) {
            std::uint32_t carry = 0;
            for (auto& limb : m) {
                std::uint32_t next = limb >> (32 - bits);
                limb = (limb << bits) | carry;
                carry = next;
            }
            if (carry) m.push_back(carry);
        }
        if (limbs) m.insert(m.begin(), limbs, 0u);
    };

    std::size_t ta = trailing_zeros(a.mag_), tb = trailing_zeros(b.mag_);
    std::size_t shift = std::min(ta, tb);
    shr(a.mag_, ta);
    shr(b.mag_, tb);
    while (!b.mag_.empty()) {
        shr(b.mag_, trailing_zeros(b.mag_));
        if (cmp_mag(a.mag_, b.mag_) > 0) std::swap(a.mag_, b.mag_);
        b.mag_ = sub_mag(b.mag_, a.mag_);
    }
    shl(a.mag_, shift);
    a.sign_ = a.mag_.empty() ? 0 : 1;
    return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned long exp) {
    BigInt result(1), b = base;
    while (exp) {
        if (exp & 1ul) result = result * b;
        exp >>= 1;
        if (exp) b = b * b;
    }
    return result;
}

BigInt BigInt::factorial(unsigned long n) {
    BigInt result(1);
    for (unsigned long k = 2; k <= n; ++k) result = result * BigInt(static_cast<long long>(k));
    return result;
}

BigInt BigInt::from_string(std::string_view s) {
    BigInt out;
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw DomainError("BigInt: empty numeral");
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '_' || c == '\'' || c == ' ') continue;  // digit grouping
        if (c < '0' || c > '9') throw DomainError("BigInt: bad digit in numeral");
        out = out * ten + BigInt(c - '0');
    }
    if (neg) out.negate();
    return out;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t u = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return u <= 0x7fffffffffffffffull;
    return u <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw DomainError("BigInt: does not fit in int64");
    std::uint64_t u = 0;
    if (!mag_.empty()) u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    if (sign_ < 0) return -static_cast<long long>(u);
    return static_cast<long long>(u);
}

double BigInt::to_double() const {
    double r = 0.0;
    for (std::size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -r : r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    const std::uint64_t chunk = 1000000000ull;  // 10^9
    while (!m.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / chunk);
            rem = cur % chunk;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace monolap
