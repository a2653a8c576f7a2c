#include "pegging/golden.hpp"

#include <array>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace peg {

namespace {

std::strong_ordering from_sign(int s) {
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Coefficients of w^k for k <= 90 fit in int64 (they are Fibonacci numbers).
constexpr unsigned kMaxIntPower = 90;

const std::array<OmegaInt, kMaxIntPower + 1>& int_power_table() {
    static const auto table = [] {
        std::array<OmegaInt, kMaxIntPower + 1> t{};
        t[0] = {1, 0};
        for (unsigned k = 1; k <= kMaxIntPower; ++k) {
            // w * (a + b w) = b + (a - b) w
            t[k] = {t[k - 1].b, t[k - 1].a - t[k - 1].b};
        }
        return t;
    }();
    return table;
}

constexpr std::int64_t kCoefficientLimit = std::int64_t{1} << 62;

void check_range(std::int64_t v) {
    if (v >= kCoefficientLimit || v <= -kCoefficientLimit) {
        throw std::overflow_error("OmegaInt coefficient out of range");
    }
}

}  // namespace

GoldenNumber::GoldenNumber(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

bool GoldenNumber::is_integral() const {
    return a_.get_den() == 1 && b_.get_den() == 1;
}

int sign_with_sqrt5(const mpq_class& p, const mpq_class& q) {
    const int sp = sgn(p);
    const int sq = sgn(q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 with 5 q^2. They are never equal since
    // sqrt(5) is irrational and both are nonzero.
    const mpq_class lhs = p * p;
    const mpq_class rhs = 5 * q * q;
    const int mag = cmp(lhs, rhs);
    return mag > 0 ? sp : sq;
}

int GoldenNumber::sign() const {
    // a + b w = (2a - b)/2 + (b/2) sqrt(5)
    return sign_with_sqrt5(2 * a_ - b_, b_);
}

double GoldenNumber::to_double() const {
    constexpr unsigned kBits = 256;
    mpf_class root5(5, kBits);
    root5 = sqrt(root5);
    mpf_class a(a_, kBits);
    mpf_class b(b_, kBits);
    mpf_class value(0, kBits);
    value = (2 * a - b + b * root5) / 2;
    return value.get_d();
}

GoldenNumber GoldenNumber::inverse() const {
    // N(a + b w) = a^2 - ab - b^2 and the conjugate is (a - b) - b w.
    const mpq_class norm = a_ * a_ - a_ * b_ - b_ * b_;
    if (sgn(norm) == 0) {
        throw std::domain_error("GoldenNumber: division by zero");
    }
    return {(a_ - b_) / norm, -b_ / norm};
}

std::string GoldenNumber::to_string() const {
    std::ostringstream out;
    out << a_.get_str();
    if (sgn(b_) >= 0) {
        out << " + " << b_.get_str() << "w";
    } else {
        mpq_class nb = -b_;
        out << " - " << nb.get_str() << "w";
    }
    return out.str();
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o) {
    // (a + b w)(c + d w) = (ac + bd) + (ad + bc - bd) w
    const mpq_class bd = b_ * o.b_;
    mpq_class a = a_ * o.a_ + bd;
    mpq_class b = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

std::strong_ordering operator<=>(const GoldenNumber& x, const GoldenNumber& y) {
    return from_sign((x - y).sign());
}

GoldenNumber omega_pow(unsigned k) {
    if (k <= kMaxIntPower) {
        return int_power_table()[k].exact();
    }
    // Beyond the int64 table, continue the same recurrence in GMP integers.
    static std::mutex guard;
    static std::vector<std::pair<mpz_class, mpz_class>> extended;
    std::lock_guard lock(guard);
    if (extended.empty()) {
        const OmegaInt& last = int_power_table()[kMaxIntPower];
        extended.emplace_back(mpz_class(static_cast<long>(last.a)), mpz_class(static_cast<long>(last.b)));
    }
    while (extended.size() <= k - kMaxIntPower) {
        const auto& [a, b] = extended.back();
        mpz_class na = b;
        mpz_class nb = a - b;
        extended.emplace_back(std::move(na), std::move(nb));
    }
    const auto& [a, b] = extended[k - kMaxIntPower];
    return {mpq_class(a), mpq_class(b)};
}

std::strong_ordering cmp_rational(const GoldenNumber& x, const mpq_class& q) {
    // sign(x - q), with x - q = (2(a - q) - b)/2 + (b/2) sqrt(5)
    return from_sign(sign_with_sqrt5(2 * (x.rational_part() - q) - x.omega_part(), x.omega_part()));
}

OmegaInt& OmegaInt::operator+=(const OmegaInt& o) {
    if (__builtin_add_overflow(a, o.a, &a) || __builtin_add_overflow(b, o.b, &b)) {
        throw std::overflow_error("OmegaInt addition overflow");
    }
    check_range(a);
    check_range(b);
    return *this;
}

OmegaInt& OmegaInt::operator-=(const OmegaInt& o) {
    if (__builtin_sub_overflow(a, o.a, &a) || __builtin_sub_overflow(b, o.b, &b)) {
        throw std::overflow_error("OmegaInt subtraction overflow");
    }
    check_range(a);
    check_range(b);
    return *this;
}

OmegaInt OmegaInt::scaled(std::int64_t k) const {
    OmegaInt r;
    if (__builtin_mul_overflow(a, k, &r.a) || __builtin_mul_overflow(b, k, &r.b)) {
        throw std::overflow_error("OmegaInt scaling overflow");
    }
    check_range(r.a);
    check_range(r.b);
    return r;
}

int OmegaInt::sign() const {
    // a + b w = (p + q sqrt(5)) / 2 with p = 2a - b, q = b. |a|, |b| < 2^62
    // keeps p^2 and 5 q^2 inside unsigned 128-bit.
    const __int128 p = static_cast<__int128>(a) * 2 - b;
    const __int128 q = b;
    const int sp = (p > 0) - (p < 0);
    const int sq = (q > 0) - (q < 0);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    const unsigned __int128 up = static_cast<unsigned __int128>(p < 0 ? -p : p);
    const unsigned __int128 uq = static_cast<unsigned __int128>(q < 0 ? -q : q);
    return up * up > 5 * uq * uq ? sp : sq;
}

OmegaInt omega_pow_int(unsigned k) {
    if (k > kMaxIntPower) {
        throw std::overflow_error("omega_pow_int: exponent " + std::to_string(k) + " exceeds int64 table");
    }
    return int_power_table()[k];
}

}  // namespace peg
