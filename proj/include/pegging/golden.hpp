#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace peg {

// Exact element a + b*w of Q(w), where w = (sqrt(5) - 1) / 2 is the positive
// root of x^2 + x - 1. Values are always stored reduced: w^2 is rewritten as
// 1 - w, and a, b are canonical GMP rationals, so equal values compare equal
// field by field.
class GoldenNumber {
public:
    GoldenNumber() = default;
    GoldenNumber(mpq_class a, mpq_class b = 0);
    GoldenNumber(long a) : GoldenNumber(mpq_class(a)) {}

    static GoldenNumber omega() { return {0, 1}; }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& omega_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_integral() const;

    // Exact sign of the real value.
    int sign() const;

    // Display-only rendering; accurate to well below 1e-12 because the value
    // is evaluated in 256-bit floating point before rounding.
    double to_double() const;

    // Inverse in Q(w); throws std::domain_error on zero.
    GoldenNumber inverse() const;

    std::string to_string() const;

    GoldenNumber& operator+=(const GoldenNumber& o);
    GoldenNumber& operator-=(const GoldenNumber& o);
    GoldenNumber& operator*=(const GoldenNumber& o);
    GoldenNumber& operator/=(const GoldenNumber& o) { return *this *= o.inverse(); }

    friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
    friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
    friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }
    friend GoldenNumber operator/(GoldenNumber x, const GoldenNumber& y) { return x /= y; }
    GoldenNumber operator-() const { return {-a_, -b_}; }

    friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const GoldenNumber& x, const GoldenNumber& y);

private:
    mpq_class a_{0};
    mpq_class b_{0};
};

// Exact sign of p + q*sqrt(5) for rationals p, q.
int sign_with_sqrt5(const mpq_class& p, const mpq_class& q);

// w^k with integer coefficients, k >= 0.
GoldenNumber omega_pow(unsigned k);

// Exact three-way comparison of x against a rational.
std::strong_ordering cmp_rational(const GoldenNumber& x, const mpq_class& q);

// a + b*w with 64-bit integer coefficients. Used on hot search paths where
// every weight is an integer combination of w-powers. All arithmetic is
// overflow-checked and throws std::overflow_error instead of wrapping.
struct OmegaInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    OmegaInt& operator+=(const OmegaInt& o);
    OmegaInt& operator-=(const OmegaInt& o);
    friend OmegaInt operator+(OmegaInt x, const OmegaInt& y) { return x += y; }
    friend OmegaInt operator-(OmegaInt x, const OmegaInt& y) { return x -= y; }
    OmegaInt scaled(std::int64_t k) const;

    int sign() const;
    GoldenNumber exact() const { return {mpq_class(static_cast<long>(a)), mpq_class(static_cast<long>(b))}; }

    friend bool operator==(const OmegaInt&, const OmegaInt&) = default;
    friend std::strong_ordering operator<=>(const OmegaInt& x, const OmegaInt& y) {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
};

// w^k as OmegaInt; throws std::overflow_error past the int64 range (k > 90).
OmegaInt omega_pow_int(unsigned k);

}  // namespace peg
