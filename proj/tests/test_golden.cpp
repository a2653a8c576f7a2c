#include <doctest.h>

#include <cmath>
#include <random>

#include "pegging/golden.hpp"

using namespace peg;

namespace {

const double kOmega = (std::sqrt(5.0) - 1.0) / 2.0;

GoldenNumber g(long a, long b) { return {mpq_class(a), mpq_class(b)}; }

}  // namespace

TEST_SUITE("golden") {

TEST_CASE("omega powers reduce to integer coefficients") {
    CHECK(omega_pow(0) == g(1, 0));
    CHECK(omega_pow(1) == g(0, 1));
    CHECK(omega_pow(2) == g(1, -1));
    CHECK(omega_pow(3) == g(-1, 2));
    CHECK(omega_pow(4) == g(2, -3));
    for (unsigned k = 0; k <= 40; ++k) {
        CHECK(omega_pow(k).is_integral());
        CHECK(std::abs(omega_pow(k).to_double() - std::pow(kOmega, k)) < 1e-9);
    }
}

TEST_CASE("omega powers agree past the cached table") {
    GoldenNumber p = 1;
    for (unsigned k = 0; k <= 130; ++k) {
        CHECK(omega_pow(k) == p);
        p *= GoldenNumber::omega();
    }
}

TEST_CASE("omega satisfies x^2 + x = 1") {
    const GoldenNumber w = GoldenNumber::omega();
    CHECK(w * w == GoldenNumber(1) - w);
    CHECK(cmp_rational(w + w * w, 1) == std::strong_ordering::equal);
    CHECK(cmp_rational(w, 1) == std::strong_ordering::less);
    CHECK(cmp_rational(GoldenNumber(0, 2), 1) == std::strong_ordering::greater);
}

TEST_CASE("product formula") {
    // (a + bw)(c + dw) = (ac + bd) + (ad + bc - bd)w
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (int i = 0; i < 200; ++i) {
        const long a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
        CHECK(g(a, b) * g(c, d) == g(a * c + b * d, a * d + b * c - b * d));
    }
}

TEST_CASE("ring laws on random values") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-30, 30);
    auto rnd = [&] { return GoldenNumber(mpq_class(coef(rng), 7), mpq_class(coef(rng), 3)); };
    for (int i = 0; i < 100; ++i) {
        const GoldenNumber x = rnd(), y = rnd(), z = rnd();
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x + y - y == x);
        if (!x.is_zero()) CHECK(x * x.inverse() == GoldenNumber(1));
    }
    for (unsigned m = 0; m <= 64; m += 7) {
        for (unsigned n = 0; n <= 64; n += 9) CHECK(omega_pow(m) * omega_pow(n) == omega_pow(m + n));
    }
}

TEST_CASE("exact ordering matches floating point away from ties") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coef(-1000, 1000);
    for (int i = 0; i < 1000; ++i) {
        const GoldenNumber x = g(coef(rng), coef(rng));
        const double v = x.to_double();
        if (std::abs(v) < 1e-9) continue;
        CHECK(x.sign() == (v > 0 ? 1 : -1));
    }
    CHECK(sign_with_sqrt5(-2, 1) == 1);  // sqrt5 > 2
    CHECK(sign_with_sqrt5(3, -1) == 1);  // 3 > sqrt5
    CHECK(sign_with_sqrt5(0, 0) == 0);
}

TEST_CASE("near-tie comparison is exact") {
    // F_{k+1} w - F_k alternates in sign and shrinks like w^k.
    long f0 = 0, f1 = 1;
    for (int k = 1; k < 60; ++k) {
        const GoldenNumber x = g(-f0, f1);  // F_k = f1, F_{k-1} = f0: equals (-1)^{k+1} w^k
        CHECK(x == (k % 2 == 1 ? omega_pow(static_cast<unsigned>(k)) : -omega_pow(static_cast<unsigned>(k))));
        const long f2 = f0 + f1;
        f0 = f1;
        f1 = f2;
    }
}

TEST_CASE("inverse of zero throws") {
    CHECK_THROWS_AS(GoldenNumber().inverse(), std::domain_error);
    CHECK(GoldenNumber(0, 1).inverse() == g(1, 1));  // 1/w = 1 + w
    CHECK(omega_pow(2).inverse() == g(2, 1));
}

TEST_CASE("OmegaInt mirrors GoldenNumber") {
    for (unsigned k = 0; k <= 90; ++k) CHECK(omega_pow_int(k).exact() == omega_pow(k));
    CHECK_THROWS_AS(omega_pow_int(91), std::overflow_error);
    OmegaInt x = omega_pow_int(3) + omega_pow_int(2);
    CHECK(x == omega_pow_int(1));
    CHECK(omega_pow_int(5) < omega_pow_int(4));
    CHECK(OmegaInt{1, 0} > omega_pow_int(1));
    OmegaInt big{INT64_MAX - 1, 0};
    CHECK_THROWS_AS(big += (OmegaInt{5, 0}), std::overflow_error);
}

TEST_CASE("float hint precision") {
    const GoldenNumber x(mpq_class(1, 3), mpq_class(-2, 7));
    CHECK(std::abs(x.to_double() - (1.0 / 3 - 2.0 / 7 * kOmega)) < 1e-12);
}

}
