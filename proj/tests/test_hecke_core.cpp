#include "hecke/hecke_core.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hecke/errors.hpp"
#include "hecke/primes.hpp"
#include "oracles.hpp"

using namespace hecke;
using std::numbers::pi;

namespace {

// brute-force zero scan, independent of classify_zero_pattern
bool recurrence_vanishes(const mpz_class& a_p, std::uint64_t norm, int weight,
                         std::uint64_t r_max, const ZeroPattern& claimed) {
    const mpz_class q_pow = integer_power(norm, static_cast<unsigned long>(weight - 1));
    mpz_class prev = 1, cur = a_p;
    for (std::uint64_t r = 1; r <= r_max; ++r) {
        if ((cur == 0) != claimed.vanishes_at(r)) return false;
        mpz_class next = a_p * cur - q_pow * prev;
        prev = cur;
        cur = next;
    }
    return true;
}

}  // namespace

TEST_SUITE("hecke_core") {

TEST_CASE("hecke_power reproduces tau at prime powers") {
    const auto tau = oracle::tau_table(32);
    CHECK(hecke_power(mpz_class(-24), 2, 12, 2) == tau[4]);
    CHECK(hecke_power(mpz_class(-24), 2, 12, 2) == mpz_class(-1472));
    CHECK(hecke_power(mpz_class(-24), 2, 12, 3) == tau[8]);
    CHECK(hecke_power(mpz_class(-24), 2, 12, 5) == tau[32]);
    CHECK(hecke_power(mpz_class(252), 3, 12, 2) == tau[9]);
    CHECK(hecke_power(mpz_class(252), 3, 12, 3) == tau[27]);
}

TEST_CASE("hecke_power base cases and a_p = 0") {
    CHECK(hecke_power(mpz_class(12345), 7, 16, 0) == 1);
    CHECK(hecke_power(mpz_class(-5), 3, 4, 1) == -5);
    for (std::uint64_t q : {2ull, 5ull, 9ull}) {
        for (int w : {2, 12}) {
            CHECK(hecke_power(mpz_class(0), q, w, 2) ==
                  -integer_power(q, static_cast<unsigned long>(w - 1)));
        }
    }
}

TEST_CASE("hecke_power rejects bad exponents and weights") {
    CHECK_THROWS_AS(hecke_power(mpz_class(1), 2, 12, -1), std::invalid_argument);
    CHECK_THROWS_AS(hecke_power(mpz_class(1), 2, 11, 2), std::invalid_argument);
    CHECK_THROWS_AS(hecke_power(mpz_class(1), 2, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(hecke_power({1.0, 0.0}, {1.0, 0.0}, 2.0, 7, 2),
                    std::invalid_argument);
}

TEST_CASE("parity law: a_p = 0 forces C(p^{2m}) = (-chi q^{w-1})^m") {
    for (int m = 0; m <= 30; ++m) {
        mpz_class expect;
        mpz_class base = -integer_power(5, 11);
        mpz_pow_ui(expect.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m));
        CHECK(hecke_power(mpz_class(0), 5, 12, 2 * m) == expect);
        if (m >= 1) CHECK(hecke_power(mpz_class(0), 5, 12, 2 * m - 1) == 0);
    }
}

TEST_CASE("normalized_coeff against direct high-precision evaluation") {
    CHECK(normalized_coeff(mpz_class(-24), 2, 12, 1) ==
          doctest::Approx(-24.0 / std::pow(2.0, 5.5)).epsilon(1e-13));
    CHECK(normalized_coeff(-24.0, 2.0, 12, 1) ==
          doctest::Approx(-0.5303300858899106).epsilon(1e-13));
    CHECK(normalized_coeff(mpz_class(1), 7, 16, 0) == doctest::Approx(1.0));
    // extremal Deligne case beta = 2: C = 2 q^{(w-1)/2} at q = 4, w = 4
    CHECK(normalized_coeff(mpz_class(16), 4, 4, 1) == doctest::Approx(2.0));
    // huge table values stay finite through the log-space path
    const mpz_class big = hecke_power(mpz_class(-24), 2, 12, 400);
    const double nb = normalized_coeff(big, 2, 12, 400);
    CHECK(std::isfinite(nb));
    CHECK(std::abs(nb) <= 401.0);
}

TEST_CASE("angle_of endpoints, oracle value, and Deligne guard") {
    CHECK(angle_of(0.0) == doctest::Approx(pi / 2).epsilon(1e-14));
    CHECK(angle_of(2.0) == doctest::Approx(0.0));
    CHECK(angle_of(-2.0) == doctest::Approx(pi).epsilon(1e-14));
    const double beta = normalized_coeff(mpz_class(-24), 2, 12, 1);
    CHECK(angle_of(beta) == doctest::Approx(std::acos(beta / 2.0)).epsilon(1e-15));
    CHECK(angle_of(beta) == doctest::Approx(1.8391714154092522).epsilon(1e-12));
    CHECK(angle_of(2.0 + 0.9e-9) == doctest::Approx(0.0));
    CHECK_THROWS_AS(angle_of(2.0 + 1e-8), DataError);
    CHECK_THROWS_AS(angle_of(-2.1), DataError);
}

TEST_CASE("chebyshev_value boundary cases and sine quotient") {
    CHECK(chebyshev_value(pi / 2, 1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(chebyshev_value(pi, 3) == -4.0);
    CHECK(chebyshev_value(pi, 2) == 3.0);
    CHECK(chebyshev_value(0.0, 7) == 8.0);
    CHECK(chebyshev_value(1.0, 7) ==
          doctest::Approx(std::sin(8.0) / std::sin(1.0)).epsilon(1e-14));
}

TEST_CASE("chebyshev_value bound |U_m| <= m+1") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> angles(0.0, pi);
    for (int trial = 0; trial < 20000; ++trial) {
        const double theta = angles(rng);
        const int m = static_cast<int>(rng() % 501);
        const double v = chebyshev_value(theta, m);
        CHECK(std::abs(v) <= m + 1.0);
    }
    // near-boundary angles outside the 1e-12 snap still respect the bound
    for (double theta : {1e-11, 1e-7, pi - 1e-11, pi - 1e-7})
        for (int m : {1, 13, 500}) CHECK(std::abs(chebyshev_value(theta, m)) <= m + 1.0);
}

TEST_CASE("closed-form equivalence: recurrence, normalized, equals chebyshev") {
    std::mt19937_64 rng(7771);
    std::uniform_real_distribution<double> angles(0.0, pi);
    const std::uint64_t qs[] = {2, 3, 5};
    int checked = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const double theta = angles(rng);
        const int m = static_cast<int>(rng() % 500) + 1;
        const double q = static_cast<double>(qs[rng() % 3]);
        const int w = 2;
        const double a_p = 2.0 * std::cos(theta) * std::pow(q, (w - 1) / 2.0);
        const std::complex<double> c = hecke_power({a_p, 0.0}, {1.0, 0.0}, q, w, m);
        const double norm_c = normalized_coeff(c.real(), q, w, m);
        const double cheb = chebyshev_value(theta, m);
        if (std::abs(cheb) < 1e-4) continue;  // relative comparison needs signal
        CHECK(norm_c == doctest::Approx(cheb).epsilon(1e-8));
        ++checked;
    }
    CHECK(checked > 9900);
}

TEST_CASE("satake_pair examples from the quadratic formula") {
    SUBCASE("a_p = 0 gives a pure imaginary pair") {
        const auto pair = satake_pair(0.0, {1.0, 0.0}, 3, 4);
        CHECK(pair.alpha.real() == doctest::Approx(0.0));
        CHECK(pair.alpha.imag() == doctest::Approx(std::sqrt(27.0)).epsilon(1e-14));
        CHECK(pair.beta.imag() == doctest::Approx(-std::sqrt(27.0)).epsilon(1e-14));
    }
    SUBCASE("zero discriminant gives the double root") {
        const auto pair = satake_pair(16.0, {1.0, 0.0}, 4, 4);  // 16^2 = 4 * 4^3
        CHECK(pair.alpha.real() == doctest::Approx(8.0));
        CHECK(pair.alpha.imag() == doctest::Approx(0.0));
        CHECK(pair.beta.real() == doctest::Approx(8.0));
    }
    SUBCASE("tau(2): conjugate pair on the circle of radius 2^{11/2}") {
        const auto pair = satake_pair(-24.0, {1.0, 0.0}, 2, 12);
        CHECK(pair.alpha.real() == doctest::Approx(-12.0));
        CHECK(pair.alpha.imag() == doctest::Approx(std::sqrt(1904.0)).epsilon(1e-14));
        CHECK(std::norm(pair.alpha) == doctest::Approx(2048.0).epsilon(1e-12));
        CHECK(pair.beta == std::conj(pair.alpha));
    }
}

TEST_CASE("satake consistency: root identities reconstruct the recurrence") {
    std::mt19937_64 rng(555);
    const std::complex<double> characters[] = {
        {1.0, 0.0}, {0.0, 1.0}, {-0.5, std::sqrt(3.0) / 2.0}};
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t q = (trial % 2 == 0) ? 2 : 3;
        const int w = (trial % 3 == 0) ? 4 : 2;
        const double bound = 2.0 * std::pow(static_cast<double>(q), (w - 1) / 2.0);
        std::uniform_real_distribution<double> coeffs(-bound, bound);
        const double a_p = coeffs(rng);
        const auto chi = characters[rng() % 3];
        const auto pair = satake_pair(a_p, chi, q, w);

        CHECK((pair.alpha + pair.beta).real() == doctest::Approx(a_p).epsilon(1e-12));
        const std::complex<double> prod = pair.alpha * pair.beta;
        const std::complex<double> expect = chi * std::pow(static_cast<double>(q), w - 1);
        CHECK(std::abs(prod - expect) <= 1e-12 * std::abs(expect));

        if (std::abs(pair.alpha - pair.beta) < 1e-6) continue;
        const int r = static_cast<int>(rng() % 40) + 1;
        const std::complex<double> via_roots =
            (std::pow(pair.alpha, r + 1) - std::pow(pair.beta, r + 1)) /
            (pair.alpha - pair.beta);
        const std::complex<double> via_recurrence =
            hecke_power({a_p, 0.0}, chi, static_cast<double>(q), w, r);
        if (std::abs(via_recurrence) < 1e-6) continue;
        CHECK(std::abs(via_roots - via_recurrence) <=
              1e-9 * std::abs(via_recurrence));
    }
}

TEST_CASE("classify_zero_pattern: the four progressions and the empty cases") {
    CHECK(classify_zero_pattern(mpz_class(0), 2, 12) == ZeroPattern::progression(2));
    CHECK(classify_zero_pattern(mpz_class(0), 9, 4) == ZeroPattern::progression(2));
    CHECK(classify_zero_pattern(mpz_class(8), 4, 4) == ZeroPattern::progression(3));
    CHECK(classify_zero_pattern(mpz_class(-8), 4, 4) == ZeroPattern::progression(3));
    CHECK(classify_zero_pattern(mpz_class(64), 2, 12) == ZeroPattern::progression(4));
    CHECK(classify_zero_pattern(mpz_class(3), 3, 2) == ZeroPattern::progression(6));
    CHECK(classify_zero_pattern(mpz_class(-24), 2, 12) == ZeroPattern::empty());
    // double root: C(p^r) = (r+1) alpha^r never vanishes
    CHECK(classify_zero_pattern(mpz_class(16), 4, 4) == ZeroPattern::empty());
}

TEST_CASE("classified patterns agree with the exact recurrence") {
    struct Case {
        long a;
        std::uint64_t q;
        int w;
    };
    const Case cases[] = {{0, 2, 12}, {0, 3, 2},  {8, 4, 4},   {-8, 4, 4},  {32, 4, 6},
                          {64, 2, 12}, {-64, 2, 12}, {2, 2, 2}, {3, 3, 2},   {-3, 3, 2},
                          {9, 3, 4},  {16, 4, 4},  {-24, 2, 12}, {252, 3, 12}, {10, 7, 4}};
    for (const auto& c : cases) {
        const auto pattern = classify_zero_pattern(mpz_class(c.a), c.q, c.w);
        CHECK_MESSAGE(recurrence_vanishes(mpz_class(c.a), c.q, c.w, 300, pattern),
                      "a=", c.a, " q=", c.q, " w=", c.w);
    }
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t q = 2 + rng() % 97;
        if (!is_prime(q)) continue;
        const int w = 2 * (1 + static_cast<int>(rng() % 6));
        mpz_class bound = 4 * integer_power(q, static_cast<unsigned long>(w - 1));
        mpz_class a = mpz_class(static_cast<unsigned long>(rng())) % bound;
        if (rng() % 2) a = -a;
        const auto pattern = classify_zero_pattern(a, q, w);
        CHECK(recurrence_vanishes(a, q, w, 200, pattern));
    }
}

TEST_CASE("zero pattern accessors") {
    CHECK_THROWS_AS(ZeroPattern::empty().modulus(), std::logic_error);
    CHECK_FALSE(ZeroPattern::empty().vanishes_at(5));
    const auto t3 = ZeroPattern::progression(3);
    CHECK(t3.vanishes_at(2));
    CHECK(t3.vanishes_at(5));
    CHECK_FALSE(t3.vanishes_at(3));
    CHECK_FALSE(t3.vanishes_at(0));
}

}  // TEST_SUITE
