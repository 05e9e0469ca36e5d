#include "hecke/power_series.hpp"

#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace hecke;

namespace {

// signed coefficients spanning one to several limbs
PowerSeries random_series(std::size_t limit, unsigned bits, std::uint32_t seed) {
    std::mt19937_64 rng(seed);
    PowerSeries s(limit);
    for (std::size_t i = 0; i <= limit; ++i) {
        mpz_class v = 0;
        const unsigned words = (bits + 63) / 64;
        for (unsigned w = 0; w < words; ++w) {
            v <<= 64;
            v += mpz_class(static_cast<unsigned long>(rng()));
        }
        v >>= (64 * words - bits);
        if (rng() % 2) v = -v;
        if (rng() % 8 == 0) v = 0;  // keep some sparsity in play
        s[i] = v;
    }
    return s;
}

}  // namespace

TEST_SUITE("power_series") {

TEST_CASE("three multiplication kernels agree on random inputs") {
    for (std::uint32_t seed : {1u, 2u, 3u}) {
        for (unsigned bits : {7u, 61u, 200u}) {
            const PowerSeries a = random_series(97, bits, seed);
            const PowerSeries b = random_series(61, bits, seed + 100);
            for (std::size_t limit : {std::size_t{1}, std::size_t{60}, std::size_t{150},
                                      std::size_t{400}}) {
                const PowerSeries ref = mul_serial(a, b, limit);
                CHECK(mul_parallel(a, b, limit) == ref);
                CHECK(mul_kronecker(a, b, limit) == ref);
                CHECK(mul(a, b, limit, MulPolicy::Auto) == ref);
            }
        }
    }
}

TEST_CASE("kronecker squaring matches the reference") {
    const PowerSeries a = random_series(300, 90, 42);
    CHECK(mul_kronecker(a, a, 300) == mul_serial(a, a, 300));
    CHECK(square(a, 300, MulPolicy::Kronecker) == mul_serial(a, a, 300));
}

TEST_CASE("multiplying by zero gives zero") {
    const PowerSeries a = random_series(40, 64, 9);
    const PowerSeries z(40);
    CHECK(mul_kronecker(a, z, 40) == z);
    CHECK(mul_serial(a, z, 40) == z);
}

TEST_CASE("naive product oracle fixes the quadratic-scale result") {
    const PowerSeries a = random_series(30, 64, 17);
    const PowerSeries b = random_series(25, 64, 18);
    const auto expect = oracle::convolve(a.coefficients(), b.coefficients(), 30);
    const PowerSeries got = mul(a, b, 30);
    for (std::size_t i = 0; i <= 30; ++i) CHECK(got[i] == expect[i]);
}

TEST_CASE("eta_cubed is the signed odd-number pentagonal-triangle series") {
    const PowerSeries j = eta_cubed(30);
    CHECK(j[0] == 1);
    CHECK(j[1] == -3);
    CHECK(j[3] == 5);
    CHECK(j[6] == -7);
    CHECK(j[10] == 9);
    CHECK(j[15] == -11);
    CHECK(j[21] == 13);
    CHECK(j[28] == -15);
    mpz_class nonzero = 0;
    for (std::size_t i = 0; i <= 30; ++i)
        if (j[i] != 0) ++nonzero;
    CHECK(nonzero == 8);  // triangular exponents only
}

TEST_CASE("eisenstein_e4 matches the direct divisor sum") {
    const PowerSeries e4 = eisenstein_e4(200);
    CHECK(e4[0] == 1);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 2160);
    for (std::size_t n = 1; n <= 200; ++n) CHECK(e4[n] == 240 * oracle::sigma3(n));
}

}  // TEST_SUITE
