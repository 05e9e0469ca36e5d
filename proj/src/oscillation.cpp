#include "hecke/oscillation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hecke/errors.hpp"
#include "hecke/hecke_core.hpp"

namespace hecke {

CoefficientTable op_shift(const CoefficientTable& table, std::uint64_t q, std::size_t cap) {
    if (q < 1) throw std::invalid_argument("op_shift: need q >= 1");
    // entries above q*limit are unknown; overflow-safe clamp against cap
    std::size_t out_limit = cap;
    if (q <= cap / table.limit()) out_limit = std::min<std::size_t>(table.limit() * q, cap);
    CoefficientTable out(out_limit);
    for (std::size_t n = q; n <= out_limit; n += q) out.at(n) = table.at(n / q);
    return out;
}

CoefficientTable op_U(const CoefficientTable& table, std::uint64_t q) {
    if (q < 1) throw std::invalid_argument("op_U: need q >= 1");
    const std::size_t out_limit = table.limit() / q;
    if (out_limit < 1)
        throw DataError("op_U: base table of length " + std::to_string(table.limit()) +
                        " too short for q=" + std::to_string(q));
    CoefficientTable out(out_limit);
    for (std::size_t n = 1; n <= out_limit; ++n) out.at(n) = table.at(n * q);
    return out;
}

SievedForm::SievedForm(const CoefficientTable& base, std::uint64_t q)
    : derived_(base.limit()), q_(q) {
    if (q < 1) throw std::invalid_argument("sieve_construct: need q >= 1");
    if (q == 1) {
        // f - f: identically zero (every index is a multiple of 1)
        return;
    }
    const CoefficientTable inner = op_shift(op_U(base, q), q, base.limit());
    for (std::size_t n = 1; n <= base.limit(); ++n)
        derived_.at(n) = base.at(n) - (n <= inner.limit() ? inner.at(n) : mpz_class(0));

    for (std::size_t n = 1; n <= derived_.limit(); ++n) {
        if (n % q == 0 && derived_.at(n) != 0)
            throw std::logic_error("sieve identity broken: C(" + std::to_string(n) +
                                   ") != 0 at a multiple of q=" + std::to_string(q));
        if (std::gcd(n, static_cast<std::size_t>(q)) == 1 && derived_.at(n) != base.at(n))
            throw std::logic_error("sieve identity broken: C(" + std::to_string(n) +
                                   ") changed on an index coprime to q=" + std::to_string(q));
    }
}

SievedForm sieve_construct(const CoefficientTable& base, std::uint64_t q) {
    return SievedForm(base, q);
}

std::vector<std::uint8_t> restricted_zeta_coeffs(std::uint64_t c1, std::size_t limit) {
    if (c1 < 1) throw std::invalid_argument("restricted_zeta_coeffs: need c1 >= 1");
    std::vector<std::uint8_t> out(limit + 1, 0);
    for (std::size_t n = 1; n <= limit; ++n)
        out[n] = (std::gcd(static_cast<std::uint64_t>(n), c1) == 1) ? 1 : 0;
    return out;
}

namespace {

std::vector<mpz_class> rankin_impl(const CoefficientTable& f, const CoefficientTable& g,
                                   std::uint64_t n_coprime_to, std::uint64_t c1, int k0,
                                   int l0, std::size_t limit, bool parallel) {
    if (limit < 1) throw std::invalid_argument("rankin_coefficients: need limit >= 1");
    if (f.limit() < limit || g.limit() < limit)
        throw DataError("rankin_coefficients: tables shorter than requested limit");
    if (k0 + l0 < 2)
        throw std::invalid_argument("rankin_coefficients: weights too small");

    std::size_t sqrt_limit = 1;
    while ((sqrt_limit + 1) * (sqrt_limit + 1) <= limit) ++sqrt_limit;
    const auto a_n = restricted_zeta_coeffs(c1, sqrt_limit);
    std::vector<mpz_class> n_pow(sqrt_limit + 1);
    for (std::size_t n = 1; n <= sqrt_limit; ++n)
        n_pow[n] = integer_power(n, static_cast<unsigned long>(k0 + l0 - 2));

    std::vector<mpz_class> b(limit + 1);
    const std::int64_t top = static_cast<std::int64_t>(limit);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (std::int64_t m = 1; m <= top; ++m) {
        mpz_class total = 0;
        for (std::size_t n = 1; n * n <= static_cast<std::size_t>(m); ++n) {
            if (m % static_cast<std::int64_t>(n * n) != 0) continue;
            if (!a_n[n]) continue;
            const std::size_t inner = static_cast<std::size_t>(m) / (n * n);
            if (std::gcd(static_cast<std::uint64_t>(inner), n_coprime_to) != 1) continue;
            total += n_pow[n] * f.at(inner) * g.at(inner);
        }
        b[static_cast<std::size_t>(m)] = std::move(total);
    }
    return b;
}

}  // namespace

std::vector<mpz_class> rankin_coefficients(const CoefficientTable& f,
                                           const CoefficientTable& g,
                                           std::uint64_t n_coprime_to, std::uint64_t c1,
                                           int k0, int l0, std::size_t limit) {
    return rankin_impl(f, g, n_coprime_to, c1, k0, l0, limit, true);
}

std::vector<mpz_class> rankin_coefficients_serial(const CoefficientTable& f,
                                                  const CoefficientTable& g,
                                                  std::uint64_t n_coprime_to,
                                                  std::uint64_t c1, int k0, int l0,
                                                  std::size_t limit) {
    return rankin_impl(f, g, n_coprime_to, c1, k0, l0, limit, false);
}

SignScan find_simultaneous_sign_changes(const CoefficientTable& f,
                                        const CoefficientTable& g, std::size_t limit) {
    if (f.limit() < limit || g.limit() < limit)
        throw DataError("find_simultaneous_sign_changes: tables shorter than limit");
    SignScan scan;
    for (std::size_t n = 1; n <= limit; ++n) {
        const int s = sgn(f.at(n)) * sgn(g.at(n));
        if (s > 0 && !scan.first_positive) scan.first_positive = n;
        if (s < 0 && !scan.first_negative) scan.first_negative = n;
        if (scan.first_positive && scan.first_negative) break;
    }
    return scan;
}

}  // namespace hecke
