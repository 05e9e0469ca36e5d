#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hecke/forms_data.hpp"

namespace hecke {

// f -> f|q: coefficient at n moves to qn, everything else 0.  Output limit
// is q * base.limit(), clamped to `cap`.
CoefficientTable op_shift(const CoefficientTable& table, std::uint64_t q,
                          std::size_t cap = std::numeric_limits<std::size_t>::max());

// f -> f|U(q): coefficient at n reads base at qn; output limit is
// floor(base.limit() / q).  Throws DataError when that is empty.
CoefficientTable op_U(const CoefficientTable& table, std::uint64_t q);

// g = f - (f|U(q))|q: zero at multiples of q, equal to f on (n, q) = 1.
// Both identities are verified exactly at construction.
class SievedForm {
public:
    SievedForm(const CoefficientTable& base, std::uint64_t q);

    const CoefficientTable& table() const { return derived_; }
    std::uint64_t q() const { return q_; }

private:
    CoefficientTable derived_;
    std::uint64_t q_;
};

SievedForm sieve_construct(const CoefficientTable& base, std::uint64_t q);

// a_n = number of integral ideals of norm n coprime to c1; over the
// rationals that is the indicator of gcd(n, c1) = 1.
std::vector<std::uint8_t> restricted_zeta_coeffs(std::uint64_t c1, std::size_t limit);

// b_m = sum_{n^2 | m} a_n(c1) n^{k0+l0-2} C(m/n^2, f) C(m/n^2, g), the inner
// factor filtered to arguments coprime to n_coprime_to.  Exact integers;
// returned as b[m] for m = 1..limit (b[0] unused).
std::vector<mpz_class> rankin_coefficients(const CoefficientTable& f,
                                           const CoefficientTable& g,
                                           std::uint64_t n_coprime_to, std::uint64_t c1,
                                           int k0, int l0, std::size_t limit);
std::vector<mpz_class> rankin_coefficients_serial(const CoefficientTable& f,
                                                  const CoefficientTable& g,
                                                  std::uint64_t n_coprime_to,
                                                  std::uint64_t c1, int k0, int l0,
                                                  std::size_t limit);

// Smallest indices with C(n,f) C(n,g) strictly positive / negative.
struct SignScan {
    std::optional<std::size_t> first_positive;
    std::optional<std::size_t> first_negative;
};

SignScan find_simultaneous_sign_changes(const CoefficientTable& f,
                                        const CoefficientTable& g, std::size_t limit);

}  // namespace hecke
