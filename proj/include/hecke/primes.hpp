#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace hecke {

bool is_prime(std::uint64_t n);

// Ascending primes <= n (sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// spf[k] = smallest prime factor of k for 2 <= k <= n; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_factor_table(std::uint32_t n);

// A prime ideal reduced to what the computations need: the rational prime
// below it, its inertia degree f, and the cached norm p^f.
class PrimeSite {
public:
    // Throws std::invalid_argument unless residue_char is prime,
    // inertia_degree >= 1, and p^f fits in 64 bits.
    explicit PrimeSite(std::uint64_t residue_char, unsigned inertia_degree = 1);

    std::uint64_t residue_char() const { return p_; }
    unsigned inertia_degree() const { return f_; }
    std::uint64_t norm() const { return norm_; }

    // Membership in the set of primes with odd inertia degree.
    bool odd_inertia() const { return f_ % 2 == 1; }

    friend auto operator<=>(const PrimeSite& a, const PrimeSite& b) = default;

private:
    std::uint64_t p_;
    unsigned f_;
    std::uint64_t norm_;
};

}  // namespace hecke
