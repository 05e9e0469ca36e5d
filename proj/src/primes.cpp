#include "hecke/primes.hpp"

#include <gmp.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace hecke {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    mpz_t z;
    mpz_init_set_ui(z, n);
    int r = mpz_probab_prime_p(z, 32);
    mpz_clear(z);
    return r != 0;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        out.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t k = p * p; k <= n; k += p) composite[k] = true;
    }
    return out;
}

std::vector<std::uint32_t> smallest_factor_table(std::uint32_t n) {
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (spf[p] != 0) continue;
        for (std::uint64_t k = p; k <= n; k += p)
            if (spf[k] == 0) spf[k] = static_cast<std::uint32_t>(p);
    }
    return spf;
}

PrimeSite::PrimeSite(std::uint64_t residue_char, unsigned inertia_degree)
    : p_(residue_char), f_(inertia_degree), norm_(1) {
    if (!is_prime(p_))
        throw std::invalid_argument("PrimeSite: residue characteristic " +
                                    std::to_string(p_) + " is not prime");
    if (f_ < 1) throw std::invalid_argument("PrimeSite: inertia degree must be >= 1");
    for (unsigned i = 0; i < f_; ++i) {
        if (norm_ > std::numeric_limits<std::uint64_t>::max() / p_)
            throw std::invalid_argument("PrimeSite: norm p^f overflows 64 bits");
        norm_ *= p_;
    }
}

}  // namespace hecke
