#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "hecke/primes.hpp"

namespace hecke {

// A root of unity stored as an exact fraction of a full turn, so products
// like alpha * beta = chi(p) N(p)^{w-1} stay checkable.
struct RationalTurn {
    long num = 0;
    unsigned long den = 1;
    std::complex<double> value() const;
};

// An eigenform's arithmetic identity plus its prime eigenvalue table.
struct Eigenform {
    int weight = 0;  // even, >= 2
    std::uint64_t level_norm = 1;
    std::string label;
    std::map<PrimeSite, mpz_class> ap;
    std::map<PrimeSite, RationalTurn> character;  // empty map: trivial character

    bool divides_level(const PrimeSite& site) const;

    // Character value at the site: 0 at level divisors, else a unit.
    std::complex<double> chi(const PrimeSite& site) const;

    // Deligne bound a_p^2 <= 4 N(p)^{w-1} for every table entry, exact in
    // integers.  Throws DataError naming the offending site.
    void validate() const;
};

}  // namespace hecke
