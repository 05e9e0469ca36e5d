#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hecke/eigenform.hpp"
#include "hecke/power_series.hpp"
#include "hecke/primes.hpp"

namespace hecke {

// Refusal threshold for expansion requests; override per call.
inline constexpr std::size_t kDefaultLimitCeiling = 1'000'000;

// Exact coefficient table C(1), ..., C(limit).
class CoefficientTable {
public:
    explicit CoefficientTable(std::size_t limit);

    std::size_t limit() const { return c_.size() - 1; }
    const mpz_class& at(std::size_t n) const;
    mpz_class& at(std::size_t n);

    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

private:
    std::vector<mpz_class> c_;  // c_[n]; index 0 unused
};

// tau(n) for n <= limit: coefficients of q prod (1-q^n)^24, computed as the
// 8th power of the Jacobi eta-cubed series.
CoefficientTable delta_expansion(std::size_t limit,
                                 std::size_t ceiling = kDefaultLimitCeiling);

// The unique normalized cusp eigenform of weight 16 and level 1: Delta * E4.
CoefficientTable weight16_expansion(std::size_t limit,
                                    std::size_t ceiling = kDefaultLimitCeiling);

// C(n) for n <= limit from prime data: Hecke recurrence at prime powers,
// products across distinct primes.  Requires inertia degree 1 at every site
// and every prime <= limit tabulated.
CoefficientTable expand_multiplicative(const std::map<PrimeSite, mpz_class>& ap,
                                       int weight, std::size_t limit);

// CSV with `# key=value` metadata lines (weight, level_norm, label), a
// `p,inertia_degree,ap` header, one row per prime site.  Rows are validated
// against the Deligne bound; errors carry the line number.
Eigenform load_csv(const std::filesystem::path& path);
void save_csv(const Eigenform& form, const std::filesystem::path& path);

// Full-table export, header `n,C`.
void write_table_csv(const CoefficientTable& table, std::ostream& out);

// Prime slice of a table as an eigenform (degree-1 sites).
Eigenform eigenform_from_table(const CoefficientTable& table, int weight,
                               std::uint64_t level_norm, std::string label);

}  // namespace hecke
