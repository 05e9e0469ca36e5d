#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace hecke {

// Multiplication kernel selection.  Serial is the reference implementation;
// Parallel is the OpenMP schoolbook kernel; Kronecker packs the series into
// one big integer per operand and rides GMP's subquadratic multiplication.
// All three produce identical coefficients.
enum class MulPolicy { Auto, Serial, Parallel, Kronecker };

// Truncated integer power series: exact coefficients of q^0 .. q^limit.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t limit) : c_(limit + 1) {}

    std::size_t limit() const { return c_.size() - 1; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    mpz_class& operator[](std::size_t i) { return c_[i]; }

    const std::vector<mpz_class>& coefficients() const { return c_; }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<mpz_class> c_;
};

// Product truncated at q^limit.
PowerSeries mul(const PowerSeries& a, const PowerSeries& b, std::size_t limit,
                MulPolicy policy = MulPolicy::Auto);
PowerSeries square(const PowerSeries& a, std::size_t limit,
                   MulPolicy policy = MulPolicy::Auto);

PowerSeries mul_serial(const PowerSeries& a, const PowerSeries& b, std::size_t limit);
PowerSeries mul_parallel(const PowerSeries& a, const PowerSeries& b, std::size_t limit);
PowerSeries mul_kronecker(const PowerSeries& a, const PowerSeries& b, std::size_t limit);

// Jacobi's identity: prod_{n>=1} (1-q^n)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}.
PowerSeries eta_cubed(std::size_t limit);

// E4 = 1 + 240 sum_{n>=1} sigma_3(n) q^n.
PowerSeries eisenstein_e4(std::size_t limit);

}  // namespace hecke
