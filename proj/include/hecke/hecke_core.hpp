#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>

namespace hecke {

mpz_class integer_power(std::uint64_t base, unsigned long exp);

// Roots alpha, beta of 1 - C(p)X + chi(p) N(p)^{w-1} X^2, alpha on the
// + branch of the quadratic formula.
struct SatakePair {
    std::complex<double> alpha;
    std::complex<double> beta;
};

// Exact description of {r >= 1 : C(p^r) = 0}: empty, or the arithmetic
// progression r == t-1 (mod t).
class ZeroPattern {
public:
    enum class Kind { Empty, Progression };

    static ZeroPattern empty() { return ZeroPattern(Kind::Empty, 0); }
    static ZeroPattern progression(unsigned modulus);

    Kind kind() const { return kind_; }
    unsigned modulus() const;  // throws unless kind == Progression
    bool vanishes_at(std::uint64_t r) const;

    friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;

private:
    ZeroPattern(Kind k, unsigned t) : kind_(k), modulus_(t) {}
    Kind kind_;
    unsigned modulus_;
};

// C(p^r) by the three-term Hecke recurrence
//   C(p^{m+1}) = C(p) C(p^m) - chi(p) N(p)^{w-1} C(p^{m-1}),
// C(p^0) = 1, C(p^1) = a_p.  Exact-integer overload assumes trivial
// character; the complex overload takes a unit-modulus chi.
// Throws std::invalid_argument for r < 0 or weight odd / < 2.
mpz_class hecke_power(const mpz_class& a_p, std::uint64_t norm, int weight, int r);
std::complex<double> hecke_power(std::complex<double> a_p, std::complex<double> chi_p,
                                 double norm, int weight, int r);

// C(p^r) / N(p)^{r(w-1)/2}
double normalized_coeff(const mpz_class& c_pr, std::uint64_t norm, int weight, int r);
double normalized_coeff(double c_pr, double norm, int weight, int r);

// theta in [0, pi] with beta_p = 2 cos(theta).  Inputs beyond
// |beta_p| <= 2 + 1e-9 signal a Deligne-bound violation (DataError).
double angle_of(double beta_p);

// sin((m+1)theta)/sin(theta), with endpoint limits m+1 at theta = 0 and
// (-1)^m (m+1) at theta = pi.  Equals the normalized coefficient at p^m.
double chebyshev_value(double theta, int m);

SatakePair satake_pair(double a_p, std::complex<double> chi_p, std::uint64_t norm,
                       int weight);

// Exact vanishing classification for integer eigenvalues with trivial
// character: C(p^r) vanishes for some r >= 1 iff a_p^2 = c N(p)^{w-1}
// with c in {0,1,2,3} (Niven), giving the progression modulus
// t = 2, 3, 4, 6 respectively.  The double root c = 4 never vanishes.
ZeroPattern classify_zero_pattern(const mpz_class& a_p, std::uint64_t norm, int weight);

}  // namespace hecke
