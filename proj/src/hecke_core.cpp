#include "hecke/hecke_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

void check_weight(int weight) {
    if (weight < 2 || weight % 2 != 0)
        throw std::invalid_argument("weight must be even and >= 2, got " +
                                    std::to_string(weight));
}

void check_exponent(int r) {
    if (r < 0)
        throw std::invalid_argument("prime-power exponent must be >= 0, got " +
                                    std::to_string(r));
}

}  // namespace

mpz_class integer_power(std::uint64_t base, unsigned long exp) {
    mpz_class out;
    mpz_class b = static_cast<unsigned long>(base);
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
    return out;
}

ZeroPattern ZeroPattern::progression(unsigned modulus) {
    if (modulus < 2) throw std::invalid_argument("ZeroPattern: modulus must be >= 2");
    return ZeroPattern(Kind::Progression, modulus);
}

unsigned ZeroPattern::modulus() const {
    if (kind_ != Kind::Progression)
        throw std::logic_error("ZeroPattern: empty pattern has no modulus");
    return modulus_;
}

bool ZeroPattern::vanishes_at(std::uint64_t r) const {
    if (kind_ == Kind::Empty || r == 0) return false;
    return r % modulus_ == modulus_ - 1u;
}

mpz_class hecke_power(const mpz_class& a_p, std::uint64_t norm, int weight, int r) {
    check_weight(weight);
    check_exponent(r);
    if (r == 0) return 1;
    if (r == 1) return a_p;
    const mpz_class q_pow = integer_power(norm, static_cast<unsigned long>(weight - 1));
    mpz_class prev = 1, cur = a_p, next;
    for (int m = 1; m < r; ++m) {
        next = a_p * cur - q_pow * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::complex<double> hecke_power(std::complex<double> a_p, std::complex<double> chi_p,
                                 double norm, int weight, int r) {
    check_weight(weight);
    check_exponent(r);
    if (r == 0) return {1.0, 0.0};
    if (r == 1) return a_p;
    const std::complex<double> scale = chi_p * std::pow(norm, weight - 1);
    std::complex<double> prev = {1.0, 0.0}, cur = a_p;
    for (int m = 1; m < r; ++m) {
        std::complex<double> next = a_p * cur - scale * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double normalized_coeff(const mpz_class& c_pr, std::uint64_t norm, int weight, int r) {
    check_weight(weight);
    check_exponent(r);
    if (c_pr == 0) return 0.0;
    // log-space evaluation: table values overflow double well before they
    // stop being exactly representable in mpz
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, c_pr.get_mpz_t());
    const double log_abs = std::log(std::abs(mant)) + static_cast<double>(exp2) * std::numbers::ln2;
    const double log_norm_pow =
        0.5 * static_cast<double>(r) * static_cast<double>(weight - 1) * std::log(static_cast<double>(norm));
    return (sgn(c_pr) < 0 ? -1.0 : 1.0) * std::exp(log_abs - log_norm_pow);
}

double normalized_coeff(double c_pr, double norm, int weight, int r) {
    check_weight(weight);
    check_exponent(r);
    return c_pr / std::pow(norm, 0.5 * r * (weight - 1));
}

double angle_of(double beta_p) {
    if (std::abs(beta_p) > 2.0 + 1e-9)
        throw DataError("angle_of: |beta| = " + std::to_string(std::abs(beta_p)) +
                        " exceeds the Deligne bound 2");
    double half = beta_p / 2.0;
    if (half > 1.0) half = 1.0;
    if (half < -1.0) half = -1.0;
    return std::acos(half);
}

double chebyshev_value(double theta, int m) {
    check_exponent(m);
    const double bound = static_cast<double>(m) + 1.0;
    if (std::abs(theta) <= 1e-12) return bound;
    if (std::abs(theta - std::numbers::pi) <= 1e-12) return (m % 2 == 0) ? bound : -bound;
    const double v = std::sin((m + 1) * theta) / std::sin(theta);
    // |U_m(cos theta)| <= m+1 holds exactly; clamp rounding spill
    return std::clamp(v, -bound, bound);
}

SatakePair satake_pair(double a_p, std::complex<double> chi_p, std::uint64_t norm,
                       int weight) {
    check_weight(weight);
    const std::complex<double> disc =
        std::complex<double>(a_p * a_p, 0.0) -
        4.0 * chi_p * std::pow(static_cast<double>(norm), weight - 1);
    const std::complex<double> root = std::sqrt(disc);
    return SatakePair{(a_p + root) / 2.0, (a_p - root) / 2.0};
}

ZeroPattern classify_zero_pattern(const mpz_class& a_p, std::uint64_t norm, int weight) {
    check_weight(weight);
    if (a_p == 0) return ZeroPattern::progression(2);
    const mpz_class q_pow = integer_power(norm, static_cast<unsigned long>(weight - 1));
    const mpz_class a_sq = a_p * a_p;
    // a_p != 0 excludes c = 0; c = 4 is the double root, which never vanishes
    if (a_sq == q_pow) return ZeroPattern::progression(3);
    if (a_sq == 2 * q_pow) return ZeroPattern::progression(4);
    if (a_sq == 3 * q_pow) return ZeroPattern::progression(6);
    return ZeroPattern::empty();
}

}  // namespace hecke
