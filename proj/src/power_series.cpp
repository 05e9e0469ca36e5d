#include "hecke/power_series.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <stdexcept>

namespace hecke {

namespace {

// Terms above the truncation limit never reach an in-range output index.
std::size_t effective_terms(const PowerSeries& s, std::size_t limit) {
    return std::min(s.limit(), limit) + 1;
}

std::size_t max_bits(const PowerSeries& s, std::size_t terms) {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < terms; ++i)
        if (sgn(s[i]) != 0) bits = std::max(bits, mpz_sizeinbase(s[i].get_mpz_t(), 2));
    return bits;
}

std::size_t ceil_log2(std::size_t n) {
    std::size_t b = 0;
    while ((std::size_t{1} << b) < n) ++b;
    return b;
}

void schoolbook_coeff(mpz_class& acc, const PowerSeries& a, const PowerSeries& b,
                      std::size_t n, std::size_t terms_a, std::size_t terms_b) {
    acc = 0;
    const std::size_t lo = (n >= terms_b) ? n - terms_b + 1 : 0;
    const std::size_t hi = std::min(n, terms_a - 1);
    for (std::size_t i = lo; i <= hi; ++i) {
        if (sgn(a[i]) == 0 || sgn(b[n - i]) == 0) continue;
        mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
    }
}

}  // namespace

PowerSeries mul_serial(const PowerSeries& a, const PowerSeries& b, std::size_t limit) {
    PowerSeries out(limit);
    const std::size_t ta = effective_terms(a, limit), tb = effective_terms(b, limit);
    for (std::size_t i = 0; i < ta; ++i) {
        if (sgn(a[i]) == 0) continue;
        const std::size_t jmax = std::min(tb - 1, limit - i);
        for (std::size_t j = 0; j <= jmax; ++j) {
            if (sgn(b[j]) == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

PowerSeries mul_parallel(const PowerSeries& a, const PowerSeries& b, std::size_t limit) {
    PowerSeries out(limit);
    const std::size_t ta = effective_terms(a, limit), tb = effective_terms(b, limit);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t n = 0; n <= limit; ++n)
        schoolbook_coeff(out[n], a, b, n, ta, tb);
    return out;
}

// Kronecker substitution.  Evaluate both series at 2^slot_bits, multiply the
// two integers with GMP, and read the product coefficients back out of the
// slot positions.  slot_bits is a multiple of 64, so slots are word-aligned:
// packing needs no carries at all, and decoding is one linear pass with a
// 0/1 carry for the signed-digit adjustment.  Correct as long as every
// product coefficient satisfies |c| < 2^{slot_bits - 1}.
PowerSeries mul_kronecker(const PowerSeries& a, const PowerSeries& b, std::size_t limit) {
    const std::size_t ta = effective_terms(a, limit), tb = effective_terms(b, limit);
    const std::size_t bits_a = max_bits(a, ta), bits_b = max_bits(b, tb);
    if (bits_a == 0 || bits_b == 0) return PowerSeries(limit);

    const std::size_t need = bits_a + bits_b + ceil_log2(std::min(ta, tb)) + 2;
    const std::size_t slot_bits = 64 * ((need + 63) / 64);
    const std::size_t words = slot_bits / 64;

    const auto pack = [&](const PowerSeries& s, std::size_t terms) {
        std::vector<std::uint64_t> pos(terms * words + 1, 0), neg(terms * words + 1, 0);
        std::vector<std::uint64_t> tmp(words);
        for (std::size_t i = 0; i < terms; ++i) {
            const int sg = sgn(s[i]);
            if (sg == 0) continue;
            std::size_t count = 0;
            std::fill(tmp.begin(), tmp.end(), 0);
            mpz_export(tmp.data(), &count, -1, sizeof(std::uint64_t), 0, 0,
                       s[i].get_mpz_t());
            std::uint64_t* dst = (sg > 0 ? pos : neg).data() + i * words;
            std::copy(tmp.begin(), tmp.begin() + count, dst);
        }
        mpz_class p, n;
        mpz_import(p.get_mpz_t(), pos.size(), -1, sizeof(std::uint64_t), 0, 0, pos.data());
        mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(std::uint64_t), 0, 0, neg.data());
        return mpz_class(p - n);
    };

    const mpz_class xa = pack(a, ta);
    mpz_class z;
    if (&a == &b)
        mpz_mul(z.get_mpz_t(), xa.get_mpz_t(), xa.get_mpz_t());
    else {
        const mpz_class xb = pack(b, tb);
        mpz_mul(z.get_mpz_t(), xa.get_mpz_t(), xb.get_mpz_t());
    }

    // Two's-complement word buffer of the product, sized for the full product
    // and padded past the last slot we decode so sign extension stays in range.
    const std::size_t total_words = std::max(ta + tb + 2, limit + 3) * words;
    std::vector<std::uint64_t> buf(total_words, 0);
    std::size_t count = 0;
    mpz_export(buf.data(), &count, -1, sizeof(std::uint64_t), 0, 0, z.get_mpz_t());
    (void)count;
    if (sgn(z) < 0) {
        for (auto& w : buf) w = ~w;
        for (auto& w : buf) {
            if (++w != 0) break;
        }
    }

    PowerSeries out(limit);
    const mpz_class slot_half = mpz_class(1) << (slot_bits - 1);
    const mpz_class slot_full = mpz_class(1) << slot_bits;
    mpz_class digit;
    unsigned carry = 0;
    for (std::size_t i = 0; i <= limit; ++i) {
        mpz_import(digit.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0,
                   buf.data() + i * words);
        if (carry) digit += carry;
        if (digit >= slot_half) {
            out[i] = digit - slot_full;
            carry = 1;
        } else {
            out[i] = std::move(digit);
            carry = 0;
        }
    }
    return out;
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b, std::size_t limit,
                MulPolicy policy) {
    if (policy == MulPolicy::Auto) {
        const std::size_t work =
            effective_terms(a, limit) * effective_terms(b, limit);
        if (work <= (std::size_t{1} << 16))
            policy = MulPolicy::Serial;
        else if (work <= (std::size_t{1} << 22))
            policy = MulPolicy::Parallel;
        else
            policy = MulPolicy::Kronecker;
    }
    switch (policy) {
        case MulPolicy::Serial: return mul_serial(a, b, limit);
        case MulPolicy::Parallel: return mul_parallel(a, b, limit);
        case MulPolicy::Kronecker: return mul_kronecker(a, b, limit);
        default: throw std::logic_error("unreachable mul policy");
    }
}

PowerSeries square(const PowerSeries& a, std::size_t limit, MulPolicy policy) {
    return mul(a, a, limit, policy);
}

PowerSeries eta_cubed(std::size_t limit) {
    PowerSeries out(limit);
    for (std::size_t k = 0;; ++k) {
        const std::size_t e = k * (k + 1) / 2;
        if (e > limit) break;
        out[e] = (k % 2 == 0) ? mpz_class(2 * k + 1) : mpz_class(-static_cast<long>(2 * k + 1));
    }
    return out;
}

PowerSeries eisenstein_e4(std::size_t limit) {
    PowerSeries out(limit);
    out[0] = 1;
    // sigma_3 by divisor sieve; d^3 fits 64 bits for every table we build
    for (std::size_t d = 1; d <= limit; ++d) {
        const unsigned long cube = static_cast<unsigned long>(d) * d * d;
        for (std::size_t n = d; n <= limit; n += d)
            mpz_add_ui(out[n].get_mpz_t(), out[n].get_mpz_t(), cube);
    }
    for (std::size_t n = 1; n <= limit; ++n) out[n] *= 240;
    return out;
}

}  // namespace hecke
