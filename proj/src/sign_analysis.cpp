#include "hecke/sign_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hecke/errors.hpp"
#include "hecke/primes.hpp"

namespace hecke {

namespace {

constexpr double kDegenerateThreshold = 0.1;
constexpr int kGrid = 64;

template <typename Value, typename SignOf>
std::vector<std::pair<std::size_t, std::size_t>> scan_changes(std::span<const Value> values,
                                                              SignOf sign_of) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t last_index = 0;
    int last_sign = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const int s = sign_of(values[i]);
        if (s == 0) continue;
        if (last_sign != 0 && s != last_sign) out.emplace_back(last_index, i + 1);
        last_sign = s;
        last_index = i + 1;
    }
    return out;
}

}  // namespace

DensityReport make_report(std::string label, std::optional<double> predicted,
                          std::uint64_t numerator, std::uint64_t denominator,
                          double tolerance) {
    DensityReport report;
    report.label = std::move(label);
    report.predicted = predicted;
    report.numerator = numerator;
    report.denominator = denominator;
    report.empirical =
        denominator == 0 ? 0.0
                         : static_cast<double>(numerator) / static_cast<double>(denominator);
    report.tolerance = tolerance;
    report.pass =
        !predicted.has_value() || std::abs(report.empirical - *predicted) <= tolerance;
    return report;
}

std::vector<std::pair<std::size_t, std::size_t>> sign_changes(const SignSequence& seq) {
    return scan_changes(std::span<const double>(seq.values), [](double v) {
        if (v > 0.0) return 1;
        if (v < 0.0) return -1;
        return 0;
    });
}

std::vector<std::pair<std::size_t, std::size_t>> sign_changes(
    std::span<const mpz_class> values) {
    return scan_changes(values, [](const mpz_class& v) { return sgn(v); });
}

bool NonvanishingClass::contains(std::uint64_t m) const {
    if (m == 0) return false;
    switch (kind) {
        case NonvanishingKind::AllOfN: return true;
        case NonvanishingKind::EvenIndices: return m % 2 == 0;
        case NonvanishingKind::Other: break;
    }
    if (modulus_f && m % *modulus_f == *modulus_f - 1u) return false;
    if (modulus_g && m % *modulus_g == *modulus_g - 1u) return false;
    return true;
}

NonvanishingClass classify_nonvanishing_set(const ZeroPattern& pattern_f,
                                            const ZeroPattern& pattern_g) {
    const bool empty_f = pattern_f.kind() == ZeroPattern::Kind::Empty;
    const bool empty_g = pattern_g.kind() == ZeroPattern::Kind::Empty;

    NonvanishingClass out;
    if (!empty_f) out.modulus_f = pattern_f.modulus();
    if (!empty_g) out.modulus_g = pattern_g.modulus();

    if (empty_f && empty_g) {
        out.kind = NonvanishingKind::AllOfN;
        out.density_num = out.density_den = 1;
        return out;
    }
    const bool only_parity = (empty_f || pattern_f.modulus() == 2) &&
                             (empty_g || pattern_g.modulus() == 2);
    if (only_parity) {
        out.kind = NonvanishingKind::EvenIndices;
        out.density_num = 1;
        out.density_den = 2;
        return out;
    }

    // zeros of each form sit on r == t-1 (mod t); both progressions are
    // == -1 modulo the gcd, so their intersection is r == -1 (mod lcm)
    out.kind = NonvanishingKind::Other;
    const std::uint64_t tf = out.modulus_f.value_or(0);
    const std::uint64_t tg = out.modulus_g.value_or(0);
    std::uint64_t den = 1, hits = 0;
    if (tf && tg) {
        den = std::lcm(tf, tg);
        hits = den / tf + den / tg - 1;
    } else {
        den = tf ? tf : tg;
        hits = 1;
    }
    const std::uint64_t num = den - hits;
    const std::uint64_t g = std::gcd(num, den);
    out.density_num = num / g;
    out.density_den = den / g;
    return out;
}

DensityReport empirical_prime_density(const Eigenform& form, int m, Sign sign,
                                      std::uint64_t x, double tolerance) {
    if (m < 1) throw std::invalid_argument("empirical_prime_density: need m >= 1");
    if (form.ap.empty()) throw DataError("empirical_prime_density: empty eigenvalue table");

    std::vector<const std::pair<const PrimeSite, mpz_class>*> sites;
    bool all_degree_one = true;
    for (const auto& entry : form.ap) {
        if (entry.first.inertia_degree() != 1) all_degree_one = false;
        if (entry.first.norm() <= x && !form.divides_level(entry.first))
            sites.push_back(&entry);
    }
    if (all_degree_one) {
        // degree-1 tables promise every rational prime up to the cutoff
        std::uint64_t expected = 0;
        for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(x)))
            if (form.level_norm % p != 0) ++expected;
        if (sites.size() < expected)
            throw DataError("empirical_prime_density: table covers " +
                            std::to_string(sites.size()) + " primes below " +
                            std::to_string(x) + ", expected " + std::to_string(expected));
    }
    if (sites.empty())
        throw DataError("empirical_prime_density: no usable prime sites below cutoff");

    const int wanted = (sign == Sign::Positive) ? 1 : -1;
    std::uint64_t matches = 0;
    const std::int64_t count = static_cast<std::int64_t>(sites.size());
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : matches)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto& [site, a] = *sites[i];
        const mpz_class c = hecke_power(a, site.norm(), form.weight, m);
        if (sgn(c) == wanted) ++matches;
    }

    const std::string label = form.label + " sign(C(p^" + std::to_string(m) + "))" +
                              (sign == Sign::Positive ? ">0" : "<0") +
                              " x<=" + std::to_string(x);
    return make_report(label, density_closed_form(m, sign), matches, sites.size(),
                       tolerance);
}

DensityReport simultaneous_density(double theta_f, double theta_g, std::uint64_t n_max,
                                   Sign sign, bool independent_angles) {
    if (n_max < 1) throw std::invalid_argument("simultaneous_density: need n_max >= 1");
    const int wanted = (sign == Sign::Positive) ? 1 : -1;
    // sines below this are exact zeros of sin((n+1) q pi) reached through
    // rounded angles; genuine values at rational multiples stay >= sin(pi/N)
    constexpr double kZero = 1e-9;
    const auto sign_of = [](double v) { return v > kZero ? 1 : (v < -kZero ? -1 : 0); };
    std::uint64_t matches = 0;
#pragma omp parallel for schedule(static) reduction(+ : matches)
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const int s = sign_of(std::sin((n + 1) * theta_f)) *
                      sign_of(std::sin((n + 1) * theta_g));
        if (s == wanted) ++matches;
    }
    const std::string label = std::string("simultaneous ") +
                              (sign == Sign::Positive ? "positive" : "negative") +
                              " products, n<=" + std::to_string(n_max);
    std::optional<double> predicted;
    if (independent_angles) predicted = 0.5;
    return make_report(label, predicted, matches, n_max, 0.01);
}

namespace {

DiscrepancyEstimate discrepancy_from_histogram(const std::vector<std::uint64_t>& hist,
                                               std::uint64_t n_max) {
    // cumulative counts over grid corners: M[i][j] = #points in [0,i/G) x [0,j/G)
    std::vector<std::uint64_t> cum((kGrid + 1) * (kGrid + 1), 0);
    const auto at = [&](int i, int j) -> std::uint64_t& {
        return cum[static_cast<std::size_t>(i) * (kGrid + 1) + j];
    };
    for (int i = 1; i <= kGrid; ++i)
        for (int j = 1; j <= kGrid; ++j)
            at(i, j) = hist[static_cast<std::size_t>(i - 1) * kGrid + (j - 1)] +
                       at(i - 1, j) + at(i, j - 1) - at(i - 1, j - 1);

    double worst = 0.0;
    for (int i = 0; i <= kGrid; ++i)
        for (int j = 0; j <= kGrid; ++j) {
            const double empirical =
                static_cast<double>(at(i, j)) / static_cast<double>(n_max);
            const double area = (static_cast<double>(i) / kGrid) *
                                (static_cast<double>(j) / kGrid);
            worst = std::max(worst, std::abs(empirical - area));
        }
    return DiscrepancyEstimate{worst, worst > kDegenerateThreshold};
}

void bin_point(std::vector<std::uint64_t>& hist, double x, double y) {
    int i = static_cast<int>(x * kGrid);
    int j = static_cast<int>(y * kGrid);
    i = std::clamp(i, 0, kGrid - 1);
    j = std::clamp(j, 0, kGrid - 1);
    hist[static_cast<std::size_t>(i) * kGrid + j] += 1;
}

double frac(double v) {
    const double f = v - std::floor(v);
    return (f >= 1.0) ? 0.0 : f;
}

}  // namespace

DiscrepancyEstimate weyl_discrepancy_serial(double alpha, double beta,
                                            std::uint64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("weyl_discrepancy: need N >= 1");
    std::vector<std::uint64_t> hist(kGrid * kGrid, 0);
    for (std::uint64_t n = 1; n <= n_max; ++n)
        bin_point(hist, frac(static_cast<double>(n) * alpha),
                  frac(static_cast<double>(n) * beta));
    return discrepancy_from_histogram(hist, n_max);
}

DiscrepancyEstimate weyl_discrepancy(double alpha, double beta, std::uint64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("weyl_discrepancy: need N >= 1");
    std::vector<std::uint64_t> hist(kGrid * kGrid, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(kGrid * kGrid, 0);
#pragma omp for schedule(static) nowait
        for (std::uint64_t n = 1; n <= n_max; ++n)
            bin_point(local, frac(static_cast<double>(n) * alpha),
                      frac(static_cast<double>(n) * beta));
#pragma omp critical
        for (std::size_t k = 0; k < hist.size(); ++k) hist[k] += local[k];
    }
    return discrepancy_from_histogram(hist, n_max);
}

}  // namespace hecke
