#include "hecke/forms_data.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hecke/errors.hpp"
#include "hecke/hecke_core.hpp"

namespace hecke {

namespace {

void check_limit(std::size_t limit, std::size_t ceiling) {
    if (limit < 1) throw std::invalid_argument("expansion limit must be >= 1");
    if (limit > ceiling)
        throw DataError("expansion limit " + std::to_string(limit) +
                        " exceeds the configured ceiling " + std::to_string(ceiling));
}

CoefficientTable shift_to_table(const PowerSeries& series, std::size_t limit) {
    // table C(n) = coefficient of q^{n-1}: the series carries the cusp-form
    // expansion divided by its leading q
    CoefficientTable out(limit);
    for (std::size_t n = 1; n <= limit; ++n) out.at(n) = series[n - 1];
    return out;
}

}  // namespace

CoefficientTable::CoefficientTable(std::size_t limit) : c_(limit + 1) {
    if (limit < 1) throw std::invalid_argument("CoefficientTable: limit must be >= 1");
}

const mpz_class& CoefficientTable::at(std::size_t n) const {
    if (n < 1 || n >= c_.size())
        throw std::out_of_range("CoefficientTable: index " + std::to_string(n) +
                                " outside 1.." + std::to_string(limit()));
    return c_[n];
}

mpz_class& CoefficientTable::at(std::size_t n) {
    if (n < 1 || n >= c_.size())
        throw std::out_of_range("CoefficientTable: index " + std::to_string(n) +
                                " outside 1.." + std::to_string(limit()));
    return c_[n];
}

CoefficientTable delta_expansion(std::size_t limit, std::size_t ceiling) {
    check_limit(limit, ceiling);
    const std::size_t series_limit = limit - 1;
    PowerSeries j3 = eta_cubed(series_limit);
    PowerSeries j6 = square(j3, series_limit);
    PowerSeries j12 = square(j6, series_limit);
    PowerSeries j24 = square(j12, series_limit);
    return shift_to_table(j24, limit);
}

CoefficientTable weight16_expansion(std::size_t limit, std::size_t ceiling) {
    check_limit(limit, ceiling);
    const std::size_t series_limit = limit - 1;
    PowerSeries j3 = eta_cubed(series_limit);
    PowerSeries j24 = square(square(square(j3, series_limit), series_limit), series_limit);
    PowerSeries prod = mul(j24, eisenstein_e4(series_limit), series_limit);
    return shift_to_table(prod, limit);
}

CoefficientTable expand_multiplicative(const std::map<PrimeSite, mpz_class>& ap,
                                       int weight, std::size_t limit) {
    if (limit < 1) throw std::invalid_argument("expand_multiplicative: limit must be >= 1");
    std::vector<const mpz_class*> prime_a(limit + 1, nullptr);
    for (const auto& [site, a] : ap) {
        if (site.inertia_degree() != 1)
            throw DataError(
                "expand_multiplicative: integer expansion needs inertia degree 1, "
                "got f=" + std::to_string(site.inertia_degree()) + " at p=" +
                std::to_string(site.residue_char()));
        if (site.norm() <= limit) prime_a[site.norm()] = &a;
    }

    const auto spf = smallest_factor_table(static_cast<std::uint32_t>(limit));
    CoefficientTable out(limit);
    out.at(1) = 1;
    // prime powers by recurrence, then C(n) = C(p^e) C(n / p^e) for the
    // leading prime power of n; n/p^e < n is already filled
    for (std::size_t n = 2; n <= limit; ++n) {
        const std::uint32_t p = spf[n];
        if (static_cast<std::size_t>(p) == n) {
            if (prime_a[n] == nullptr)
                throw DataError("expand_multiplicative: missing prime " + std::to_string(n));
            out.at(n) = *prime_a[n];
            continue;
        }
        std::size_t rest = n;
        int e = 0;
        std::size_t ppow = 1;
        while (rest % p == 0) {
            rest /= p;
            ppow *= p;
            ++e;
        }
        if (rest == 1)
            out.at(n) = hecke_power(out.at(p), p, weight, e);
        else
            out.at(n) = out.at(ppow) * out.at(rest);
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::uint64_t parse_u64(const std::string& text, const std::string& what, int line) {
    std::uint64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw DataError("line " + std::to_string(line) + ": bad " + what + " '" + text + "'");
    return value;
}

}  // namespace

Eigenform load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());

    Eigenform form;
    form.label = path.stem().string();
    bool have_weight = false, header_seen = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty()) continue;
        if (text[0] == '#') {
            const auto eq = text.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = trim(text.substr(1, eq - 1));
            const std::string value = trim(text.substr(eq + 1));
            if (key == "weight") {
                form.weight = static_cast<int>(parse_u64(value, "weight", lineno));
                have_weight = true;
            } else if (key == "level_norm") {
                form.level_norm = parse_u64(value, "level_norm", lineno);
            } else if (key == "label") {
                form.label = value;
            }
            continue;
        }
        if (!header_seen) {
            if (text != "p,inertia_degree,ap")
                throw DataError("line " + std::to_string(lineno) +
                                ": expected header 'p,inertia_degree,ap', got '" + text + "'");
            header_seen = true;
            continue;
        }

        std::stringstream row(text);
        std::string p_str, f_str, a_str;
        if (!std::getline(row, p_str, ',') || !std::getline(row, f_str, ',') ||
            !std::getline(row, a_str))
            throw DataError("line " + std::to_string(lineno) + ": malformed row '" + text + "'");

        const std::uint64_t p = parse_u64(trim(p_str), "prime", lineno);
        const std::uint64_t f = parse_u64(trim(f_str), "inertia degree", lineno);
        mpz_class a;
        if (a.set_str(trim(a_str), 10) != 0)
            throw DataError("line " + std::to_string(lineno) + ": bad eigenvalue '" +
                            trim(a_str) + "'");
        PrimeSite site = [&] {
            try {
                return PrimeSite(p, static_cast<unsigned>(f));
            } catch (const std::invalid_argument& e) {
                throw DataError("line " + std::to_string(lineno) + ": " + e.what());
            }
        }();
        if (form.ap.contains(site))
            throw DataError("line " + std::to_string(lineno) + ": duplicate prime site p=" +
                            std::to_string(p) + " f=" + std::to_string(f));
        form.ap.emplace(site, std::move(a));
    }
    if (!have_weight) throw DataError(path.string() + ": missing '# weight=' metadata");
    if (!header_seen) throw DataError(path.string() + ": missing 'p,inertia_degree,ap' header");

    try {
        form.validate();
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
    return form;
}

void save_csv(const Eigenform& form, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << "# weight=" << form.weight << "\n";
    out << "# level_norm=" << form.level_norm << "\n";
    out << "# label=" << form.label << "\n";
    out << "p,inertia_degree,ap\n";
    for (const auto& [site, a] : form.ap)
        out << site.residue_char() << ',' << site.inertia_degree() << ',' << a.get_str()
            << "\n";
    if (!out) throw DataError("write failed: " + path.string());
}

void write_table_csv(const CoefficientTable& table, std::ostream& out) {
    out << "n,C\n";
    for (std::size_t n = 1; n <= table.limit(); ++n)
        out << n << ',' << table.at(n).get_str() << "\n";
}

Eigenform eigenform_from_table(const CoefficientTable& table, int weight,
                               std::uint64_t level_norm, std::string label) {
    Eigenform form;
    form.weight = weight;
    form.level_norm = level_norm;
    form.label = std::move(label);
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(table.limit())))
        form.ap.emplace(PrimeSite(p), table.at(p));
    return form;
}

}  // namespace hecke
