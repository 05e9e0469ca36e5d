// heckelab: reproducible experiments on Hecke eigenvalues at prime powers.
//
// Subcommands: tau, density, zeros, oscillate, simulate.
// Exit codes: 0 pass, 1 tolerance failure, 2 usage error, 3 data error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hecke/errors.hpp"
#include "hecke/forms_data.hpp"
#include "hecke/hecke_core.hpp"
#include "hecke/json_io.hpp"
#include "hecke/oscillation.hpp"
#include "hecke/satotate.hpp"
#include "hecke/sign_analysis.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

std::size_t limit_ceiling() {
    if (const char* env = std::getenv("HECKELAB_CEILING")) {
        try {
            const unsigned long long v = std::stoull(env);
            if (v >= 1) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw hecke::DataError("HECKELAB_CEILING is not a positive integer");
        }
    }
    return hecke::kDefaultLimitCeiling;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw hecke::DataError("cannot write " + out_path);
    out << text;
}

hecke::Sign parse_sign(const std::string& s) {
    if (s == "+" || s == "positive") return hecke::Sign::Positive;
    if (s == "-" || s == "negative") return hecke::Sign::Negative;
    throw CLI::ValidationError("--sign", "expected + or -");
}

int run_tau(std::size_t limit, const std::string& out_path) {
    const auto table = hecke::delta_expansion(limit, limit_ceiling());
    std::ostringstream csv;
    hecke::write_table_csv(table, csv);
    const std::string content = csv.str();
    if (out_path.empty()) {
        std::cout << content;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw hecke::DataError("cannot write " + out_path);
        out << content;
    }
    std::cout << "checksum 0x" << std::hex << fnv1a64(content) << std::dec << "\n";
    return 0;
}

hecke::Eigenform resolve_form(const std::string& name, std::uint64_t x) {
    const std::size_t limit = static_cast<std::size_t>(x);
    if (name == "delta")
        return hecke::eigenform_from_table(hecke::delta_expansion(limit, limit_ceiling()),
                                           12, 1, "delta");
    if (name == "weight16")
        return hecke::eigenform_from_table(
            hecke::weight16_expansion(limit, limit_ceiling()), 16, 1, "weight16");
    return hecke::load_csv(name);
}

int run_density(int m, std::uint64_t x, const std::string& form_name,
                const std::string& sign_str, double tolerance,
                const std::string& out_path) {
    const hecke::Sign sign = parse_sign(sign_str);
    const hecke::Eigenform form = resolve_form(form_name, x);
    const hecke::DensityReport report =
        hecke::empirical_prime_density(form, m, sign, x, tolerance);
    emit(hecke::to_json(report), out_path);
    return report.pass ? 0 : 1;
}

int run_zeros(const std::string& ap_str, std::uint64_t norm, int weight,
              const std::string& out_path) {
    mpz_class ap;
    if (ap.set_str(ap_str, 10) != 0)
        throw CLI::ValidationError("--ap", "not an integer: " + ap_str);
    const auto pattern = hecke::classify_zero_pattern(ap, norm, weight);
    nlohmann::json j = hecke::to_json(pattern);
    j["ap"] = ap.get_str();
    j["norm"] = norm;
    j["weight"] = weight;
    emit(j, out_path);
    return 0;
}

int run_oscillate(std::size_t limit, const std::string& out_path) {
    const auto delta = hecke::delta_expansion(limit, limit_ceiling());
    const auto w16 = hecke::weight16_expansion(limit, limit_ceiling());
    const auto scan = hecke::find_simultaneous_sign_changes(delta, w16, limit);
    const auto b = hecke::rankin_coefficients(delta, w16, 1, 1, 12, 16, limit);

    std::size_t min_m = 1, max_m = 1;
    std::optional<std::size_t> b_first_pos, b_first_neg;
    for (std::size_t m = 1; m <= limit; ++m) {
        if (b[m] < b[min_m]) min_m = m;
        if (b[m] > b[max_m]) max_m = m;
        if (!b_first_pos && b[m] > 0) b_first_pos = m;
        if (!b_first_neg && b[m] < 0) b_first_neg = m;
    }

    nlohmann::json j;
    j["limit"] = limit;
    j["forms"] = {"delta", "weight16"};
    j["first_positive_product"] =
        scan.first_positive ? nlohmann::json(*scan.first_positive) : nlohmann::json();
    j["first_negative_product"] =
        scan.first_negative ? nlohmann::json(*scan.first_negative) : nlohmann::json();
    j["b_first_positive"] = b_first_pos ? nlohmann::json(*b_first_pos) : nlohmann::json();
    j["b_first_negative"] = b_first_neg ? nlohmann::json(*b_first_neg) : nlohmann::json();
    j["b_min"] = {{"m", min_m}, {"value", b[min_m].get_str()}};
    j["b_max"] = {{"m", max_m}, {"value", b[max_m].get_str()}};
    emit(j, out_path);

    const bool both = scan.first_positive && scan.first_negative && b_first_pos && b_first_neg;
    return both ? 0 : 1;
}

int run_simulate(int m, std::size_t samples, std::uint64_t seed,
                 const std::string& out_path) {
    const auto draws = hecke::st_sample(seed, samples);
    std::uint64_t positive = 0, negative = 0;
    for (double theta : draws) {
        const double s = std::sin((m + 1) * theta);
        if (s > 0.0) ++positive;
        if (s < 0.0) ++negative;
    }
    const double tolerance = 4.0 / std::sqrt(static_cast<double>(samples));
    const auto plus = hecke::make_report(
        "monte-carlo sin((m+1)theta)>0, m=" + std::to_string(m),
        hecke::density_closed_form(m, hecke::Sign::Positive), positive, samples, tolerance);
    const auto minus = hecke::make_report(
        "monte-carlo sin((m+1)theta)<0, m=" + std::to_string(m),
        hecke::density_closed_form(m, hecke::Sign::Negative), negative, samples, tolerance);

    nlohmann::json j;
    j["m"] = m;
    j["samples"] = samples;
    j["seed"] = seed;
    j["positive"] = hecke::to_json(plus);
    j["negative"] = hecke::to_json(minus);
    emit(j, out_path);
    return (plus.pass && minus.pass) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke eigenvalue experiments: exact prime-power coefficients, "
                 "Sato-Tate sign densities, and Rankin-Selberg oscillation"};
    app.require_subcommand(1);

    std::size_t tau_limit = 0;
    std::string tau_out;
    auto* tau = app.add_subcommand("tau", "write the exact tau(n) table as CSV");
    tau->add_option("--limit", tau_limit, "table length")->required()->check(CLI::PositiveNumber);
    tau->add_option("--out", tau_out, "output file (default: stdout)");

    int density_m = 0;
    std::uint64_t density_x = 0;
    std::string density_form, density_sign = "+", density_out;
    double density_tol = 0.02;
    auto* density = app.add_subcommand(
        "density", "empirical sign density of C(p^m) over primes vs. closed form");
    density->add_option("--m", density_m, "prime-power exponent")->required()->check(CLI::PositiveNumber);
    density->add_option("--x", density_x, "prime norm cutoff")->required()->check(CLI::PositiveNumber);
    density->add_option("--form", density_form, "delta, weight16, or a CSV path")->required();
    density->add_option("--sign", density_sign, "+ or - (default +)");
    density->add_option("--tolerance", density_tol, "pass tolerance (default 0.02)");
    density->add_option("--out", density_out, "output file (default: stdout)");

    std::string zeros_ap, zeros_out;
    std::uint64_t zeros_norm = 0;
    int zeros_weight = 0;
    auto* zeros = app.add_subcommand("zeros", "exact vanishing pattern of C(p^r)");
    zeros->add_option("--ap", zeros_ap, "prime eigenvalue (integer)")->required();
    zeros->add_option("--norm", zeros_norm, "prime norm p^f")->required()->check(CLI::PositiveNumber);
    zeros->add_option("--weight", zeros_weight, "even weight >= 2")->required();
    zeros->add_option("--out", zeros_out, "output file (default: stdout)");

    std::size_t osc_limit = 100;
    std::string osc_out;
    auto* oscillate = app.add_subcommand(
        "oscillate", "simultaneous sign changes and Rankin-Selberg coefficients for "
                     "(delta, weight16)");
    oscillate->add_option("--limit", osc_limit, "index cutoff (default 100)")->check(CLI::PositiveNumber);
    oscillate->add_option("--out", osc_out, "output file (default: stdout)");

    int sim_m = 0;
    std::size_t sim_samples = 0;
    std::uint64_t sim_seed = kDefaultSeed;
    std::string sim_out;
    auto* simulate = app.add_subcommand(
        "simulate", "Monte-Carlo Sato-Tate sign frequencies vs. closed form");
    simulate->add_option("--m", sim_m, "prime-power exponent")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--samples", sim_samples, "draw count")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim_seed, "RNG seed (default 12345)");
    simulate->add_option("--out", sim_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
        if (*tau) return run_tau(tau_limit, tau_out);
        if (*density)
            return run_density(density_m, density_x, density_form, density_sign,
                               density_tol, density_out);
        if (*zeros) return run_zeros(zeros_ap, zeros_norm, zeros_weight, zeros_out);
        if (*oscillate) return run_oscillate(osc_limit, osc_out);
        if (*simulate) return run_simulate(sim_m, sim_samples, sim_seed, sim_out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hecke::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
