#include "hecke/eigenform.hpp"

#include <numbers>
#include <stdexcept>

#include "hecke/errors.hpp"
#include "hecke/hecke_core.hpp"

namespace hecke {

std::complex<double> RationalTurn::value() const {
    if (den == 0) throw std::invalid_argument("RationalTurn: zero denominator");
    if (num == 0) return {1.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                               static_cast<double>(den));
}

bool Eigenform::divides_level(const PrimeSite& site) const {
    return level_norm % site.residue_char() == 0;
}

std::complex<double> Eigenform::chi(const PrimeSite& site) const {
    if (divides_level(site)) return {0.0, 0.0};
    auto it = character.find(site);
    if (it == character.end()) return {1.0, 0.0};
    return it->second.value();
}

void Eigenform::validate() const {
    if (weight < 2 || weight % 2 != 0)
        throw DataError("eigenform '" + label + "': weight must be even and >= 2");
    for (const auto& [site, a] : ap) {
        const mpz_class bound =
            4 * integer_power(site.norm(), static_cast<unsigned long>(weight - 1));
        if (a * a > bound)
            throw DataError("eigenform '" + label + "': Deligne bound violated at p=" +
                            std::to_string(site.residue_char()) + " f=" +
                            std::to_string(site.inertia_degree()) + " (a_p=" +
                            a.get_str() + ")");
    }
}

}  // namespace hecke
