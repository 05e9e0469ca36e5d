#pragma once

#include <json.hpp>

#include "hecke/hecke_core.hpp"
#include "hecke/sign_analysis.hpp"

namespace hecke {

inline nlohmann::json to_json(const DensityReport& report) {
    nlohmann::json j;
    j["label"] = report.label;
    if (report.predicted)
        j["predicted"] = *report.predicted;
    else
        j["predicted"] = nullptr;
    j["empirical"] = report.empirical;
    j["numerator"] = report.numerator;
    j["denominator"] = report.denominator;
    j["tolerance"] = report.tolerance;
    j["pass"] = report.pass;
    return j;
}

inline nlohmann::json to_json(const ZeroPattern& pattern) {
    nlohmann::json j;
    if (pattern.kind() == ZeroPattern::Kind::Empty) {
        j["kind"] = "empty";
    } else {
        j["kind"] = "progression";
        j["modulus"] = pattern.modulus();
    }
    return j;
}

}  // namespace hecke
