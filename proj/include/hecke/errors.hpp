#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Malformed or inconsistent input data: bad CSV rows, Deligne-bound
// violations, tables too short for the requested computation.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hecke
