#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ucr {

// Thrown when a request would exceed a hard size cap (state-space dimension,
// stabilizer order, superoperator size). Exit code 3 at the CLI boundary.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal cross-check fails, i.e. the library caught itself
// producing inconsistent data. Never expected on valid input.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

inline constexpr long kDefaultStateCap = 4096;
inline constexpr double kDefaultTol = 1e-9;
inline constexpr long kStabilizerCap = 1000000;

// Largest vectorized dimension (d^n squared) the dense superoperator path
// accepts: d^n <= 32 keeps the superoperator at 1024x1024.
inline constexpr long kSuperopStateCap = 32;

// Largest matrix dimension the stacked-commutator nullspace path accepts.
inline constexpr long kCommutantCap = 81;

// Largest entry count a dense product (Kronecker or otherwise) may allocate.
inline constexpr long long kDenseEntryCap = 1LL << 26;

inline long state_cap() {
    if (const char* s = std::getenv("UCR_STATE_CAP")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultStateCap;
}

inline double default_tol() {
    if (const char* s = std::getenv("UCR_TOL")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultTol;
}

} // namespace ucr
