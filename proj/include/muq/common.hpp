#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace muq {

// Timestamps are integer milliseconds from session start.
using TimestampMs = std::int64_t;

// Prices are stored as integer multiples of 1/kPriceScale currency units so
// that file round-trips are exact. Convert to double at computation
// boundaries only.
using PriceUnits = std::int64_t;
inline constexpr std::int64_t kPriceScale = 10000;

inline double price_to_double(PriceUnits p) {
    return static_cast<double>(p) / static_cast<double>(kPriceScale);
}

/// Precondition violation by the caller.
class contract_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Input data violates a documented invariant (bad file, bad row, ...).
class validation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An iterative solver ran out of budget; message carries diagnostics.
class convergence_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Numerically stable logistic function.
inline double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

inline double logit(double p) {
    return std::log(p / (1.0 - p));
}

// splitmix64, used to derive independent seed streams from (seed, tags).
inline std::uint64_t mix_seed(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    std::uint64_t z = h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_string(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace muq
