#pragma once

// Seeded generators for test instances. Sampling avoids the standard
// distributions so output is identical across standard libraries.

#include <cstdint>
#include <random>
#include <span>

#include "tame/polynomial.hpp"

namespace tame {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return next() & 1u; }

private:
    std::mt19937_64 engine_;
};

/// Stream-splitting helper: a well-mixed seed for item `index` under `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Nonzero integer in [-bound, bound].
Scalar random_nonzero_scalar(Rng& rng, long bound);

/// Sparse polynomial in `n` variables using only `variables` (1-based), of
/// degree at most `max_degree`, with 1..max_terms terms and nonzero integer
/// coefficients in [-coeff_bound, coeff_bound]. May be zero when `allow_zero`.
Polynomial random_poly(Rng& rng, int n, std::span<const int> variables, int max_degree,
                       long coeff_bound, bool allow_zero = true, int max_terms = 5);

}  // namespace tame
