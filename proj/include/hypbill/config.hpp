#pragma once

#include <cstddef>

namespace hypbill {

/// Numeric tolerances shared by every module. Commands may override them via
/// a run configuration; library defaults are the values below.
struct Tolerances {
    /// Algebraic identities (unit-circle membership, orthogonality, involutions).
    double geo = 1e-12;
    /// Minimum angular separation of the two endpoints of a geodesic.
    double sep = 1e-9;
    /// Realized interior angles vs. pi/lambda.
    double ang = 1e-9;
    /// Hyperbolic distance below which a boundary hit counts as a vertex hit.
    double vert = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

/// Limits for word enumeration and language comparisons.
struct Budgets {
    std::size_t max_word_length = 20;
    std::size_t max_words = 4'000'000;
};

inline constexpr Budgets kDefaultBudgets{};

}  // namespace hypbill
