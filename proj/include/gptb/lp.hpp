#pragma once

#include <optional>
#include <vector>

#include "gptb/vec.hpp"

namespace gptb {

enum class Rel { le, eq };

/// normal · x <= rhs  (Rel::le)  or  normal · x == rhs  (Rel::eq).
struct LinConstraint {
    Vec normal;
    Rel rel;
    Scalar rhs;
};

struct LpOptions {
    double eps = 1e-9;     // pivot/feasibility tolerance, real mode only
    long max_iters = 1000000;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status;
    std::optional<Vec> x;
    std::optional<Scalar> value;
    /// One multiplier per input constraint: nonnegative on <= rows, free on
    /// == rows, combining the constraints into 0 <= -1. Present only when an
    /// infeasibility certificate was requested and found.
    std::optional<std::vector<Scalar>> farkas;
};

/* Dense-tableau simplex. Exact mode pivots by Bland's rule and never
 * cycles; real mode picks the steepest column with an eps pivot floor and
 * falls back to Bland's rule if it stalls. Variables with nonneg[j] set are
 * restricted to x_j >= 0; all others are free (handled by sign splitting).
 * An empty nonneg vector means all variables are free. */
LpResult lp_maximize(const std::vector<LinConstraint>& constraints, const Vec& objective,
                     const std::vector<bool>& nonneg = {}, const LpOptions& opts = {});

/* Pure feasibility over free variables: a witness point when the system is
 * solvable, otherwise (on request) a Farkas certificate obtained from the
 * alternative system and re-verified against the input. */
LpResult lp_feasible(const std::vector<LinConstraint>& constraints, size_t dim,
                     Scalar::Mode mode, const LpOptions& opts = {},
                     bool want_certificate = false);

/// Σ y_i·normal_i == 0, Σ y_i·rhs_i < 0, y_i >= 0 on <= rows.
bool verify_farkas(const std::vector<LinConstraint>& constraints,
                   const std::vector<Scalar>& multipliers, double eps);

}  // namespace gptb
