#ifndef HYPERPOLY_LP_HPP
#define HYPERPOLY_LP_HPP

#include <optional>

#include "hyperpoly/rational.hpp"

/**
 * @file lp.hpp
 * @brief Exact rational feasibility of strict homogeneous inequality systems.
 *
 * Chamber membership questions all reduce to: does rows.x > 0 have a
 * solution? By homogeneity this is equivalent to rows.x >= 1, which is
 * decided by a phase-one simplex with Bland's rule over exact rationals.
 */

namespace hyperpoly {

/**
 * Decide feasibility of { rows.row(i) . x >= 1 for all i } over Q^d and
 * return an exact witness, or nullopt when infeasible.
 */
std::optional<VectorXq> feasible_point(const MatrixXq& rows);

/// Same system viewed as strict homogeneous inequalities rows.x > 0.
inline std::optional<VectorXq> strict_feasible(const MatrixXq& rows) { return feasible_point(rows); }

/// Scale a rational vector to a primitive integer vector with the same ray.
VectorXz integerize(const VectorXq& x);

}  // namespace hyperpoly

#endif  // HYPERPOLY_LP_HPP
