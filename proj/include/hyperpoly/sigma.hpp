#ifndef HYPERPOLY_SIGMA_HPP
#define HYPERPOLY_SIGMA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyperpoly/roots.hpp"
#include "hyperpoly/stability.hpp"

/**
 * @file sigma.hpp
 * @brief Sigma-sets of stable dimension vectors and the symplectic leaf
 *        stratification of the affine hyperpolygon space.
 */

namespace hyperpoly {

/// A representation type: a decomposition v = sum multiplicity * root.
struct RepresentationType {
    std::vector<std::pair<DimVector, std::int64_t>> parts;

    /// Verify sum multiplicity*root = v; throws on violation.
    void check_sums_to_v(int n) const;
};

/**
 * Sigma_{lambda,theta}(v): the roots alpha <= v with theta.alpha = lambda.alpha = 0
 * such that p(alpha) > p(alpha_1) + ... + p(alpha_m) for every proper
 * decomposition of alpha into positive roots of the same pairing kernel.
 *
 * The decomposition search ranges over roots <= alpha, which is complete
 * for decompositions of alpha into positive parts. Results are in
 * lexicographic order.
 */
std::vector<DimVector> sigma_set(int n, const StabilityParam& theta, const StabilityParam& lambda);

/// The closed form of Sigma_0(v): {e_0,...,e_n, v} united with {v^I : n-|I| >= 4}.
std::vector<DimVector> sigma_zero_closed_form(int n);

/// One symplectic leaf of X_n(0).
struct LeafDescriptor {
    bool zero_leaf = false;
    std::uint64_t index_set = 0;  ///< bitmask of I over {1..n}, bit i-1 <-> vertex i
    std::int64_t dimension = 0;
    std::int64_t codimension = 0;
    std::string slice;  ///< transverse slice normal form, "(C^2/Z_2)^k"
    RepresentationType rep_type;

    int index_size() const;
};

/**
 * The leaves of X_n(0): one per subset I of {1..n} with |I| <= n-4
 * (codimension 2|I|, slice (C^2/Z_2)^{|I|}), plus the zero leaf.
 * Ordered by codimension, then by index set; the zero leaf comes last.
 */
std::vector<LeafDescriptor> leaves(int n);

}  // namespace hyperpoly

#endif  // HYPERPOLY_SIGMA_HPP
