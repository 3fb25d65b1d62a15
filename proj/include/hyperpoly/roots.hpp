#ifndef HYPERPOLY_ROOTS_HPP
#define HYPERPOLY_ROOTS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperpoly/rational.hpp"

/**
 * @file roots.hpp
 * @brief Root combinatorics of the doubled star-shaped quiver.
 *
 * The quiver has a central vertex 0 carrying multiplicity 2 and external
 * vertices 1..n carrying multiplicity 1; the distinguished dimension vector
 * is v = (2,1,...,1). All operations are pure and exact.
 */

namespace hyperpoly {

enum class RootClass { Real, Isotropic, Anisotropic, NotARoot };

const char* to_string(RootClass c);

/// Number of external vertices encoded by a dimension vector of length n+1.
inline int external_count(const DimVector& alpha) { return static_cast<int>(alpha.size()) - 1; }

DimVector v_vector(int n);                       ///< (2,1,...,1), length n+1
DimVector e_vector(int n, int i);                ///< standard basis vector, 0 <= i <= n
DimVector v_upper(int n, std::uint64_t subset);  ///< v - sum of e_i over the bitmask (bit i-1 <-> vertex i)

/// Cartan pairing (alpha,beta) = 2*sum alpha_i beta_i - sum_j (alpha_0 beta_j + alpha_j beta_0).
std::int64_t cartan_pair(const DimVector& alpha, const DimVector& beta);

/// p(alpha) = 1 - (alpha,alpha)/2.
std::int64_t p_value(const DimVector& alpha);

/// s_i(alpha) = alpha - (alpha,e_i) e_i.
DimVector simple_reflection(int i, const DimVector& alpha);

/// Support connectivity in the star topology: a single external vertex, or
/// any support containing the central vertex, is connected.
bool connected_support(const DimVector& alpha);

/**
 * Classify a dimension vector 0 < alpha <= v.
 *
 * A vector is a root iff its support is connected and it is not of the form
 * v^I with |I| >= n-2; roots of the form v^I are anisotropic when n-|I| > 4
 * and isotropic when n-|I| = 4; every other root is real. Real verdicts are
 * cross-checked by reflection descent to a simple root.
 *
 * @throws std::invalid_argument if alpha is outside [0, v] or alpha = 0.
 * @throws std::runtime_error if descent fails to confirm a real verdict.
 */
RootClass classify_root(const DimVector& alpha);

/// Reflection descent: repeatedly apply s_i with (alpha,e_i) > 0. Returns
/// true iff some e_j is reached within max_steps steps.
bool descends_to_simple(DimVector alpha, int max_steps);

/// All roots 0 < alpha <= v with their classification, ordered
/// lexicographically. Valid for n >= 3.
std::vector<std::pair<DimVector, RootClass>> enumerate_roots_below_v(int n);

/// dim X_n(theta) = 2 p(v) = 2n - 6 for generic theta.
std::int64_t hyperpolygon_dimension(int n);

inline bool same_vector(const DimVector& a, const DimVector& b)
{
    if (a.size() != b.size()) return false;
    for (Eigen::Index k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return false;
    return true;
}

/// Lexicographic order, for use as a set/map comparator.
struct DimVectorLess {
    bool operator()(const DimVector& a, const DimVector& b) const
    {
        if (a.size() != b.size()) return a.size() < b.size();
        for (Eigen::Index k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) return a[k] < b[k];
        return false;
    }
};

}  // namespace hyperpoly

#endif  // HYPERPOLY_ROOTS_HPP
