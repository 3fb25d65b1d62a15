#ifndef HYPERPOLY_ARRANGEMENT_HPP
#define HYPERPOLY_ARRANGEMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperpoly/stability.hpp"

/**
 * @file arrangement.hpp
 * @brief The GIT hyperplane arrangement in Theta ~= Q^n.
 *
 * The arrangement consists of the n coordinate hyperplanes L_i = {theta_i = 0}
 * and the 2^{n-1} balanced hyperplanes H_I = {sum_{i in I} theta_i =
 * sum_{j not in I} theta_j}, normalised so that 1 belongs to I. Hyperplanes
 * are kept in a fixed deterministic order: coordinates by index, then
 * balanced by the bitmask of I.
 */

namespace hyperpoly {

struct Hyperplane {
    enum class Kind { Coordinate, Balanced };

    Kind kind = Kind::Coordinate;
    int coordinate = 0;        ///< i for L_i (1-based); unused for balanced walls
    std::uint64_t subset = 0;  ///< bitmask of I over {1..n} (bit i-1), with 1 in I
    NormalVector normal;       ///< length n, entries in {-1,0,+1}

    /// "L3" or "H{1,4}".
    std::string label() const;

    /// Exact pairing normal . theta.
    Rational value_at(const StabilityParam& theta) const;
};

struct Arrangement {
    int n = 0;
    std::vector<Hyperplane> hyperplanes;

    int size() const { return static_cast<int>(hyperplanes.size()); }

    /// Index of the hyperplane with the given label; throws if absent.
    int index_of(const std::string& label) const;
};

/// The full arrangement for n external vertices: n + 2^{n-1} hyperplanes.
Arrangement build_arrangement(int n);

/// Generic / on-walls classification of a parameter.
struct ThetaClass {
    bool generic = false;
    std::vector<int> walls;  ///< indices into Arrangement::hyperplanes, empty iff generic
};

ThetaClass classify_theta(const Arrangement& arr, const StabilityParam& theta);

/**
 * Irreducibility: false iff some proper bipartition of the coordinates
 * splits the normals into two blocks with disjoint supports.
 */
bool is_irreducible(int n, const std::vector<NormalVector>& normals);
bool is_irreducible(const Arrangement& arr);

/**
 * The chamber-decomposition arrangement built from all integer vectors
 * 0 < u < v with (u,u) <= 2: hyperplanes {theta.v = theta.u = 0} projected
 * to Q^n and deduplicated up to scale. Normals are primitive with first
 * nonzero entry positive.
 */
std::vector<NormalVector> nakajima_arrangement(int n);

struct RefinementReport {
    bool refines = false;                       ///< every wall of the GIT arrangement occurs
    std::optional<NormalVector> extra_normal;   ///< a non-GIT wall, when one exists
    std::optional<DimVector> extra_u;           ///< a vector u producing it
};

/// Check that the Nakajima decomposition refines the GIT one.
RefinementReport refinement_check(int n);

}  // namespace hyperpoly

#endif  // HYPERPOLY_ARRANGEMENT_HPP
