#ifndef HYPERPOLY_CHAMBERS_HPP
#define HYPERPOLY_CHAMBERS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperpoly/arrangement.hpp"

/**
 * @file chambers.hpp
 * @brief Exact enumeration of the chambers of the arrangement complement.
 *
 * A chamber is a realizable strict sign vector over the hyperplane list
 * together with an exact interior witness. Enumeration is a breadth-first
 * flood from a seed chamber, crossing one hyperplane at a time; candidate
 * sign vectors are validated exactly, first by a cheap reflected-point
 * probe and otherwise by the simplex feasibility routine.
 */

namespace hyperpoly {

struct Chamber {
    std::vector<std::uint8_t> signs;  ///< per hyperplane: 1 = positive side, 0 = negative
    VectorXz witness;                 ///< integer interior point

    std::string sign_string() const;  ///< "+-+..." in hyperplane order
};

/// Exact sign vector of a point off all walls; throws if the point lies on one.
std::vector<std::uint8_t> signs_at(const Arrangement& arr, const VectorXz& point);

struct ChamberSet {
    std::vector<Chamber> chambers;  ///< sorted by sign vector
    /// Facet adjacencies discovered by the flood: (chamber, chamber,
    /// separating hyperplane index), with endpoints ordered and sorted.
    std::vector<std::tuple<int, int, int>> edges;
};

/**
 * All chambers, or only those inside the open positive orthant when
 * `restrict_to_F` is set (the flood then crosses balanced walls only).
 * `jobs` > 1 processes each frontier with that many workers; the output is
 * deterministic regardless.
 */
ChamberSet enumerate_chambers(const Arrangement& arr, bool restrict_to_F, int jobs = 1,
                              const std::function<void(std::size_t)>& progress = nullptr);

/// Flip the coordinates selected by `flips` (bit i-1 <-> theta_i).
StabilityParam weyl_act(std::uint64_t flips, const StabilityParam& theta);
VectorXz weyl_act(std::uint64_t flips, const VectorXz& point);

/// Transport a chamber by a sign flip; the witness moves and the sign
/// vector is recomputed exactly.
Chamber weyl_act(const Arrangement& arr, std::uint64_t flips, const Chamber& chamber);

}  // namespace hyperpoly

#endif  // HYPERPOLY_CHAMBERS_HPP
