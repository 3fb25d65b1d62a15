#ifndef HYPERPOLY_BIRATIONAL_HPP
#define HYPERPOLY_BIRATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyperpoly/chambers.hpp"
#include "hyperpoly/sigma.hpp"

/**
 * @file birational.hpp
 * @brief Stability-parameter geometry: the cones C+ and F, wall types,
 *        the wall-crossing graph of chambers in F, resolution counts and
 *        the Poincare polynomial.
 */

namespace hyperpoly {

/// An exact generic point of C+ = {theta_1 > theta_2 + ... + theta_n, theta_i > 0}.
StabilityParam cplus_representative(int n);

/// theta lies in the closed cone F = {theta_i >= 0 for all i}.
bool in_F(const StabilityParam& theta);

/// The coordinatewise absolute value w(theta) in F together with the flip set w.
std::pair<StabilityParam, std::uint64_t> fold_to_F(const StabilityParam& theta);

struct WallReport {
    enum class Kind { Flop, Boundary };

    Kind kind = Kind::Flop;
    std::string label;           ///< hyperplane label
    std::string local_model;     ///< normal form of the transverse geometry

    // Flop walls (balanced hyperplanes)
    DimVector alpha, beta;       ///< the two real roots vanishing on the wall
    std::int64_t pairing = 0;    ///< (alpha,beta) = 2-n
    std::vector<DimVector> sigma;  ///< {alpha, beta, v}

    // Boundary walls (coordinate hyperplanes)
    std::vector<RepresentationType> rep_types;  ///< (v,1) and (v-e_i,1; e_i,1)
};

/**
 * Classify one wall of the arrangement. Balanced walls carry a Mukai flop
 * with p(alpha) = p(beta) = 0 and (alpha,beta) = 2-n; coordinate walls
 * carry a divisorial contraction with transverse model C^{2(n-4)} x C^2/Z_2.
 *
 * @throws std::invalid_argument if the hyperplane does not belong to the
 *         arrangement for this n.
 */
WallReport wall_report(int n, const Hyperplane& h);

struct ResolutionGraph {
    ChamberSet base;  ///< chambers in F and their facet adjacencies
    int vertex_count() const { return static_cast<int>(base.chambers.size()); }
    int edge_count() const { return static_cast<int>(base.edges.size()); }
    bool connected() const;
};

/// The wall-crossing graph on the chambers contained in F.
ResolutionGraph resolution_graph(int n, int jobs = 1);

struct ResolutionCount {
    Integer regions;  ///< chambers of the full complement, |chi(-1)|
    Integer in_F;     ///< regions / 2^n; exact divisibility is asserted
};

/**
 * Region and orbit counts. Divisibility of the region count by 2^n is a
 * hard invariant (the sign-flip action on chambers is free); violation
 * throws.
 */
ResolutionCount count_resolutions(int n);

/// Coefficients of t^{2k}, k = 0,1,...
struct PoincarePoly {
    std::vector<Integer> coeffs;
};

/**
 * Expansion of ((1+t^2)^{n-1} - 2^{n-1} t^{2(n-2)})/(1-t^2) + t^{2(n-2)}
 * as an exact polynomial; exact divisibility by 1-t^2 is asserted, as are
 * nonnegative coefficients, constant term 1 and t^2-coefficient n.
 */
PoincarePoly poincare_poly(int n);

}  // namespace hyperpoly

#endif  // HYPERPOLY_BIRATIONAL_HPP
