#ifndef HYPERPOLY_QUIVER_REP_HPP
#define HYPERPOLY_QUIVER_REP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyperpoly/rational.hpp"

/**
 * @file quiver_rep.hpp
 * @brief Exact points of the zero fibre of the moment map and the
 *        antisymmetric table of wedge invariants phi_{a,b}.
 *
 * A representation of the doubled star quiver assigns to each external
 * vertex i a row 2-vector x_i (the arrow 0 -> i) and a column 2-vector y_i
 * (the reverse arrow). The moment map vanishes iff x_i.y_i = 0 for each i
 * and sum_i y_i x_i = 0 as a 2x2 matrix.
 */

namespace hyperpoly {

/// Arrow of the doubled quiver: a_i (star=false) or a_i* (star=true).
struct Arrow {
    int vertex = 1;     ///< 1..n
    bool star = false;

    /// Flat index 2(vertex-1) + star, enumerating a_1, a_1*, a_2, ...
    int index() const { return 2 * (vertex - 1) + (star ? 1 : 0); }
    static Arrow from_index(int idx) { return Arrow{idx / 2 + 1, (idx % 2) != 0}; }
    std::string label() const { return "a" + std::to_string(vertex) + (star ? "*" : ""); }

    bool operator==(const Arrow& o) const { return vertex == o.vertex && star == o.star; }
};

struct QuiverRep {
    int n = 0;
    std::vector<RowVector2q> x;  ///< x[i-1] is the map at arrow a_i
    std::vector<Vector2q> y;     ///< y[i-1] is the map at arrow a_i*

    /// Exact moment-map check: x_i.y_i = 0 and sum y_i x_i = 0.
    bool moment_zero() const;

    /// ev_a viewed in V_0: J x_i^T for a_i, y_i for a_i*.
    Vector2q ev(const Arrow& a) const;
};

/**
 * Deterministic sample of a moment-zero representation: x_i entries are
 * integers in [-9,9] with x_i != 0, y_i = t_i * perp(x_i) with t solved
 * exactly from the central moment equation. Resamples until all x_i are
 * nonzero and at least ceil(n/2) of the y_i are nonzero.
 *
 * @throws std::runtime_error after a bounded number of failed attempts.
 */
QuiverRep sample_moment_zero_rep(int n, std::uint64_t seed);

/// Antisymmetric table phi_{a,b} = det[ev_a | ev_b] over all arrow pairs.
struct PfaffianTable {
    int n = 0;
    MatrixXq values;  ///< (2n)x(2n), indexed by Arrow::index()

    const Rational& at(const Arrow& a, const Arrow& b) const { return values(a.index(), b.index()); }
};

PfaffianTable pfaffian_table(const QuiverRep& rep);

/// The three-term identity phi_{ab}phi_{cd} - phi_{ac}phi_{bd} + phi_{ad}phi_{bc}
/// over every 4-subset of arrows, exactly.
bool verify_plucker(const PfaffianTable& table);

/// phi_{a_i,a_i*} = 0 for all i and sum_i phi_{a_i,b} phi_{a_i*,c} = 0 for
/// all arrow pairs (b, c), exactly.
bool verify_moment_relations(const PfaffianTable& table);

/// A monomial in the phi generators: a multiset of unordered arrow pairs.
using PhiMonomial = std::vector<std::pair<Arrow, Arrow>>;

/// Torus invariance: every index i occurs equally often as a_i and as a_i*.
bool is_glv_invariant_monomial(const PhiMonomial& monomial);

/// Transform by g in SL_2: x_i -> x_i g^{-1}, y_i -> g y_i.
QuiverRep sl2_transform(const QuiverRep& rep, const Matrix2q& g);

/// Deterministic SL_2 element with integer entries (a short product of shears).
Matrix2q random_sl2(std::uint64_t seed);

}  // namespace hyperpoly

#endif  // HYPERPOLY_QUIVER_REP_HPP
