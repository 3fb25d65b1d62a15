#ifndef HYPERPOLY_CHARPOLY_HPP
#define HYPERPOLY_CHARPOLY_HPP

#include <cstdint>
#include <vector>

#include "hyperpoly/arrangement.hpp"

/**
 * @file charpoly.hpp
 * @brief Characteristic polynomial and region counts of the arrangement.
 *
 * The primary algorithm builds the intersection poset exactly: flats are
 * stored as primitive integer row-echelon bases of their normal spans,
 * Moebius values follow from the standard recursion, and the polynomial is
 * the Whitney sum. A finite-field point count provides an independent
 * cross-check, and powers an interpolation shortcut used for n >= 7 where
 * the poset grows out of reach.
 */

namespace hyperpoly {

/// chi(q) = sum of coeffs[k] * q^{degree-k}; coeffs[0] = 1.
struct CharPoly {
    int degree = 0;
    std::vector<Integer> coeffs;

    Integer eval(const Integer& q) const;

    bool operator==(const CharPoly& o) const { return degree == o.degree && coeffs == o.coeffs; }
};

/// Exact characteristic polynomial via the intersection poset.
CharPoly char_poly_poset(const Arrangement& arr);

/**
 * Characteristic polynomial by finite-field interpolation: evaluates the
 * complement count at degree+3 odd primes with a signed-sum dynamic
 * programme, interpolates, and cross-validates the two spare primes plus
 * the monic, hyperplane-count and chi(1)=0 constraints.
 * Only valid for the full GIT arrangement produced by build_arrangement.
 */
CharPoly char_poly_interpolated(const Arrangement& arr);

/// Poset route for n <= 6, interpolation beyond.
CharPoly char_poly(const Arrangement& arr);

/// |chi(-1)|: the number of chambers of the real complement (Zaslavsky).
Integer region_count(const Arrangement& arr);

/// Brute-force count of points of F_q^n lying on no hyperplane of `arr`.
std::uint64_t complement_count_bruteforce(const Arrangement& arr, std::uint32_t q);

/// Same count via the signed-sum dynamic programme (full arrangement only).
std::uint64_t complement_count_dp(int n, std::uint32_t q);

/// Number of flats of the intersection poset (diagnostic).
std::size_t flat_count(const Arrangement& arr);

}  // namespace hyperpoly

#endif  // HYPERPOLY_CHARPOLY_HPP
