#ifndef HYPERPOLY_RATIONAL_HPP
#define HYPERPOLY_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <stdexcept>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

/**
 * @file rational.hpp
 * @brief Exact scalar types and the dense Eigen typedefs built on them.
 *
 * Every quantity in this library is exact: integers are arbitrary-precision
 * and rationals are arbitrary-precision quotients. There is no floating
 * point anywhere in the numerical core.
 */

namespace hyperpoly {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using MatrixXq    = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq    = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVectorXq = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using Matrix2q    = Eigen::Matrix<Rational, 2, 2>;
using Vector2q    = Eigen::Matrix<Rational, 2, 1>;
using RowVector2q = Eigen::Matrix<Rational, 1, 2>;

using VectorXz = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

/// Integer vector of quiver vertex multiplicities, indexed 0..n with
/// vertex 0 the central vertex. Entries stay within a few bits for every
/// vector at or below (2,1,...,1), so machine integers suffice here.
using DimVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Hyperplane normals have entries in {-1, 0, +1}.
using NormalVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Parse "p/q" or "p" into an exact rational. Decimal input is rejected.
inline Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        const Integer num(text.substr(0, slash));
        const Integer den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num) / Rational(den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an exact rational: '" + text + "'");
    }
}

inline std::string to_string(const Rational& x)
{
    return x.str();
}

}  // namespace hyperpoly

#endif  // HYPERPOLY_RATIONAL_HPP
