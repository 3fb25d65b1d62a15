#ifndef HYPERPOLY_STABILITY_HPP
#define HYPERPOLY_STABILITY_HPP

#include <string>
#include <vector>

#include "hyperpoly/rational.hpp"

namespace hyperpoly {

/**
 * A stability (or deformation) parameter: an exact rational vector
 * (theta_1, ..., theta_n) on the external vertices. The central component
 * theta_0 = -(theta_1 + ... + theta_n)/2 is implicit, so theta.v = 0 holds
 * identically for v = (2,1,...,1).
 */
class StabilityParam {
public:
    StabilityParam() = default;

    explicit StabilityParam(VectorXq coords) : coords_(std::move(coords)) {}

    static StabilityParam zero(int n) { return StabilityParam(VectorXq::Zero(n)); }

    static StabilityParam from_integers(const std::vector<std::int64_t>& v)
    {
        VectorXq c(static_cast<Eigen::Index>(v.size()));
        for (std::size_t i = 0; i < v.size(); ++i) c[static_cast<Eigen::Index>(i)] = Rational(v[i]);
        return StabilityParam(std::move(c));
    }

    int n() const { return static_cast<int>(coords_.size()); }

    /// theta_i for 1 <= i <= n.
    const Rational& operator[](int i) const { return coords_[i - 1]; }

    const VectorXq& coords() const { return coords_; }

    Rational theta0() const
    {
        Rational s(0);
        for (Eigen::Index k = 0; k < coords_.size(); ++k) s += coords_[k];
        return -s / 2;
    }

    /// Pairing with a dimension vector of length n+1 (central entry included).
    Rational dot(const DimVector& alpha) const
    {
        Rational s = theta0() * Rational(alpha[0]);
        for (int i = 1; i <= n(); ++i) s += coords_[i - 1] * Rational(alpha[i]);
        return s;
    }

    bool is_zero() const
    {
        for (Eigen::Index k = 0; k < coords_.size(); ++k)
            if (coords_[k] != 0) return false;
        return true;
    }

private:
    VectorXq coords_;
};

}  // namespace hyperpoly

#endif  // HYPERPOLY_STABILITY_HPP
