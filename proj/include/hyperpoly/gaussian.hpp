#ifndef HYPERPOLY_GAUSSIAN_HPP
#define HYPERPOLY_GAUSSIAN_HPP

#include <string>

#include "hyperpoly/rational.hpp"

/**
 * @file gaussian.hpp
 * @brief The field Q(i) of Gaussian rationals, usable as an Eigen scalar.
 *
 * The order-32 matrix group and everything downstream of it (the action on
 * the five-dimensional representation, the quadratic-form generators) live
 * over Q(i): the quaternionic factor needs i and nothing needs more.
 */

namespace hyperpoly {

struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() : re(0), im(0) {}
    Gaussian(int v) : re(v), im(0) {}  // NOLINT: implicit, Eigen needs scalar(0)
    Gaussian(Rational r) : re(std::move(r)), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian unit_i() { return Gaussian(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Gaussian conj() const { return Gaussian(re, -im); }

    /// re^2 + im^2, the field norm down to Q.
    Rational norm() const { return re * re + im * im; }

    Gaussian operator-() const { return Gaussian(-re, -im); }

    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
    Gaussian& operator*=(const Gaussian& o)
    {
        const Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o)
    {
        if (o.is_zero()) throw std::domain_error("Gaussian: division by zero");
        const Rational n = o.norm();
        const Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }

    friend bool operator==(const Gaussian& a, const Gaussian& b)
    {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    std::string str() const
    {
        if (im == 0) return re.str();
        if (re == 0) return im.str() + "*i";
        return re.str() + (im > 0 ? "+" : "") + im.str() + "*i";
    }
};

using MatrixXg = Eigen::Matrix<Gaussian, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXg = Eigen::Matrix<Gaussian, Eigen::Dynamic, 1>;
using Matrix4g = Eigen::Matrix<Gaussian, 4, 4>;
using Matrix2g = Eigen::Matrix<Gaussian, 2, 2>;

}  // namespace hyperpoly

namespace Eigen {

// Registered as a plain field scalar: nothing in this library takes
// adjoints of Gaussian matrices, so Eigen never needs conjugation.
template <>
struct NumTraits<hyperpoly::Gaussian> {
    using Real       = hyperpoly::Gaussian;
    using NonInteger = hyperpoly::Gaussian;
    using Literal    = hyperpoly::Gaussian;
    using Nested     = hyperpoly::Gaussian;
    enum {
        IsComplex             = 0,
        IsInteger             = 0,
        IsSigned              = 1,
        RequireInitialization = 1,
        ReadCost              = 8,
        AddCost               = 40,
        MulCost               = 80,
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // HYPERPOLY_GAUSSIAN_HPP
