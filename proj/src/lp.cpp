#include "hyperpoly/lp.hpp"

#include <stdexcept>
#include <vector>

namespace hyperpoly {

namespace {

/**
 * Gordan-dual feasibility. Exactly one of the following holds:
 *   (a) some x satisfies rows.x > 0;
 *   (b) some y >= 0, y != 0 satisfies rows^T y = 0.
 * We run phase-one simplex on the system {rows^T y = 0, sum y = 1, y >= 0}
 * with Bland's rule. Optimum zero proves (b); otherwise the optimal dual
 * multipliers give a strict witness for (a) with margin equal to the
 * optimum.
 *
 * Tableau layout: d+1 constraint rows (d = dimension), columns
 * [y (m) | artificial (d+1) | rhs], artificial basis, rhs = (0,...,0,1).
 */
class GordanTableau {
public:
    explicit GordanTableau(const MatrixXq& rows)
        : m_(static_cast<int>(rows.rows())), d_(static_cast<int>(rows.cols()))
    {
        const int r = d_ + 1, cols = m_ + r;
        t_ = MatrixXq::Zero(r, cols + 1);
        basis_.resize(static_cast<std::size_t>(r));
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < m_; ++j) t_(i, j) = rows(j, i);
        for (int j = 0; j < m_; ++j) t_(d_, j) = Rational(1);
        for (int i = 0; i < r; ++i) {
            t_(i, m_ + i) = Rational(1);
            basis_[static_cast<std::size_t>(i)] = m_ + i;
        }
        t_(d_, cols) = Rational(1);

        // Artificial rows may start with negative coefficients elsewhere;
        // the rhs is nonnegative, so the artificial basis is feasible.
        red_ = RowVectorXq::Zero(cols + 1);
        for (int j = 0; j <= cols; ++j) {
            Rational s(0);
            for (int i = 0; i < r; ++i) s += t_(i, j);
            const bool artificial = (j >= m_ && j < cols);
            red_(j) = (artificial ? Rational(1) : Rational(0)) - s;
        }
    }

    /// Optimal value of the phase-one objective (zero iff the Gordan dual
    /// system is feasible, i.e. the strict primal system is infeasible).
    Rational solve()
    {
        const int cols = m_ + d_ + 1;
        while (true) {
            int enter = -1;
            for (int j = 0; j < cols; ++j)
                if (red_(j) < 0) { enter = j; break; }
            if (enter < 0) break;

            int leave = -1;
            Rational best(0);
            for (int i = 0; i <= d_; ++i) {
                if (t_(i, enter) <= 0) continue;
                const Rational ratio = t_(i, cols) / t_(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[static_cast<std::size_t>(i)] <
                                          basis_[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw std::runtime_error("gordan tableau: unbounded phase-one");
            pivot(leave, enter);
        }
        return -red_(cols);
    }

    /// Witness with rows.x >= opt > 0, read off the dual multipliers
    /// pi_i = 1 - red(artificial_i) as x = -pi_{0..d-1}.
    VectorXq witness() const
    {
        VectorXq x(d_);
        for (int i = 0; i < d_; ++i) x(i) = red_(m_ + i) - Rational(1);
        return x;
    }

private:
    void pivot(int leave, int enter)
    {
        const int cols = m_ + d_ + 1;
        const Rational inv = Rational(1) / t_(leave, enter);
        for (int j = 0; j <= cols; ++j) t_(leave, j) *= inv;
        for (int i = 0; i <= d_; ++i) {
            if (i == leave) continue;
            const Rational f = t_(i, enter);
            if (f == 0) continue;
            for (int j = 0; j <= cols; ++j) t_(i, j) -= f * t_(leave, j);
        }
        const Rational fr = red_(enter);
        if (fr != 0)
            for (int j = 0; j <= cols; ++j) red_(j) -= fr * t_(leave, j);
        basis_[static_cast<std::size_t>(leave)] = enter;
    }

    int m_, d_;
    MatrixXq t_;
    RowVectorXq red_;
    std::vector<int> basis_;
};

}  // namespace

std::optional<VectorXq> feasible_point(const MatrixXq& rows)
{
    if (rows.rows() == 0) return VectorXq::Zero(rows.cols());
    GordanTableau tab(rows);
    const Rational margin = tab.solve();
    if (margin == 0) return std::nullopt;
    VectorXq x = tab.witness();
    const Rational scale = Rational(1) / margin;
    for (Eigen::Index k = 0; k < x.size(); ++k) x(k) *= scale;
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        Rational s(0);
        for (Eigen::Index j = 0; j < rows.cols(); ++j) s += rows(i, j) * x(j);
        if (s < 1) throw std::runtime_error("feasible_point: witness fails re-check");
    }
    return x;
}

VectorXz integerize(const VectorXq& x)
{
    Integer lcm(1);
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        const Integer den = Integer(boost::multiprecision::denominator(x(k)));
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    VectorXz out(x.size());
    Integer g(0);
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        const Rational scaled = x(k) * Rational(lcm);
        out(k) = Integer(boost::multiprecision::numerator(scaled));
        g = boost::multiprecision::gcd(g, out(k));
    }
    if (g > 1)
        for (Eigen::Index k = 0; k < x.size(); ++k) out(k) /= g;
    return out;
}

}  // namespace hyperpoly
