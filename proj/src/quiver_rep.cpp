#include "hyperpoly/quiver_rep.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hyperpoly/linalg.hpp"

namespace hyperpoly {

bool QuiverRep::moment_zero() const
{
    Matrix2q sum = Matrix2q::Zero();
    for (int i = 0; i < n; ++i) {
        const Rational dot = (x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)])(0);
        if (dot != 0) return false;
        sum += y[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    }
    return sum(0, 0) == 0 && sum(0, 1) == 0 && sum(1, 0) == 0 && sum(1, 1) == 0;
}

Vector2q QuiverRep::ev(const Arrow& a) const
{
    if (a.vertex < 1 || a.vertex > n) throw std::invalid_argument("ev: arrow out of range");
    if (a.star) return y[static_cast<std::size_t>(a.vertex - 1)];
    // J x^T with J = [[0,-1],[1,0]].
    const RowVector2q& row = x[static_cast<std::size_t>(a.vertex - 1)];
    Vector2q v;
    v << -row(1), row(0);
    return v;
}

QuiverRep sample_moment_zero_rep(int n, std::uint64_t seed)
{
    if (n < 3) throw std::invalid_argument("sample_moment_zero_rep: need n >= 3");
    constexpr int kMaxAttempts = 64;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        QuiverRep rep;
        rep.n = n;
        bool degenerate = false;
        for (int i = 0; i < n; ++i) {
            RowVector2q xi;
            for (int tries = 0;; ++tries) {
                const std::int64_t a = static_cast<std::int64_t>(rng() % 19) - 9;
                const std::int64_t b = static_cast<std::int64_t>(rng() % 19) - 9;
                if (a != 0 || b != 0) {
                    xi << Rational(a), Rational(b);
                    break;
                }
                if (tries > 32) { degenerate = true; break; }
            }
            if (degenerate) break;
            rep.x.push_back(xi);
        }
        if (degenerate) continue;

        // Solve sum_i t_i * perp(x_i) x_i = 0 for the proportionality
        // scalars t; the trace vanishes identically, leaving three rows.
        MatrixXq system(3, n);
        for (int i = 0; i < n; ++i) {
            const Rational a = rep.x[static_cast<std::size_t>(i)](0);
            const Rational b = rep.x[static_cast<std::size_t>(i)](1);
            system(0, i) = a * b;
            system(1, i) = b * b;
            system(2, i) = a * a;
        }
        const MatrixXq kernel = kernel_basis(system);
        if (kernel.cols() == 0) continue;

        VectorXq t = VectorXq::Zero(n);
        for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
            const Rational coeff(static_cast<std::int64_t>(rng() % 9) + 1);
            for (int i = 0; i < n; ++i) t(i) += coeff * kernel(i, c);
        }

        int nonzero = 0;
        for (int i = 0; i < n; ++i)
            if (t(i) != 0) ++nonzero;
        if (nonzero < (n + 1) / 2) continue;

        for (int i = 0; i < n; ++i) {
            Vector2q yi;
            yi << -rep.x[static_cast<std::size_t>(i)](1), rep.x[static_cast<std::size_t>(i)](0);
            rep.y.push_back(t(i) * yi);
        }
        if (!rep.moment_zero())
            throw std::runtime_error("sample_moment_zero_rep: constructed point misses the fibre");
        return rep;
    }
    throw std::runtime_error("sample_moment_zero_rep: no admissible sample after bounded retries");
}

PfaffianTable pfaffian_table(const QuiverRep& rep)
{
    PfaffianTable table;
    table.n = rep.n;
    const int arrows = 2 * rep.n;
    table.values = MatrixXq::Zero(arrows, arrows);
    std::vector<Vector2q> evs;
    evs.reserve(static_cast<std::size_t>(arrows));
    for (int idx = 0; idx < arrows; ++idx) evs.push_back(rep.ev(Arrow::from_index(idx)));
    for (int r = 0; r < arrows; ++r) {
        for (int c = r + 1; c < arrows; ++c) {
            const Rational det = evs[static_cast<std::size_t>(r)](0) * evs[static_cast<std::size_t>(c)](1) -
                                 evs[static_cast<std::size_t>(r)](1) * evs[static_cast<std::size_t>(c)](0);
            table.values(r, c) = det;
            table.values(c, r) = -det;
        }
    }
    return table;
}

bool verify_plucker(const PfaffianTable& table)
{
    const int arrows = 2 * table.n;
    for (int p = 0; p < arrows; ++p)
        for (int q = p + 1; q < arrows; ++q)
            for (int r = q + 1; r < arrows; ++r)
                for (int s = r + 1; s < arrows; ++s) {
                    const Rational lhs = table.values(p, q) * table.values(r, s) -
                                         table.values(p, r) * table.values(q, s) +
                                         table.values(p, s) * table.values(q, r);
                    if (lhs != 0) return false;
                }
    return true;
}

bool verify_moment_relations(const PfaffianTable& table)
{
    const int n = table.n;
    for (int i = 1; i <= n; ++i) {
        const Arrow a{i, false}, astar{i, true};
        if (table.at(a, astar) != 0) return false;
    }
    const int arrows = 2 * n;
    for (int b = 0; b < arrows; ++b) {
        for (int c = 0; c < arrows; ++c) {
            Rational s(0);
            for (int i = 1; i <= n; ++i)
                s += table.values(Arrow{i, false}.index(), b) * table.values(Arrow{i, true}.index(), c);
            if (s != 0) return false;
        }
    }
    return true;
}

bool is_glv_invariant_monomial(const PhiMonomial& monomial)
{
    std::vector<int> balance;
    for (const auto& [a, b] : monomial) {
        const int need = std::max(a.vertex, b.vertex);
        if (static_cast<int>(balance.size()) < need) balance.resize(static_cast<std::size_t>(need), 0);
        balance[static_cast<std::size_t>(a.vertex - 1)] += a.star ? -1 : 1;
        balance[static_cast<std::size_t>(b.vertex - 1)] += b.star ? -1 : 1;
    }
    for (const int v : balance)
        if (v != 0) return false;
    return true;
}

QuiverRep sl2_transform(const QuiverRep& rep, const Matrix2q& g)
{
    const Rational det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    if (det != 1) throw std::invalid_argument("sl2_transform: determinant is not 1");
    Matrix2q inv;
    inv << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
    QuiverRep out;
    out.n = rep.n;
    for (int i = 0; i < rep.n; ++i) {
        out.x.push_back(rep.x[static_cast<std::size_t>(i)] * inv);
        out.y.push_back(g * rep.y[static_cast<std::size_t>(i)]);
    }
    return out;
}

Matrix2q random_sl2(std::uint64_t seed)
{
    std::mt19937_64 rng(seed ^ 0xd1342543de82ef95ull);
    Matrix2q g = Matrix2q::Identity();
    const int factors = 3 + static_cast<int>(rng() % 3);
    for (int k = 0; k < factors; ++k) {
        const std::int64_t a = static_cast<std::int64_t>(rng() % 7) - 3;
        Matrix2q shear = Matrix2q::Identity();
        if (k % 2 == 0) shear(0, 1) = Rational(a);
        else shear(1, 0) = Rational(a);
        g = g * shear;
    }
    return g;
}

}  // namespace hyperpoly
