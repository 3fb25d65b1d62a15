#ifndef HYPERPOLY_LINALG_HPP
#define HYPERPOLY_LINALG_HPP

#include <vector>

#include <Eigen/Dense>

/**
 * @file linalg.hpp
 * @brief Exact Gaussian elimination over any field scalar.
 *
 * Free functions on dense Eigen matrices. Pivoting is by first nonzero
 * entry, which is deterministic and safe for exact scalars (no conditioning
 * concerns), so rref output is canonical: leading entries are 1 and their
 * columns are cleared.
 */

namespace hyperpoly {

/// Reduce `m` in place to reduced row-echelon form; returns the rank.
template <typename Scalar>
int rref_in_place(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m)
{
    const Eigen::Index rows = m.rows(), cols = m.cols();
    int rank = 0;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < rows; ++r) {
            if (!(m(r, col) == Scalar(0))) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) m.row(pivot).swap(m.row(rank));
        const Scalar inv = Scalar(1) / m(rank, col);
        for (Eigen::Index c = col; c < cols; ++c) m(rank, c) = m(rank, c) * inv;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const Scalar f = m(r, col);
            if (f == Scalar(0)) continue;
            for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(rank, c);
        }
        ++rank;
    }
    return rank;
}

template <typename Scalar>
int rank_of(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m)
{
    return rref_in_place(m);
}

/// Basis of the right kernel of `m`, one column per basis vector.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
kernel_basis(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m)
{
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index cols = m.cols();
    const int rank = rref_in_place(m);

    std::vector<Eigen::Index> pivot_col;
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    Eigen::Index col = 0;
    for (int r = 0; r < rank; ++r) {
        while (col < cols && m(r, col) == Scalar(0)) ++col;
        pivot_col.push_back(col);
        is_pivot[static_cast<std::size_t>(col)] = true;
    }

    Mat basis(cols, cols - rank);
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        for (Eigen::Index r = 0; r < cols; ++r) basis(r, k) = Scalar(0);
        basis(free, k) = Scalar(1);
        for (int r = 0; r < rank; ++r) basis(pivot_col[static_cast<std::size_t>(r)], k) = -m(r, free);
        ++k;
    }
    return basis;
}

/// True iff `v` lies in the row span of the rref matrix `rref`.
template <typename Scalar>
bool in_row_span(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& rref, int rank,
                 Eigen::Matrix<Scalar, 1, Eigen::Dynamic> v)
{
    const Eigen::Index cols = rref.cols();
    for (int r = 0; r < rank; ++r) {
        Eigen::Index lead = 0;
        while (lead < cols && rref(r, lead) == Scalar(0)) ++lead;
        if (lead == cols) continue;
        const Scalar f = v(lead);
        if (f == Scalar(0)) continue;
        for (Eigen::Index c = lead; c < cols; ++c) v(c) -= f * rref(r, c);
    }
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!(v(c) == Scalar(0))) return false;
    return true;
}

}  // namespace hyperpoly

#endif  // HYPERPOLY_LINALG_HPP
