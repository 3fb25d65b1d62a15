#include "hyperpoly/group_g.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "hyperpoly/linalg.hpp"

namespace hyperpoly {

namespace {

Matrix2g mat2(int a_re, int a_im, int b_re, int b_im, int c_re, int c_im, int d_re, int d_im)
{
    Matrix2g m;
    m(0, 0) = Gaussian(Rational(a_re), Rational(a_im));
    m(0, 1) = Gaussian(Rational(b_re), Rational(b_im));
    m(1, 0) = Gaussian(Rational(c_re), Rational(c_im));
    m(1, 1) = Gaussian(Rational(d_re), Rational(d_im));
    return m;
}

Matrix4g kron(const Matrix2g& a, const Matrix2g& b)
{
    Matrix4g out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

bool same_matrix(const Matrix4g& a, const Matrix4g& b)
{
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

/// Pairs (a,b), a<b, indexing the basis x_a ^ x_b of Lambda^2 V*.
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

/// Pairs (a,b), a<=b, indexing the monomials x_a x_b of Sym^2 V*.
constexpr int kQuad[10][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                              {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};

/// Matrix of eta -> eta o h on Lambda^2, where h substitutes the variables.
MatrixXg lambda2_matrix(const Matrix4g& h)
{
    MatrixXg m = MatrixXg::Zero(6, 6);
    for (int col = 0; col < 6; ++col) {
        const int a = kPairs[col][0], b = kPairs[col][1];
        for (int row = 0; row < 6; ++row) {
            const int c = kPairs[row][0], d = kPairs[row][1];
            m(row, col) = h(a, c) * h(b, d) - h(a, d) * h(b, c);
        }
    }
    return m;
}

/// Matrix of f -> f o h on Sym^2.
MatrixXg sym2_matrix(const Matrix4g& h)
{
    MatrixXg m = MatrixXg::Zero(10, 10);
    for (int col = 0; col < 10; ++col) {
        const int a = kQuad[col][0], b = kQuad[col][1];
        for (int row = 0; row < 10; ++row) {
            const int c = kQuad[row][0], d = kQuad[row][1];
            if (c == d) m(row, col) = h(a, c) * h(b, c);
            else m(row, col) = h(a, c) * h(b, d) + h(a, d) * h(b, c);
        }
    }
    return m;
}

/// Wedge pairing Lambda^2 x Lambda^2 -> Lambda^4 = C . x_0^x_1^x_2^x_3.
Gaussian wedge_pair(const VectorXg& u, const VectorXg& v)
{
    // (x_a^x_b)^(x_c^x_d) is the sign of the permutation (a,b,c,d) of
    // (0,1,2,3) when the pairs are complementary and zero otherwise.
    static const int complement[6] = {5, 4, 3, 2, 1, 0};
    static const int sign[6] = {1, -1, 1, 1, -1, 1};
    Gaussian s;
    for (int k = 0; k < 6; ++k) s += u(k) * v(complement[k]) * Gaussian(Rational(sign[k]));
    return s;
}

/// The symplectic form Omega = J (x) I as an element of Lambda^2 V*.
VectorXg omega_form()
{
    VectorXg w = VectorXg::Zero(6);
    w(1) = Gaussian(Rational(-1));  // -(x_0 ^ x_2)
    w(4) = Gaussian(Rational(-1));  // -(x_1 ^ x_3)
    return w;
}

/// Split a subspace into the (+-1)-eigenspace of the involution R.
std::vector<VectorXg> split_sign(const std::vector<VectorXg>& basis, const MatrixXg& R, int sign)
{
    const Eigen::Index dim = R.rows();
    const int k = static_cast<int>(basis.size());
    MatrixXg shifted(dim, k);
    for (int j = 0; j < k; ++j) {
        const VectorXg image = R * basis[static_cast<std::size_t>(j)];
        for (Eigen::Index r = 0; r < dim; ++r)
            shifted(r, j) = image(r) - Gaussian(Rational(sign)) * basis[static_cast<std::size_t>(j)](r);
    }
    const MatrixXg coeffs = kernel_basis(shifted);
    std::vector<VectorXg> out;
    for (Eigen::Index c = 0; c < coeffs.cols(); ++c) {
        VectorXg v = VectorXg::Zero(dim);
        for (int j = 0; j < k; ++j) v += coeffs(j, c) * basis[static_cast<std::size_t>(j)];
        out.push_back(std::move(v));
    }
    return out;
}

VectorXg normalize_leading(VectorXg v)
{
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (!v(k).is_zero()) {
            const Gaussian lead = v(k);
            for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = v(j) / lead;
            return v;
        }
    }
    throw std::runtime_error("normalize_leading: zero vector");
}

// --------------------------------------------------------------------------
// Quartic forms: exponent vectors summing to 4 over four variables.

struct QuarticTable {
    std::vector<std::array<int, 4>> monomials;
    std::map<std::array<int, 4>, int> index;

    QuarticTable()
    {
        for (int e0 = 0; e0 <= 4; ++e0)
            for (int e1 = 0; e1 + e0 <= 4; ++e1)
                for (int e2 = 0; e2 + e1 + e0 <= 4; ++e2) {
                    const std::array<int, 4> e{e0, e1, e2, 4 - e0 - e1 - e2};
                    index[e] = static_cast<int>(monomials.size());
                    monomials.push_back(e);
                }
    }
};

const QuarticTable& quartic_table()
{
    static const QuarticTable table;
    return table;
}

/// Product of two quadratic forms as a quartic coefficient vector.
VectorXg quad_mul(const QuadForm& f, const QuadForm& g)
{
    const QuarticTable& table = quartic_table();
    VectorXg out = VectorXg::Zero(static_cast<Eigen::Index>(table.monomials.size()));
    for (int i = 0; i < 10; ++i) {
        if (f(i).is_zero()) continue;
        for (int j = 0; j < 10; ++j) {
            if (g(j).is_zero()) continue;
            std::array<int, 4> e{0, 0, 0, 0};
            e[static_cast<std::size_t>(kQuad[i][0])] += 1;
            e[static_cast<std::size_t>(kQuad[i][1])] += 1;
            e[static_cast<std::size_t>(kQuad[j][0])] += 1;
            e[static_cast<std::size_t>(kQuad[j][1])] += 1;
            out(table.index.at(e)) += f(i) * g(j);
        }
    }
    return out;
}

bool is_zero_vector(const VectorXg& v)
{
    for (Eigen::Index k = 0; k < v.size(); ++k)
        if (!v(k).is_zero()) return false;
    return true;
}

}  // namespace

Matrix4g omega_matrix()
{
    Matrix4g omega;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) omega(i, j) = Gaussian();
    omega(0, 2) = Gaussian(Rational(-1));
    omega(1, 3) = Gaussian(Rational(-1));
    omega(2, 0) = Gaussian(Rational(1));
    omega(3, 1) = Gaussian(Rational(1));
    return omega;
}

int GroupG::inverse(int g) const
{
    for (int h = 0; h < size(); ++h)
        if (table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == identity) return h;
    throw std::runtime_error("GroupG::inverse: no inverse found");
}

GroupG build_group_G()
{
    // Quaternion units in SL_2 and the dihedral group of the square in O(2).
    const Matrix2g one = mat2(1, 0, 0, 0, 0, 0, 1, 0);
    const Matrix2g qi = mat2(0, 1, 0, 0, 0, 0, 0, -1);
    const Matrix2g qj = mat2(0, 0, 1, 0, -1, 0, 0, 0);
    const Matrix2g qk = mat2(0, 0, 0, 1, 0, 1, 0, 0);
    std::vector<Matrix2g> quaternions{one, qi, qj, qk};
    for (int k = 0; k < 4; ++k) {
        Matrix2g neg = quaternions[static_cast<std::size_t>(k)];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) neg(i, j) = -neg(i, j);
        quaternions.push_back(neg);
    }

    const Matrix2g rot = mat2(0, 0, -1, 0, 1, 0, 0, 0);
    const Matrix2g refl = mat2(1, 0, 0, 0, 0, 0, -1, 0);
    std::vector<Matrix2g> dihedral;
    Matrix2g power = one;
    for (int a = 0; a < 4; ++a) {
        dihedral.push_back(power);
        dihedral.push_back(power * refl);
        power = power * rot;
    }

    GroupG group;
    for (const Matrix2g& q : quaternions) {
        for (const Matrix2g& d : dihedral) {
            const Matrix4g candidate = kron(q, d);
            bool known = false;
            for (const Matrix4g& e : group.elements)
                if (same_matrix(candidate, e)) { known = true; break; }
            if (!known) group.elements.push_back(candidate);
        }
    }
    if (group.size() != 32) throw std::runtime_error("build_group_G: |G| != 32");

    auto find = [&](const Matrix4g& m) {
        for (int k = 0; k < group.size(); ++k)
            if (same_matrix(m, group.elements[static_cast<std::size_t>(k)])) return k;
        return -1;
    };

    const Matrix4g id4 = kron(one, one);
    Matrix4g neg_id4 = id4;
    for (int i = 0; i < 4; ++i) neg_id4(i, i) = Gaussian(Rational(-1));
    group.identity = find(id4);
    group.minus_identity = find(neg_id4);
    if (group.identity < 0 || group.minus_identity < 0)
        throw std::runtime_error("build_group_G: +-identity missing");

    group.table.assign(32, std::vector<int>(32, -1));
    for (int a = 0; a < 32; ++a) {
        for (int b = 0; b < 32; ++b) {
            const int p = find(group.elements[static_cast<std::size_t>(a)] *
                               group.elements[static_cast<std::size_t>(b)]);
            if (p < 0) throw std::runtime_error("build_group_G: not closed under multiplication");
            group.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = p;
        }
    }

    const Matrix4g omega = omega_matrix();
    for (const Matrix4g& g : group.elements) {
        const Matrix4g check = g.transpose() * omega * g;
        if (!same_matrix(check, omega))
            throw std::runtime_error("build_group_G: element fails to preserve Omega");
    }

    // Centre and commutator subgroup are both {+-1}.
    std::vector<int> centre;
    for (int a = 0; a < 32; ++a) {
        bool central = true;
        for (int b = 0; b < 32 && central; ++b)
            if (group.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] !=
                group.table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                central = false;
        if (central) centre.push_back(a);
    }
    if (centre.size() != 2) throw std::runtime_error("build_group_G: centre is not {+-1}");

    std::vector<int> commutators;
    for (int a = 0; a < 32; ++a) {
        const int ia = group.inverse(a);
        for (int b = 0; b < 32; ++b) {
            const int ib = group.inverse(b);
            const int c = group.table[static_cast<std::size_t>(
                group.table[static_cast<std::size_t>(ia)][static_cast<std::size_t>(ib)])]
                                     [static_cast<std::size_t>(
                                         group.table[static_cast<std::size_t>(a)]
                                                    [static_cast<std::size_t>(b)])];
            if (std::find(commutators.begin(), commutators.end(), c) == commutators.end())
                commutators.push_back(c);
        }
    }
    std::sort(commutators.begin(), commutators.end());
    if (commutators.size() != 2 ||
        !((commutators[0] == group.identity && commutators[1] == group.minus_identity) ||
          (commutators[1] == group.identity && commutators[0] == group.minus_identity)))
        throw std::runtime_error("build_group_G: [G,G] is not {+-1}");

    // Abelianisation: order 16 and exponent 2, hence Z_2^4.
    for (int a = 0; a < 32; ++a) {
        const int sq = group.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)];
        if (sq != group.identity && sq != group.minus_identity)
            throw std::runtime_error("build_group_G: some square escapes the centre");
    }
    return group;
}

WAction action_on_W(const GroupG& group)
{
    // Work modulo +-1: the Lambda^2 action is insensitive to the sign.
    std::vector<MatrixXg> rho;
    std::vector<int> representative;
    for (int g = 0; g < group.size(); ++g) {
        const int ginv = group.inverse(g);
        const MatrixXg m = lambda2_matrix(group.elements[static_cast<std::size_t>(ginv)]);
        bool known = false;
        for (const MatrixXg& r : rho) {
            bool equal = true;
            for (int i = 0; i < 6 && equal; ++i)
                for (int j = 0; j < 6 && equal; ++j)
                    if (!(r(i, j) == m(i, j))) equal = false;
            if (equal) { known = true; break; }
        }
        if (!known) {
            rho.push_back(m);
            representative.push_back(g);
        }
    }
    if (rho.size() != 16)
        throw std::runtime_error("action_on_W: image of G on Lambda^2 is not of order 16");

    // omega must be fixed by the whole group.
    const VectorXg omega = omega_form();
    for (const MatrixXg& r : rho)
        if (!is_zero_vector(r * omega - omega))
            throw std::runtime_error("action_on_W: omega is not invariant");

    // W = orthogonal complement of omega under the wedge pairing.
    MatrixXg constraint(1, 6);
    {
        static const int complement[6] = {5, 4, 3, 2, 1, 0};
        static const int sign[6] = {1, -1, 1, 1, -1, 1};
        for (int k = 0; k < 6; ++k)
            constraint(0, k) = omega(complement[k]) * Gaussian(Rational(sign[k]));
    }
    const MatrixXg w_basis = kernel_basis(constraint);
    if (w_basis.cols() != 5) throw std::runtime_error("action_on_W: W is not five-dimensional");

    // Pick four generators of the image group greedily.
    WAction action;
    {
        std::vector<int> chosen;
        std::vector<int> generated{0};  // index into rho; rho[0] is the identity class
        auto contains = [&](int idx) {
            return std::find(generated.begin(), generated.end(), idx) != generated.end();
        };
        auto rho_index = [&](const MatrixXg& m) {
            for (std::size_t k = 0; k < rho.size(); ++k) {
                bool equal = true;
                for (int i = 0; i < 6 && equal; ++i)
                    for (int j = 0; j < 6 && equal; ++j)
                        if (!(rho[k](i, j) == m(i, j))) equal = false;
                if (equal) return static_cast<int>(k);
            }
            throw std::runtime_error("action_on_W: product escapes the image");
        };
        for (std::size_t k = 1; k < rho.size() && chosen.size() < 4; ++k) {
            if (contains(static_cast<int>(k))) continue;
            chosen.push_back(static_cast<int>(k));
            std::vector<int> next = generated;
            for (const int a : generated) next.push_back(rho_index(rho[static_cast<std::size_t>(a)] * rho[k]));
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            generated = std::move(next);
        }
        if (chosen.size() != 4 || generated.size() != 16)
            throw std::runtime_error("action_on_W: failed to generate Z_2^4 with four elements");
        for (int k = 0; k < 4; ++k)
            action.generators[static_cast<std::size_t>(k)] =
                representative[static_cast<std::size_t>(chosen[static_cast<std::size_t>(k)])];

        // Simultaneous eigenbasis of W under the four generators.
        struct Piece {
            std::vector<VectorXg> vectors;
            std::array<int, 4> character;
        };
        std::vector<Piece> pieces;
        {
            Piece whole;
            for (Eigen::Index c = 0; c < w_basis.cols(); ++c) whole.vectors.push_back(w_basis.col(c));
            whole.character = {1, 1, 1, 1};
            pieces.push_back(std::move(whole));
        }
        for (int gen = 0; gen < 4; ++gen) {
            const MatrixXg& R = rho[static_cast<std::size_t>(chosen[static_cast<std::size_t>(gen)])];
            std::vector<Piece> next;
            for (const Piece& piece : pieces) {
                for (const int sign : {+1, -1}) {
                    Piece part;
                    part.vectors = split_sign(piece.vectors, R, sign);
                    part.character = piece.character;
                    part.character[static_cast<std::size_t>(gen)] = sign;
                    if (!part.vectors.empty()) next.push_back(std::move(part));
                }
            }
            pieces = std::move(next);
        }
        if (pieces.size() != 5)
            throw std::runtime_error("action_on_W: W does not split into five weight lines");
        std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
            return a.character < b.character;
        });
        for (const Piece& piece : pieces) {
            if (piece.vectors.size() != 1)
                throw std::runtime_error("action_on_W: weight line is not one-dimensional");
            action.w.push_back(normalize_leading(piece.vectors[0]));
            action.characters.push_back(piece.character);
        }
    }

    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (action.characters[static_cast<std::size_t>(i)] ==
                action.characters[static_cast<std::size_t>(j)])
                throw std::runtime_error("action_on_W: characters are not pairwise distinct");

    // Pairing values; off-diagonal pairs are orthogonal because the
    // characters differ, and the diagonal values must not vanish.
    for (int i = 0; i < 5; ++i) {
        action.d.push_back(wedge_pair(action.w[static_cast<std::size_t>(i)],
                                      action.w[static_cast<std::size_t>(i)]));
        if (action.d.back().is_zero())
            throw std::runtime_error("action_on_W: degenerate pairing value");
        for (int j = 0; j < i; ++j)
            if (!wedge_pair(action.w[static_cast<std::size_t>(i)], action.w[static_cast<std::size_t>(j)])
                     .is_zero())
                throw std::runtime_error("action_on_W: weight lines are not pairwise orthogonal");
    }

    // Every element must act diagonally by +-1 with determinant one; the
    // image must have exactly 16 elements and kernel {+-1}.
    std::vector<std::array<int, 5>> tuples;
    for (int g = 0; g < group.size(); ++g) {
        const MatrixXg R = lambda2_matrix(group.elements[static_cast<std::size_t>(group.inverse(g))]);
        std::array<int, 5> tuple{};
        int det = 1;
        for (int i = 0; i < 5; ++i) {
            const VectorXg image = R * action.w[static_cast<std::size_t>(i)];
            bool plus = is_zero_vector(image - action.w[static_cast<std::size_t>(i)]);
            bool minus = is_zero_vector(image + action.w[static_cast<std::size_t>(i)]);
            if (!plus && !minus)
                throw std::runtime_error("action_on_W: element does not act diagonally by +-1");
            tuple[static_cast<std::size_t>(i)] = plus ? 1 : -1;
            det *= tuple[static_cast<std::size_t>(i)];
        }
        if (det != 1) throw std::runtime_error("action_on_W: image matrix has determinant -1");
        const bool trivial = std::all_of(tuple.begin(), tuple.end(), [](int s) { return s == 1; });
        if (trivial && g != group.identity && g != group.minus_identity)
            throw std::runtime_error("action_on_W: kernel larger than {+-1}");
        tuples.push_back(tuple);
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    action.image_size = static_cast<int>(tuples.size());
    if (action.image_size != 16)
        throw std::runtime_error("action_on_W: image is not the diagonal Z_2^4");
    return action;
}

namespace {

/// Simultaneous weight lines of Sym^2 V* under the same four generators.
struct WeightLine {
    QuadForm form;
    std::array<int, 4> character;
};

std::vector<WeightLine> sym2_weight_lines(const GroupG& group, const WAction& action)
{
    std::vector<VectorXg> basis;
    for (int k = 0; k < 10; ++k) {
        VectorXg e = VectorXg::Zero(10);
        e(k) = Gaussian(Rational(1));
        basis.push_back(std::move(e));
    }

    struct Piece {
        std::vector<VectorXg> vectors;
        std::array<int, 4> character;
    };
    std::vector<Piece> pieces{{basis, {1, 1, 1, 1}}};
    for (int gen = 0; gen < 4; ++gen) {
        const int g = action.generators[static_cast<std::size_t>(gen)];
        const MatrixXg R =
            sym2_matrix(group.elements[static_cast<std::size_t>(group.inverse(g))]);
        std::vector<Piece> next;
        for (const Piece& piece : pieces) {
            for (const int sign : {+1, -1}) {
                Piece part;
                part.vectors = split_sign(piece.vectors, R, sign);
                part.character = piece.character;
                part.character[static_cast<std::size_t>(gen)] = sign;
                if (!part.vectors.empty()) next.push_back(std::move(part));
            }
        }
        pieces = std::move(next);
    }

    std::vector<WeightLine> lines;
    for (const Piece& piece : pieces) {
        if (piece.vectors.size() != 1)
            throw std::runtime_error("psi_generators: Sym^2 weight space is not a line");
        lines.push_back({normalize_leading(piece.vectors[0]), piece.character});
    }
    if (lines.size() != 10)
        throw std::runtime_error("psi_generators: Sym^2 does not split into ten lines");
    return lines;
}

std::array<int, 4> character_product(const std::array<int, 4>& a, const std::array<int, 4>& b)
{
    std::array<int, 4> c{};
    for (int k = 0; k < 4; ++k)
        c[static_cast<std::size_t>(k)] =
            a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
    return c;
}

/// Unique solution of a consistent full-column-rank system A x = b.
VectorXg linear_solve(const MatrixXg& a, const VectorXg& b)
{
    MatrixXg aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const int rank = rref_in_place(aug);
    if (rank != a.cols()) throw std::runtime_error("linear_solve: system is not determined");
    VectorXg x = VectorXg::Zero(a.cols());
    for (int r = 0; r < rank; ++r) {
        Eigen::Index lead = 0;
        while (lead < a.cols() && aug(r, lead).is_zero()) ++lead;
        if (lead == a.cols())
            throw std::runtime_error("linear_solve: inconsistent system");
        x(lead) = aug(r, a.cols());
    }
    return x;
}

/// Infinitesimal action of X on Lambda^2 V*: eta -> -eta(X.,.) - eta(.,X.).
MatrixXg lambda2_infinitesimal(const Matrix4g& x)
{
    MatrixXg m = MatrixXg::Zero(6, 6);
    auto add_wedge = [&](int col, int a, int b, const Gaussian& coeff) {
        if (a == b) return;
        int lo = a, hi = b;
        Gaussian c = coeff;
        if (lo > hi) {
            std::swap(lo, hi);
            c = -c;
        }
        for (int k = 0; k < 6; ++k)
            if (kPairs[k][0] == lo && kPairs[k][1] == hi) {
                m(k, col) += c;
                return;
            }
        throw std::logic_error("lambda2_infinitesimal: pair lookup");
    };
    for (int col = 0; col < 6; ++col) {
        const int a = kPairs[col][0], b = kPairs[col][1];
        for (int c = 0; c < 4; ++c) {
            add_wedge(col, c, b, -x(a, c));
            add_wedge(col, a, c, -x(b, c));
        }
    }
    return m;
}

/**
 * The canonical equivariant isomorphism iota: Sym^2 V* -> Lambda^2 W,
 * realised through the Lie-algebra identification: a quadratic form Q maps
 * to the Hamiltonian endomorphism X = Omega^{-1} Q of sp(V), whose induced
 * action on W is an element of so(W), i.e. of Lambda^2 W. In the basis
 * w_1..w_5 with pairing values d_i, the wedge w_i ^ w_j acts as the matrix
 * E_ij d_j - E_ji d_i.
 */
struct IotaMap {
    MatrixXg coords_of_sym2;  ///< 25 x 10: vec(S(monomial)) per Sym^2 basis column

    static IotaMap build(const WAction& action)
    {
        // Basis matrix of Lambda^2 V* adapted to [w_1..w_5 | omega].
        MatrixXg adapted(6, 6);
        for (int i = 0; i < 5; ++i) adapted.col(i) = action.w[static_cast<std::size_t>(i)];
        adapted.col(5) = omega_form();

        const Matrix4g omega = omega_matrix();
        Matrix4g omega_inv;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) omega_inv(i, j) = -omega(i, j);

        IotaMap iota;
        iota.coords_of_sym2 = MatrixXg::Zero(25, 10);
        for (int mono = 0; mono < 10; ++mono) {
            const int a = kQuad[mono][0], b = kQuad[mono][1];
            Matrix4g q;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) q(i, j) = Gaussian();
            if (a == b) q(a, a) = Gaussian(Rational(1));
            else {
                q(a, b) = Gaussian(Rational(1) / 2);
                q(b, a) = q(a, b);
            }
            const Matrix4g x = omega_inv * q;
            const MatrixXg l = lambda2_infinitesimal(x);

            // Coordinates of L w_j in the adapted basis; the omega
            // component must vanish because sp(V) preserves W.
            for (int j = 0; j < 5; ++j) {
                const VectorXg coords =
                    linear_solve(adapted, l * action.w[static_cast<std::size_t>(j)]);
                if (!coords(5).is_zero())
                    throw std::runtime_error("iota: action leaks out of W");
                for (int i = 0; i < 5; ++i) iota.coords_of_sym2(5 * j + i, mono) = coords(i);
            }
        }
        return iota;
    }

    /// Solve S(q) = E_ij d_j - E_ji d_i for the quadratic form q.
    QuadForm invert_to_wedge(const WAction& action, int i, int j) const
    {
        VectorXg target = VectorXg::Zero(25);
        target(5 * j + i) = action.d[static_cast<std::size_t>(j)];
        target(5 * i + j) = -action.d[static_cast<std::size_t>(i)];
        return linear_solve(coords_of_sym2, target);
    }
};

}  // namespace

PsiFamily psi_generators(const GroupG& group, const WAction& action)
{
    const std::vector<WeightLine> lines = sym2_weight_lines(group, action);

    // The ten characters of Sym^2 V* must biject with the pairwise products
    // of the five characters of W.
    std::array<std::array<int, 5>, 5> line_of{};
    std::vector<bool> used(lines.size(), false);
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            const std::array<int, 4> target = character_product(
                action.characters[static_cast<std::size_t>(i)],
                action.characters[static_cast<std::size_t>(j)]);
            int found = -1;
            for (std::size_t k = 0; k < lines.size(); ++k)
                if (lines[k].character == target) {
                    if (found >= 0)
                        throw std::runtime_error("psi_generators: repeated Sym^2 character");
                    found = static_cast<int>(k);
                }
            if (found < 0 || used[static_cast<std::size_t>(found)])
                throw std::runtime_error("psi_generators: weights fail to biject");
            used[static_cast<std::size_t>(found)] = true;
            line_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = found;
        }
    }

    // psi_ij = iota^{-1}(w_i ^ w_j) through the canonical equivariant map;
    // nothing is fitted, so both relation families below stay independent
    // verifications.
    const IotaMap iota = IotaMap::build(action);

    PsiFamily family;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            family.psi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = VectorXg::Zero(10);
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            QuadForm form = iota.invert_to_wedge(action, i, j);

            // Cross-check: psi_ij must span the matched weight line.
            const QuadForm& line = lines[static_cast<std::size_t>(
                                             line_of[static_cast<std::size_t>(i)]
                                                    [static_cast<std::size_t>(j)])]
                                       .form;
            Gaussian ratio;
            bool ratio_set = false;
            for (int k = 0; k < 10; ++k) {
                if (line(k).is_zero()) {
                    if (!form(k).is_zero())
                        throw std::runtime_error("psi_generators: psi leaves its weight line");
                    continue;
                }
                const Gaussian r = form(k) / line(k);
                if (!ratio_set) {
                    ratio = r;
                    ratio_set = true;
                } else if (!(r == ratio)) {
                    throw std::runtime_error("psi_generators: psi leaves its weight line");
                }
            }
            if (!ratio_set || ratio.is_zero())
                throw std::runtime_error("psi_generators: psi_ij vanishes");
            family.scalars.push_back(ratio);

            for (int k = 0; k < 10; ++k)
                family.psi[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)](k) = -form(k);
            family.psi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(form);
        }
    }
    return family;
}

PsiVerification verify_psi_relations(const PsiFamily& family, const std::vector<Gaussian>& d)
{
    PsiVerification out;
    auto psi = [&](int i, int j) -> const QuadForm& {
        return family.psi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };

    out.plucker = true;
    for (int i = 0; i < 5 && out.plucker; ++i)
        for (int j = i + 1; j < 5 && out.plucker; ++j)
            for (int k = j + 1; k < 5 && out.plucker; ++k)
                for (int l = k + 1; l < 5 && out.plucker; ++l) {
                    const VectorXg lhs = quad_mul(psi(i, j), psi(k, l)) -
                                         quad_mul(psi(i, k), psi(j, l)) +
                                         quad_mul(psi(i, l), psi(j, k));
                    if (!is_zero_vector(lhs)) out.plucker = false;
                }

    out.orthogonality = true;
    for (int j = 0; j < 5 && out.orthogonality; ++j)
        for (int k = j; k < 5 && out.orthogonality; ++k) {
            VectorXg sum = VectorXg::Zero(static_cast<Eigen::Index>(quartic_table().monomials.size()));
            for (int i = 0; i < 5; ++i) {
                if (i == j || i == k) continue;
                const VectorXg term = quad_mul(psi(i, j), psi(i, k));
                const Gaussian weight = Gaussian(Rational(1)) / d[static_cast<std::size_t>(i)];
                for (Eigen::Index m = 0; m < sum.size(); ++m) sum(m) += weight * term(m);
            }
            if (!is_zero_vector(sum)) out.orthogonality = false;
        }

    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            MatrixXg q = MatrixXg::Zero(4, 4);
            const Gaussian half = Gaussian(Rational(1) / 2);
            for (int k = 0; k < 10; ++k) {
                const int a = kQuad[k][0], b = kQuad[k][1];
                if (a == b) q(a, a) = psi(i, j)(k);
                else {
                    q(a, b) = psi(i, j)(k) * half;
                    q(b, a) = q(a, b);
                }
            }
            out.form_ranks.push_back(rank_of(q));
        }
    return out;
}

bool GroupCertificate::pass() const
{
    return order_32 && closure && preserves_omega && centre_is_pm_identity &&
           commutator_is_pm_identity && abelianisation_z2_4 && gamma_homomorphism &&
           image_diagonal_z2_4 && characters_distinct && weights_biject && psi.pass();
}

GroupCertificate group_certificate()
{
    GroupCertificate cert;
    const GroupG group = build_group_G();
    cert.order_32 = cert.closure = cert.preserves_omega = true;
    cert.centre_is_pm_identity = cert.commutator_is_pm_identity = true;
    cert.abelianisation_z2_4 = true;

    const WAction action = action_on_W(group);
    cert.image_diagonal_z2_4 = true;
    cert.characters_distinct = true;
    for (const Gaussian& di : action.d) cert.d_values.push_back(di.str());

    // gamma is a homomorphism on all pairs: compare the Lambda^2 matrices.
    cert.gamma_homomorphism = true;
    std::vector<MatrixXg> images;
    for (int g = 0; g < group.size(); ++g)
        images.push_back(
            lambda2_matrix(group.elements[static_cast<std::size_t>(group.inverse(g))]));
    for (int a = 0; a < group.size() && cert.gamma_homomorphism; ++a)
        for (int b = 0; b < group.size() && cert.gamma_homomorphism; ++b) {
            const int ab = group.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            const MatrixXg lhs = images[static_cast<std::size_t>(a)] * images[static_cast<std::size_t>(b)];
            const MatrixXg& rhs = images[static_cast<std::size_t>(ab)];
            for (int i = 0; i < 6 && cert.gamma_homomorphism; ++i)
                for (int j = 0; j < 6; ++j)
                    if (!(lhs(i, j) == rhs(i, j))) { cert.gamma_homomorphism = false; break; }
        }

    const PsiFamily family = psi_generators(group, action);
    cert.weights_biject = true;
    for (const Gaussian& s : family.scalars) cert.psi_scalars.push_back(s.str());
    cert.psi = verify_psi_relations(family, action.d);
    return cert;
}

bool IsomorphismCertificate::pass() const
{
    return group.pass() && phi_plucker && phi_moment && phi_sl2_invariance && monomial_parity;
}

namespace {

bool tables_equal(const PfaffianTable& a, const PfaffianTable& b)
{
    if (a.n != b.n) return false;
    for (int r = 0; r < 2 * a.n; ++r)
        for (int c = 0; c < 2 * a.n; ++c)
            if (a.values(r, c) != b.values(r, c)) return false;
    return true;
}

}  // namespace

IsomorphismCertificate verify_isomorphism_certificate(int seeds, int degree)
{
    IsomorphismCertificate cert;
    cert.group = group_certificate();
    cert.n = 5;
    cert.seeds = seeds;
    cert.degree = degree;

    cert.phi_plucker = cert.phi_moment = cert.phi_sl2_invariance = true;
    for (int seed = 0; seed < seeds; ++seed) {
        const QuiverRep rep = sample_moment_zero_rep(5, static_cast<std::uint64_t>(seed));
        const PfaffianTable table = pfaffian_table(rep);
        if (!verify_plucker(table)) cert.phi_plucker = false;
        if (!verify_moment_relations(table)) cert.phi_moment = false;
        const Matrix2q g = random_sl2(static_cast<std::uint64_t>(seed) + 17);
        if (!tables_equal(table, pfaffian_table(sl2_transform(rep, g))))
            cert.phi_sl2_invariance = false;
    }

    // Monomial correspondence: every torus-invariant phi-monomial maps to a
    // psi-monomial with all index parities even. Pairs on one vertex map to
    // zero (psi_ii = 0) and are exempt.
    std::vector<std::pair<Arrow, Arrow>> pair_types;
    for (int p = 0; p < 10; ++p)
        for (int q = p + 1; q < 10; ++q)
            pair_types.emplace_back(Arrow::from_index(p), Arrow::from_index(q));

    cert.monomial_parity = true;
    std::uint64_t checked = 0;
    PhiMonomial monomial;
    std::function<void(std::size_t)> recurse = [&](std::size_t start) {
        if (!cert.monomial_parity) return;
        if (!monomial.empty() && is_glv_invariant_monomial(monomial)) {
            ++checked;
            bool zero_image = false;
            int parity[5] = {0, 0, 0, 0, 0};
            for (const auto& [a, b] : monomial) {
                if (a.vertex == b.vertex) { zero_image = true; break; }
                parity[a.vertex - 1] ^= 1;
                parity[b.vertex - 1] ^= 1;
            }
            if (!zero_image)
                for (int v = 0; v < 5; ++v)
                    if (parity[v]) cert.monomial_parity = false;
        }
        if (static_cast<int>(monomial.size()) == degree) return;
        for (std::size_t k = start; k < pair_types.size(); ++k) {
            monomial.push_back(pair_types[k]);
            recurse(k);
            monomial.pop_back();
        }
    };
    recurse(0);
    cert.invariant_monomials_checked = checked;

    // phi(a1,a2)^2 is not invariant, yet its image psi_12^2 has even
    // parity: the parity test does not characterise invariance backwards.
    {
        const PhiMonomial witness{{Arrow{1, false}, Arrow{2, false}},
                                  {Arrow{1, false}, Arrow{2, false}}};
        cert.reverse_direction_fails = !is_glv_invariant_monomial(witness);
        cert.reverse_witness = "phi(a1,a2)^2 -> psi(1,2)^2";
    }
    return cert;
}

}  // namespace hyperpoly
