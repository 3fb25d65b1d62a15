#ifndef HYPERPOLY_GROUP_G_HPP
#define HYPERPOLY_GROUP_G_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperpoly/gaussian.hpp"
#include "hyperpoly/quiver_rep.hpp"

/**
 * @file group_g.hpp
 * @brief The order-32 central product of the quaternion and dihedral groups
 *        inside Sp(4), its action on the five-dimensional representation W,
 *        and the quadratic-form generators psi_{i,j} with their relations.
 *
 * Everything is verified over Q(i) as exact identities: group facts by
 * finite enumeration, polynomial relations coefficient-by-coefficient.
 */

namespace hyperpoly {

struct GroupG {
    std::vector<Matrix4g> elements;        ///< 32 matrices over Q(i)
    std::vector<std::vector<int>> table;   ///< multiplication table, indices into elements
    int identity = -1;
    int minus_identity = -1;

    int inverse(int g) const;
    int size() const { return static_cast<int>(elements.size()); }
};

/**
 * Build G as the set of Kronecker products q (x) d over the quaternion and
 * dihedral factors, identifying (-q)(x)(-d) with q(x)d, and verify:
 * |G| = 32, closure, preservation of Omega = J (x) I, centre = [G,G] = {+-1},
 * abelianisation of order 16 and exponent 2.
 *
 * @throws std::runtime_error on any verification failure.
 */
GroupG build_group_G();

/// The symplectic form on C^4 used throughout: Omega = J (x) I_2.
Matrix4g omega_matrix();

struct WAction {
    std::array<int, 4> generators{};             ///< indices into G generating G/{+-1}
    std::vector<VectorXg> w;                     ///< five weight lines in Lambda^2 V* coordinates
    std::vector<std::array<int, 4>> characters;  ///< eigenvalue (+-1) of each w_i under the generators
    std::vector<Gaussian> d;                     ///< wedge-pairing values (w_i, w_i), all nonzero
    int image_size = 0;                          ///< order of the image in GL(W); must be 16
};

/**
 * Split Lambda^2 V* = C.omega + W, compute the simultaneous eigenbasis
 * w_1..w_5 of W (unique up to scale once sorted by character), and verify
 * that the induced action is the diagonal Z_2^4 in SO(W) with kernel
 * {+-1} and that the five characters are pairwise distinct.
 */
WAction action_on_W(const GroupG& group);

/// A quadratic form in 4 variables: coefficients on the 10 monomials
/// x_a x_b (a <= b) in lexicographic order.
using QuadForm = VectorXg;

struct PsiFamily {
    /// psi[i][j] for 0 <= i, j < 5; antisymmetric with zero diagonal.
    std::array<std::array<QuadForm, 5>, 5> psi;
    std::vector<Gaussian> scalars;  ///< the fitted c_{ij} in (i,j) lexicographic order
};

/**
 * Match the ten weight lines of Sym^2 V* to the lines w_i ^ w_j by their
 * Z_2^4-characters (a bijection, verified), then fix the ten scalars by
 * solving the three-term quadratic relations exactly; the residual
 * rescaling freedom w_i -> c_i w_i is left unnormalised.
 *
 * @throws std::runtime_error if the weights fail to biject or the scalar
 *         system is inconsistent.
 */
PsiFamily psi_generators(const GroupG& group, const WAction& waction);

struct PsiVerification {
    bool plucker = false;        ///< psi_ij psi_kl - psi_ik psi_jl + psi_il psi_jk = 0
    bool orthogonality = false;  ///< sum_i d_i^{-1} psi_ij psi_ik = 0 for all j,k
    /// Rank of each psi_ij as a 4x4 symmetric matrix, (i,j) lexicographic.
    /// The w_i are orthogonal with nonzero self-pairing, so the wedges
    /// w_i ^ w_j are decomposable but never isotropic and every form has
    /// full rank 4.
    std::vector<int> form_ranks;
    bool pass() const { return plucker && orthogonality; }
};

/// Verify the psi relations as coefficient-wise polynomial identities.
PsiVerification verify_psi_relations(const PsiFamily& family, const std::vector<Gaussian>& d);

struct GroupCertificate {
    bool order_32 = false;
    bool closure = false;
    bool preserves_omega = false;
    bool centre_is_pm_identity = false;
    bool commutator_is_pm_identity = false;
    bool abelianisation_z2_4 = false;
    bool gamma_homomorphism = false;
    bool image_diagonal_z2_4 = false;
    bool characters_distinct = false;
    bool weights_biject = false;
    PsiVerification psi;
    std::vector<std::string> d_values;
    std::vector<std::string> psi_scalars;

    bool pass() const;
};

/// Run the whole group-side verification chain.
GroupCertificate group_certificate();

struct IsomorphismCertificate {
    GroupCertificate group;
    int n = 5;
    int seeds = 0;
    int degree = 0;
    bool phi_plucker = false;           ///< over all sampled representations
    bool phi_moment = false;
    bool phi_sl2_invariance = false;
    bool monomial_parity = false;       ///< invariant phi-monomials map to even psi parity
    bool reverse_direction_fails = false;  ///< witness that the converse parity test is weaker
    std::string reverse_witness;
    std::uint64_t invariant_monomials_checked = 0;

    bool pass() const;
};

/**
 * The computational certificate behind the identification of the n = 5
 * affine hyperpolygon space with the linear quotient by G: relation systems
 * on both sides verified exactly, plus the monomial-parity correspondence
 * up to the given degree bound.
 */
IsomorphismCertificate verify_isomorphism_certificate(int seeds = 100, int degree = 4);

}  // namespace hyperpoly

#endif  // HYPERPOLY_GROUP_G_HPP
