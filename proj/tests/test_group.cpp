#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hyperpoly/group_g.hpp"

using namespace hyperpoly;

TEST_CASE("group construction and verified facts")
{
    const GroupG group = build_group_G();
    CHECK(group.size() == 32);
    CHECK(group.identity >= 0);
    CHECK(group.minus_identity >= 0);

    // Every element has order dividing 4.
    for (int g = 0; g < 32; ++g) {
        const int sq = group.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(g)];
        const int fourth = group.table[static_cast<std::size_t>(sq)][static_cast<std::size_t>(sq)];
        CHECK(fourth == group.identity);
    }

    // Associativity spot checks through the multiplication table.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = static_cast<int>(rng() % 32), b = static_cast<int>(rng() % 32),
                  c = static_cast<int>(rng() % 32);
        const int left = group.table[static_cast<std::size_t>(
            group.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])]
                                    [static_cast<std::size_t>(c)];
        const int right = group.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(
            group.table[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])];
        CHECK(left == right);
    }

    // The abelianisation has order 16 and exponent 2.
    std::set<std::set<int>> classes;
    for (int g = 0; g < 32; ++g) {
        const int neg = group.table[static_cast<std::size_t>(group.minus_identity)]
                                   [static_cast<std::size_t>(g)];
        classes.insert({g, neg});
    }
    CHECK(classes.size() == 16);
}

TEST_CASE("action on W")
{
    const GroupG group = build_group_G();
    const WAction action = action_on_W(group);
    CHECK(action.image_size == 16);
    REQUIRE(action.w.size() == 5);
    REQUIRE(action.d.size() == 5);
    for (const Gaussian& d : action.d) CHECK_FALSE(d.is_zero());

    std::set<std::array<int, 4>> distinct(action.characters.begin(), action.characters.end());
    CHECK(distinct.size() == 5);
}

TEST_CASE("psi family satisfies both relation systems coefficient-wise")
{
    const GroupG group = build_group_G();
    const WAction action = action_on_W(group);
    const PsiFamily family = psi_generators(group, action);
    REQUIRE(family.scalars.size() == 10);

    const PsiVerification check = verify_psi_relations(family, action.d);
    CHECK(check.plucker);
    CHECK(check.orthogonality);
    // The basis vectors are orthogonal and non-isotropic, so every form
    // has full rank: frozen from the rank oracle.
    REQUIRE(check.form_ranks.size() == 10);
    for (const int r : check.form_ranks) CHECK(r == 4);
    CHECK(check.pass());
}

TEST_CASE("perturbing one psi coefficient breaks the identities")
{
    const GroupG group = build_group_G();
    const WAction action = action_on_W(group);
    PsiFamily family = psi_generators(group, action);
    family.psi[0][1](0) += Gaussian(Rational(1));
    family.psi[1][0](0) -= Gaussian(Rational(1));
    const PsiVerification check = verify_psi_relations(family, action.d);
    const bool both = check.plucker && check.orthogonality;
    CHECK_FALSE(both);
}

TEST_CASE("group certificate passes")
{
    const GroupCertificate cert = group_certificate();
    CHECK(cert.pass());
    CHECK(cert.gamma_homomorphism);
    CHECK(cert.image_diagonal_z2_4);
    REQUIRE(cert.d_values.size() == 5);
    REQUIRE(cert.psi_scalars.size() == 10);
}

TEST_CASE("isomorphism certificate at reduced size")
{
    const IsomorphismCertificate cert = verify_isomorphism_certificate(10, 3);
    CHECK(cert.pass());
    CHECK(cert.phi_plucker);
    CHECK(cert.phi_moment);
    CHECK(cert.phi_sl2_invariance);
    CHECK(cert.monomial_parity);
    CHECK(cert.reverse_direction_fails);
    CHECK(cert.invariant_monomials_checked > 0);
}

TEST_CASE("degree-2 parity correspondence is exhaustive")
{
    // All degree <= 2 invariant monomials have even image parity; the
    // canonical example phi(a1,a2) phi(a1*,a2*) maps to psi_12^2.
    const IsomorphismCertificate cert = verify_isomorphism_certificate(1, 2);
    CHECK(cert.monomial_parity);
    const PhiMonomial example{{Arrow{1, false}, Arrow{2, false}},
                              {Arrow{1, true}, Arrow{2, true}}};
    CHECK(is_glv_invariant_monomial(example));
}
