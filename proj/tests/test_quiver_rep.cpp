#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperpoly/quiver_rep.hpp"

using namespace hyperpoly;

TEST_CASE("sampled points lie on the fibre exactly")
{
    for (int n : {4, 5, 6}) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const QuiverRep rep = sample_moment_zero_rep(n, seed);
            CHECK(rep.moment_zero());
            int nonzero_y = 0;
            for (int i = 0; i < n; ++i) {
                CHECK((rep.x[static_cast<std::size_t>(i)](0) != 0 ||
                       rep.x[static_cast<std::size_t>(i)](1) != 0));
                if (rep.y[static_cast<std::size_t>(i)](0) != 0 ||
                    rep.y[static_cast<std::size_t>(i)](1) != 0)
                    ++nonzero_y;
            }
            CHECK(nonzero_y >= (n + 1) / 2);
        }
    }
}

TEST_CASE("independent moment-map evaluation")
{
    // Re-evaluate the defining equations directly from the entries.
    const QuiverRep rep = sample_moment_zero_rep(5, 9);
    Matrix2q central = Matrix2q::Zero();
    for (int i = 0; i < 5; ++i) {
        CHECK((rep.x[static_cast<std::size_t>(i)] * rep.y[static_cast<std::size_t>(i)])(0) == 0);
        central += rep.y[static_cast<std::size_t>(i)] * rep.x[static_cast<std::size_t>(i)];
    }
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(central(r, c) == 0);
}

TEST_CASE("pfaffian table structure")
{
    const QuiverRep rep = sample_moment_zero_rep(5, 3);
    const PfaffianTable table = pfaffian_table(rep);

    for (int i = 1; i <= 5; ++i)
        CHECK(table.at(Arrow{i, false}, Arrow{i, true}) == 0);  // phi_{a_i, a_i*} on the fibre

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const int a = static_cast<int>(rng() % 10), b = static_cast<int>(rng() % 10);
        CHECK(table.values(a, b) == -table.values(b, a));
    }
}

TEST_CASE("plucker and moment relations on the fibre, and their failure off it")
{
    const QuiverRep rep = sample_moment_zero_rep(4, 11);
    PfaffianTable table = pfaffian_table(rep);
    CHECK(verify_plucker(table));
    CHECK(verify_moment_relations(table));

    // A single perturbed entry breaks the three-term identity.
    PfaffianTable bad = table;
    bad.values(0, 2) += 1;
    bad.values(2, 0) -= 1;
    CHECK_FALSE(verify_plucker(bad));

    // A representation missing the central moment equation fails the
    // bilinear relations: take y_i = perp(x_i) with no kernel solve.
    QuiverRep off;
    off.n = 4;
    std::mt19937_64 rng(77);
    for (int i = 0; i < 4; ++i) {
        RowVector2q xi;
        xi << Rational(static_cast<std::int64_t>(rng() % 9) + 1),
            Rational(static_cast<std::int64_t>(rng() % 9) + 1);
        Vector2q yi;
        yi << -xi(1), xi(0);
        off.x.push_back(xi);
        off.y.push_back(yi);
    }
    REQUIRE_FALSE(off.moment_zero());
    CHECK(verify_plucker(pfaffian_table(off)));  // identity of 2-vector wedges, always
    CHECK_FALSE(verify_moment_relations(pfaffian_table(off)));
}

TEST_CASE("zero representation")
{
    QuiverRep zero;
    zero.n = 5;
    for (int i = 0; i < 5; ++i) {
        zero.x.push_back(RowVector2q::Zero());
        zero.y.push_back(Vector2q::Zero());
    }
    CHECK(zero.moment_zero());
    const PfaffianTable table = pfaffian_table(zero);
    CHECK(verify_plucker(table));
    CHECK(verify_moment_relations(table));
}

TEST_CASE("torus-invariant monomials")
{
    const Arrow a1{1, false}, a2{2, false}, a1s{1, true}, a2s{2, true};
    CHECK(is_glv_invariant_monomial({{a1, a2}, {a1s, a2s}}));
    CHECK_FALSE(is_glv_invariant_monomial({{a1, a2}}));
    CHECK(is_glv_invariant_monomial({}));
    CHECK(is_glv_invariant_monomial({{a1, a1s}}));
    CHECK_FALSE(is_glv_invariant_monomial({{a1, a2}, {a1, a2}}));
}

TEST_CASE("the table is invariant under the SL2 action")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const QuiverRep rep = sample_moment_zero_rep(5, seed);
        const PfaffianTable reference = pfaffian_table(rep);
        for (std::uint64_t g_seed = 100; g_seed < 110; ++g_seed) {
            const Matrix2q g = random_sl2(g_seed);
            const PfaffianTable moved = pfaffian_table(sl2_transform(rep, g));
            for (int r = 0; r < 10; ++r)
                for (int c = 0; c < 10; ++c) CHECK(moved.values(r, c) == reference.values(r, c));
        }
    }
}

TEST_CASE("arrow indexing round-trips")
{
    for (int idx = 0; idx < 12; ++idx) CHECK(Arrow::from_index(idx).index() == idx);
    CHECK(Arrow{3, true}.label() == "a3*");
    CHECK(Arrow{1, false}.label() == "a1");
}
