#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "hyperpoly/charpoly.hpp"
#include "hyperpoly/chambers.hpp"
#include "hyperpoly/lp.hpp"

using namespace hyperpoly;

TEST_CASE("strict feasibility on small systems")
{
    {
        MatrixXq rows(2, 2);
        rows << Rational(1), Rational(0), Rational(0), Rational(1);
        const auto x = strict_feasible(rows);
        REQUIRE(x.has_value());
        CHECK((*x)(0) >= 1);
        CHECK((*x)(1) >= 1);
    }
    {
        // x > 0 and -x > 0 cannot both hold.
        MatrixXq rows(2, 1);
        rows << Rational(1), Rational(-1);
        CHECK_FALSE(strict_feasible(rows).has_value());
    }
    {
        // x+y > 0, -x > 0, -y > 0 is the Gordan-infeasible triple.
        MatrixXq rows(3, 2);
        rows << Rational(1), Rational(1), Rational(-1), Rational(0), Rational(0), Rational(-1);
        CHECK_FALSE(strict_feasible(rows).has_value());
    }
    {
        // Thin cone: y > 100x > 0.
        MatrixXq rows(2, 2);
        rows << Rational(-100), Rational(1), Rational(1), Rational(0);
        const auto x = strict_feasible(rows);
        REQUIRE(x.has_value());
        CHECK((*x)(1) > 100 * (*x)(0));
    }
}

TEST_CASE("integerize keeps the ray and clears denominators")
{
    VectorXq x(3);
    x << Rational(1) / 2, Rational(-3) / 4, Rational(5);
    const VectorXz z = integerize(x);
    CHECK(z(0) == 2);
    CHECK(z(1) == -3);
    CHECK(z(2) == 20);
}

TEST_CASE("chamber counts for the full complement")
{
    for (int n : {3, 4}) {
        const Arrangement arr = build_arrangement(n);
        const ChamberSet set = enumerate_chambers(arr, false);
        CHECK(Integer(set.chambers.size()) == region_count(arr));
    }
}

TEST_CASE("full n = 5 enumeration against Zaslavsky and the orbit expansion")
{
    const Arrangement arr = build_arrangement(5);
    const ChamberSet full = enumerate_chambers(arr, false);
    CHECK(full.chambers.size() == 2592);

    const ChamberSet restricted = enumerate_chambers(arr, true);
    CHECK(restricted.chambers.size() == 81);

    // The 2^5 sign flips of the 81 restricted chambers partition the full
    // set: the action is free and every orbit meets F exactly once.
    std::set<std::string> expanded;
    for (const Chamber& c : restricted.chambers) {
        for (std::uint64_t w = 0; w < 32; ++w) {
            const Chamber moved = weyl_act(arr, w, c);
            CHECK(expanded.insert(moved.sign_string()).second);  // freeness
        }
    }
    std::set<std::string> everything;
    for (const Chamber& c : full.chambers) everything.insert(c.sign_string());
    CHECK(expanded == everything);
}

TEST_CASE("restricted counts match the division for n = 4, 5")
{
    for (int n : {4, 5}) {
        const Arrangement arr = build_arrangement(n);
        const ChamberSet restricted = enumerate_chambers(arr, true);
        CHECK(Integer(restricted.chambers.size()) * (Integer(1) << n) == region_count(arr));
        for (const Chamber& c : restricted.chambers)
            for (Eigen::Index k = 0; k < c.witness.size(); ++k) CHECK(c.witness[k] > 0);
    }
    CHECK(enumerate_chambers(build_arrangement(4), true).chambers.size() == 12);
}

TEST_CASE("witnesses reproduce their sign vectors")
{
    for (int n : {4, 5}) {
        const Arrangement arr = build_arrangement(n);
        for (const Chamber& c : enumerate_chambers(arr, true).chambers)
            CHECK(signs_at(arr, c.witness) == c.signs);
    }
}

TEST_CASE("parallel enumeration is deterministic")
{
    const Arrangement arr = build_arrangement(5);
    const ChamberSet one = enumerate_chambers(arr, true, 1);
    const ChamberSet two = enumerate_chambers(arr, true, 2);
    REQUIRE(one.chambers.size() == two.chambers.size());
    for (std::size_t k = 0; k < one.chambers.size(); ++k)
        CHECK(one.chambers[k].signs == two.chambers[k].signs);
    CHECK(one.edges == two.edges);
}

TEST_CASE("the sign-flip action composes by symmetric difference")
{
    const Arrangement arr = build_arrangement(4);
    const ChamberSet set = enumerate_chambers(arr, true);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Chamber& c = set.chambers[rng() % set.chambers.size()];
        const std::uint64_t a = rng() % 16, b = rng() % 16;
        const Chamber lhs = weyl_act(arr, a, weyl_act(arr, b, c));
        const Chamber rhs = weyl_act(arr, a ^ b, c);
        CHECK(lhs.sign_string() == rhs.sign_string());
    }
}

namespace {

/// Independent facet test: {wall normal . theta = 0} plus the shared strict
/// signs, decided by eliminating one variable through the wall equation.
bool shares_full_facet(const Arrangement& arr, const Chamber& a, const Chamber& b, int wall)
{
    const int n = arr.n;
    const NormalVector& w = arr.hyperplanes[static_cast<std::size_t>(wall)].normal;
    int pivot = -1;
    for (int k = 0; k < n; ++k)
        if (w[k] != 0) { pivot = k; break; }
    REQUIRE(pivot >= 0);

    MatrixXq rows(arr.size() - 1, n - 1);
    int r = 0;
    for (int j = 0; j < arr.size(); ++j) {
        if (j == wall) continue;
        REQUIRE(a.signs[static_cast<std::size_t>(j)] == b.signs[static_cast<std::size_t>(j)]);
        const std::int64_t sign = a.signs[static_cast<std::size_t>(j)] ? 1 : -1;
        const NormalVector& m = arr.hyperplanes[static_cast<std::size_t>(j)].normal;
        // Substitute theta_pivot = -(sum_{k != pivot} w_k theta_k)/w_pivot.
        int col = 0;
        for (int k = 0; k < n; ++k) {
            if (k == pivot) continue;
            rows(r, col) = Rational(sign) *
                           (Rational(m[k]) - Rational(m[pivot]) * Rational(w[k]) / Rational(w[pivot]));
            ++col;
        }
        ++r;
    }
    return strict_feasible(rows).has_value();
}

}  // namespace

TEST_CASE("flip adjacency coincides with the equality-system facet test at n = 4")
{
    const Arrangement arr = build_arrangement(4);
    const ChamberSet set = enumerate_chambers(arr, true);
    std::set<std::pair<int, int>> edge_pairs;
    for (const auto& [a, b, h] : set.edges) {
        (void)h;
        edge_pairs.insert({a, b});
    }

    const int count = static_cast<int>(set.chambers.size());
    for (int a = 0; a < count; ++a) {
        for (int b = a + 1; b < count; ++b) {
            int differ = -1, hamming = 0;
            for (std::size_t j = 0; j < set.chambers[static_cast<std::size_t>(a)].signs.size(); ++j) {
                if (set.chambers[static_cast<std::size_t>(a)].signs[j] !=
                    set.chambers[static_cast<std::size_t>(b)].signs[j]) {
                    ++hamming;
                    differ = static_cast<int>(j);
                }
            }
            if (hamming != 1) continue;
            const bool facet = shares_full_facet(arr, set.chambers[static_cast<std::size_t>(a)],
                                                 set.chambers[static_cast<std::size_t>(b)], differ);
            CHECK(facet == edge_pairs.contains({a, b}));
            CHECK(facet);  // realizable Hamming-1 pairs always share a facet
        }
    }
}
