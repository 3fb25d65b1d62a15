#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperpoly/birational.hpp"
#include "hyperpoly/sigma.hpp"

using namespace hyperpoly;

namespace {

bool sets_equal(const std::vector<DimVector>& a, const std::vector<DimVector>& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!same_vector(a[k], b[k])) return false;  // both are sorted
    return true;
}

}  // namespace

TEST_CASE("Sigma_0(v) equals its closed form for n = 4..8")
{
    for (int n = 4; n <= 8; ++n) {
        const auto computed = sigma_set(n, StabilityParam::zero(n), StabilityParam::zero(n));
        const auto closed = sigma_zero_closed_form(n);
        CHECK(sets_equal(computed, closed));
    }
    // At n = 5 the closed form has the 6 simple roots, v, and the five v - e_i.
    CHECK(sigma_zero_closed_form(5).size() == 12);
    CHECK(sigma_zero_closed_form(4).size() == 6);
}

TEST_CASE("generic parameters keep only v")
{
    for (int n : {4, 5, 6}) {
        const StabilityParam theta = cplus_representative(n);
        const auto sigma = sigma_set(n, theta, StabilityParam::zero(n));
        REQUIRE(sigma.size() == 1);
        CHECK(same_vector(sigma[0], v_vector(n)));
    }
}

TEST_CASE("on the wall H_{1} the set is {alpha, beta, v}")
{
    const StabilityParam theta = StabilityParam::from_integers({4, 1, 1, 1, 1});
    const auto sigma = sigma_set(5, theta, StabilityParam::zero(5));
    REQUIRE(sigma.size() == 3);
    const DimVector alpha = e_vector(5, 0) + e_vector(5, 1);
    const DimVector beta = v_vector(5) - alpha;
    bool saw_alpha = false, saw_beta = false, saw_v = false;
    for (const DimVector& s : sigma) {
        if (same_vector(s, alpha)) saw_alpha = true;
        if (same_vector(s, beta)) saw_beta = true;
        if (same_vector(s, v_vector(5))) saw_v = true;
    }
    CHECK(saw_alpha);
    CHECK(saw_beta);
    CHECK(saw_v);
}

TEST_CASE("leaf census")
{
    CHECK(leaves(4).size() == 2);
    CHECK(leaves(5).size() == 7);
    CHECK(leaves(6).size() == 23);

    for (int n : {4, 5, 6}) {
        const auto all = leaves(n);
        int open_leaves = 0;
        std::int64_t previous_codim = -1;
        for (const auto& leaf : all) {
            CHECK(leaf.codimension + leaf.dimension == 2 * n - 6);
            if (leaf.zero_leaf) {
                CHECK(leaf.dimension == 0);
            } else {
                CHECK(leaf.index_size() <= n - 4);
                CHECK(leaf.codimension == 2 * leaf.index_size());
                CHECK(leaf.slice == "(C^2/Z_2)^" + std::to_string(leaf.index_size()));
                CHECK(leaf.codimension >= previous_codim);  // sorted by |I|
                previous_codim = leaf.codimension;
            }
            if (leaf.codimension == 0) ++open_leaves;
            CHECK_NOTHROW(leaf.rep_type.check_sums_to_v(n));
        }
        CHECK(open_leaves == 1);
    }
}

TEST_CASE("n=5 leaf dimensions")
{
    const auto all = leaves(5);
    int dim4 = 0, dim2 = 0, dim0 = 0;
    for (const auto& leaf : all) {
        if (leaf.dimension == 4) ++dim4;
        if (leaf.dimension == 2) ++dim2;
        if (leaf.dimension == 0) ++dim0;
    }
    CHECK(dim4 == 1);  // open leaf
    CHECK(dim2 == 5);  // L_{i}, codimension 2
    CHECK(dim0 == 1);  // origin
}

TEST_CASE("every leaf type decomposes v into members of Sigma_0(v)")
{
    for (int n : {4, 5, 6}) {
        const auto closed = sigma_zero_closed_form(n);
        auto member = [&](const DimVector& r) {
            for (const DimVector& s : closed)
                if (same_vector(r, s)) return true;
            return false;
        };
        for (const auto& leaf : leaves(n))
            for (const auto& [root, mult] : leaf.rep_type.parts) {
                (void)mult;
                CHECK(member(root));
            }
    }
}

TEST_CASE("leaf representation types")
{
    const auto all = leaves(6);
    for (const auto& leaf : all) {
        if (leaf.zero_leaf) {
            REQUIRE(leaf.rep_type.parts.size() == 7);
            CHECK(leaf.rep_type.parts[0].second == 2);  // (e_0, 2; e_1, 1; ...)
        } else {
            REQUIRE(leaf.rep_type.parts.size() == 1 + static_cast<std::size_t>(leaf.index_size()));
            CHECK(same_vector(leaf.rep_type.parts[0].first, v_upper(6, leaf.index_set)));
        }
    }
}
