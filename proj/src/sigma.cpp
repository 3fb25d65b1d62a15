#include "hyperpoly/sigma.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperpoly {

void RepresentationType::check_sums_to_v(int n) const
{
    DimVector sum = DimVector::Zero(n + 1);
    for (const auto& [root, mult] : parts) {
        if (mult <= 0) throw std::runtime_error("representation type: nonpositive multiplicity");
        sum += mult * root;
    }
    if (!same_vector(sum, v_vector(n)))
        throw std::runtime_error("representation type does not sum to v");
}

namespace {

/// True iff some proper decomposition of alpha into parts drawn from
/// candidates[first..] has total p-value >= p(alpha). Parts repeat freely;
/// candidates must all be strictly below alpha componentwise.
bool violating_decomposition(const DimVector& alpha, std::int64_t p_alpha,
                             const std::vector<const DimVector*>& candidates,
                             std::size_t first, DimVector& remaining, std::int64_t p_sum)
{
    bool done = true;
    for (Eigen::Index k = 0; k < remaining.size(); ++k)
        if (remaining[k] != 0) { done = false; break; }
    if (done) return p_sum >= p_alpha;

    for (std::size_t idx = first; idx < candidates.size(); ++idx) {
        const DimVector& part = *candidates[idx];
        bool fits = true;
        for (Eigen::Index k = 0; k < remaining.size(); ++k)
            if (part[k] > remaining[k]) { fits = false; break; }
        if (!fits) continue;
        remaining -= part;
        const bool bad = violating_decomposition(alpha, p_alpha, candidates, idx, remaining,
                                                 p_sum + p_value(part));
        remaining += part;
        if (bad) return true;
    }
    return false;
}

}  // namespace

std::vector<DimVector> sigma_set(int n, const StabilityParam& theta, const StabilityParam& lambda)
{
    if (theta.n() != n || lambda.n() != n)
        throw std::invalid_argument("sigma_set: parameter length mismatch");

    const auto all_roots = enumerate_roots_below_v(n);
    std::vector<DimVector> kernel_roots;
    for (const auto& [root, cls] : all_roots) {
        (void)cls;
        if (theta.dot(root) == 0 && lambda.dot(root) == 0) kernel_roots.push_back(root);
    }

    std::vector<DimVector> result;
    for (const DimVector& alpha : kernel_roots) {
        std::vector<const DimVector*> below;
        for (const DimVector& r : kernel_roots) {
            bool lt = true, eq = true;
            for (Eigen::Index k = 0; k <= n; ++k) {
                if (r[k] > alpha[k]) { lt = false; break; }
                if (r[k] != alpha[k]) eq = false;
            }
            if (lt && !eq) below.push_back(&r);
        }
        DimVector remaining = alpha;
        if (!violating_decomposition(alpha, p_value(alpha), below, 0, remaining, 0))
            result.push_back(alpha);
    }
    std::sort(result.begin(), result.end(), [](const DimVector& a, const DimVector& b) {
        return DimVectorLess{}(a, b);
    });
    return result;
}

std::vector<DimVector> sigma_zero_closed_form(int n)
{
    std::vector<DimVector> out;
    for (int i = 0; i <= n; ++i) out.push_back(e_vector(n, i));
    const std::uint64_t full = (1ull << n) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (n - __builtin_popcountll(mask) >= 4) out.push_back(v_upper(n, mask));
    }
    std::sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
        return DimVectorLess{}(a, b);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const DimVector& a, const DimVector& b) { return same_vector(a, b); }),
              out.end());
    return out;
}

int LeafDescriptor::index_size() const { return __builtin_popcountll(index_set); }

std::vector<LeafDescriptor> leaves(int n)
{
    if (n < 4) throw std::invalid_argument("leaves: need n >= 4");
    std::vector<LeafDescriptor> out;
    const std::int64_t total_dim = hyperpolygon_dimension(n);

    std::vector<std::uint64_t> subsets;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask)
        if (__builtin_popcountll(mask) <= n - 4) subsets.push_back(mask);
    std::sort(subsets.begin(), subsets.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });

    for (const std::uint64_t mask : subsets) {
        LeafDescriptor leaf;
        leaf.index_set = mask;
        const int size = __builtin_popcountll(mask);
        leaf.codimension = 2 * size;
        leaf.dimension = total_dim - leaf.codimension;
        leaf.slice = "(C^2/Z_2)^" + std::to_string(size);
        leaf.rep_type.parts.emplace_back(v_upper(n, mask), 1);
        for (int i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1) leaf.rep_type.parts.emplace_back(e_vector(n, i), 1);
        leaf.rep_type.check_sums_to_v(n);
        out.push_back(std::move(leaf));
    }

    LeafDescriptor zero;
    zero.zero_leaf = true;
    zero.dimension = 0;
    zero.codimension = total_dim;
    zero.slice = "X_n(0)";
    zero.rep_type.parts.emplace_back(e_vector(n, 0), 2);
    for (int i = 1; i <= n; ++i) zero.rep_type.parts.emplace_back(e_vector(n, i), 1);
    zero.rep_type.check_sums_to_v(n);
    out.push_back(std::move(zero));
    return out;
}

}  // namespace hyperpoly
