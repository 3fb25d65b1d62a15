#include "hyperpoly/birational.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "hyperpoly/charpoly.hpp"

namespace hyperpoly {

StabilityParam cplus_representative(int n)
{
    if (n < 3) throw std::invalid_argument("cplus_representative: need n >= 3");
    // (n, 1, ..., 1): theta_1 exceeds the rest by 1 and the total 2n-1 is
    // odd, so no balanced wall can vanish.
    std::vector<std::int64_t> coords(static_cast<std::size_t>(n), 1);
    coords[0] = n;
    StabilityParam theta = StabilityParam::from_integers(coords);
    if (!classify_theta(build_arrangement(n), theta).generic)
        throw std::runtime_error("cplus_representative: point is not generic");
    return theta;
}

bool in_F(const StabilityParam& theta)
{
    for (int i = 1; i <= theta.n(); ++i)
        if (theta[i] < 0) return false;
    return true;
}

std::pair<StabilityParam, std::uint64_t> fold_to_F(const StabilityParam& theta)
{
    VectorXq coords = theta.coords();
    std::uint64_t flips = 0;
    for (Eigen::Index i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0) {
            coords[i] = -coords[i];
            flips |= 1ull << i;
        }
    }
    return {StabilityParam(std::move(coords)), flips};
}

WallReport wall_report(int n, const Hyperplane& h)
{
    if (static_cast<int>(h.normal.size()) != n)
        throw std::invalid_argument("wall_report: hyperplane dimension mismatch");
    WallReport report;
    report.label = h.label();

    if (h.kind == Hyperplane::Kind::Balanced) {
        if (!(h.subset & 1) || h.subset >= (1ull << n))
            throw std::invalid_argument("wall_report: balanced wall not normalised for this n");
        report.kind = WallReport::Kind::Flop;
        DimVector alpha = e_vector(n, 0), beta = e_vector(n, 0);
        for (int i = 1; i <= n; ++i) {
            if (h.subset >> (i - 1) & 1) alpha[i] = 1;
            else beta[i] = 1;
        }
        if (p_value(alpha) != 0 || p_value(beta) != 0)
            throw std::runtime_error("wall_report: p(alpha) or p(beta) nonzero");
        const std::int64_t pairing = cartan_pair(alpha, beta);
        if (pairing != 2 - static_cast<std::int64_t>(n))
            throw std::runtime_error("wall_report: (alpha,beta) != 2-n");
        report.pairing = pairing;
        report.local_model = "T*P(V) flop, dim V = " + std::to_string(n - 2);
        report.sigma = {alpha, beta, v_vector(n)};
        report.alpha = std::move(alpha);
        report.beta = std::move(beta);
        return report;
    }

    const int i = h.coordinate;
    if (i < 1 || i > n) throw std::invalid_argument("wall_report: coordinate index out of range");
    report.kind = WallReport::Kind::Boundary;
    report.local_model =
        "C^" + std::to_string(2 * (n - 4)) + " x C^2/Z_2 divisorial contraction";
    RepresentationType open_type;
    open_type.parts.emplace_back(v_vector(n), 1);
    RepresentationType closed_type;
    closed_type.parts.emplace_back(v_vector(n) - e_vector(n, i), 1);
    closed_type.parts.emplace_back(e_vector(n, i), 1);
    open_type.check_sums_to_v(n);
    closed_type.check_sums_to_v(n);
    report.rep_types = {std::move(open_type), std::move(closed_type)};
    return report;
}

bool ResolutionGraph::connected() const
{
    const int v = vertex_count();
    if (v == 0) return true;
    std::vector<int> parent(static_cast<std::size_t>(v));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = v;
    for (const auto& [a, b, h] : base.edges) {
        (void)h;
        const int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[static_cast<std::size_t>(ra)] = rb;
            --components;
        }
    }
    return components == 1;
}

ResolutionGraph resolution_graph(int n, int jobs)
{
    if (n < 4) throw std::invalid_argument("resolution_graph: need n >= 4");
    const Arrangement arr = build_arrangement(n);
    ResolutionGraph graph;
    graph.base = enumerate_chambers(arr, /*restrict_to_F=*/true, jobs);
    for (const auto& [a, b, h] : graph.base.edges) {
        (void)a;
        (void)b;
        if (arr.hyperplanes[static_cast<std::size_t>(h)].kind != Hyperplane::Kind::Balanced)
            throw std::runtime_error("resolution_graph: crossed a coordinate wall inside F");
    }
    if (!graph.connected())
        throw std::runtime_error("resolution_graph: wall-crossing graph is disconnected");
    return graph;
}

ResolutionCount count_resolutions(int n)
{
    if (n < 4) throw std::invalid_argument("count_resolutions: need n >= 4");
    ResolutionCount out;
    out.regions = region_count(build_arrangement(n));
    const Integer group_order = Integer(1) << n;
    if (out.regions % group_order != 0)
        throw std::runtime_error(
            "count_resolutions: region count not divisible by 2^n; free action broken");
    out.in_F = out.regions / group_order;
    return out;
}

PoincarePoly poincare_poly(int n)
{
    if (n < 4) throw std::invalid_argument("poincare_poly: need n >= 4");
    // Numerator (1+u)^{n-1} - 2^{n-1} u^{n-2} with u = t^2.
    std::vector<Integer> numerator(static_cast<std::size_t>(n), Integer(0));
    Integer binom(1);
    for (int k = 0; k <= n - 1; ++k) {
        numerator[static_cast<std::size_t>(k)] = binom;
        binom = binom * (n - 1 - k) / (k + 1);
    }
    numerator[static_cast<std::size_t>(n - 2)] -= Integer(1) << (n - 1);

    // Exact division by 1-u: Q_k = N_k + Q_{k-1}; the final carry is the
    // remainder and must vanish.
    std::vector<Integer> quotient(static_cast<std::size_t>(n - 1), Integer(0));
    Integer carry(0);
    for (int k = 0; k <= n - 2; ++k) {
        carry += numerator[static_cast<std::size_t>(k)];
        quotient[static_cast<std::size_t>(k)] = carry;
    }
    if (carry + numerator[static_cast<std::size_t>(n - 1)] != 0)
        throw std::runtime_error("poincare_poly: numerator not divisible by 1-t^2");

    quotient[static_cast<std::size_t>(n - 2)] += 1;  // + t^{2(n-2)}
    while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();

    PoincarePoly poly;
    poly.coeffs = std::move(quotient);
    if (poly.coeffs.empty() || poly.coeffs[0] != 1)
        throw std::runtime_error("poincare_poly: constant term is not 1");
    if (poly.coeffs.size() < 2 || poly.coeffs[1] != n)
        throw std::runtime_error("poincare_poly: t^2 coefficient is not n");
    for (const Integer& c : poly.coeffs)
        if (c < 0) throw std::runtime_error("poincare_poly: negative coefficient");
    if (static_cast<int>(poly.coeffs.size()) - 1 > n - 3)
        throw std::runtime_error("poincare_poly: degree exceeds the dimension bound");
    return poly;
}

}  // namespace hyperpoly
