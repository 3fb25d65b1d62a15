#include "hyperpoly/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hyperpoly/roots.hpp"

namespace hyperpoly {

std::string Hyperplane::label() const
{
    if (kind == Kind::Coordinate) return "L" + std::to_string(coordinate);
    std::string s = "H{";
    bool first = true;
    for (int i = 0; i < 64; ++i) {
        if (subset >> i & 1) {
            if (!first) s += ',';
            s += std::to_string(i + 1);
            first = false;
        }
    }
    s += '}';
    return s;
}

Rational Hyperplane::value_at(const StabilityParam& theta) const
{
    Rational s(0);
    for (Eigen::Index k = 0; k < normal.size(); ++k) {
        if (normal[k] == 0) continue;
        s += Rational(normal[k]) * theta.coords()[k];
    }
    return s;
}

int Arrangement::index_of(const std::string& label) const
{
    for (int i = 0; i < size(); ++i)
        if (hyperplanes[static_cast<std::size_t>(i)].label() == label) return i;
    throw std::invalid_argument("no hyperplane labelled '" + label + "'");
}

Arrangement build_arrangement(int n)
{
    if (n < 3) throw std::invalid_argument("build_arrangement: need n >= 3");
    if (n > 30) throw std::invalid_argument("build_arrangement: n too large");
    Arrangement arr;
    arr.n = n;

    for (int i = 1; i <= n; ++i) {
        Hyperplane h;
        h.kind = Hyperplane::Kind::Coordinate;
        h.coordinate = i;
        h.normal = NormalVector::Zero(n);
        h.normal[i - 1] = 1;
        arr.hyperplanes.push_back(std::move(h));
    }

    // Balanced walls H_I with 1 in I, normal +1 on I and -1 off it.
    for (std::uint64_t mask = 1; mask < (1ull << n); mask += 2) {
        Hyperplane h;
        h.kind = Hyperplane::Kind::Balanced;
        h.subset = mask;
        h.normal = NormalVector::Constant(n, -1);
        for (int i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1) h.normal[i - 1] = 1;
        arr.hyperplanes.push_back(std::move(h));
    }

    const std::size_t expected = static_cast<std::size_t>(n) + (1ull << (n - 1));
    if (arr.hyperplanes.size() != expected)
        throw std::runtime_error("build_arrangement: hyperplane count mismatch");
    return arr;
}

ThetaClass classify_theta(const Arrangement& arr, const StabilityParam& theta)
{
    if (theta.n() != arr.n) throw std::invalid_argument("classify_theta: dimension mismatch");
    ThetaClass out;
    for (int i = 0; i < arr.size(); ++i) {
        if (arr.hyperplanes[static_cast<std::size_t>(i)].value_at(theta) == 0)
            out.walls.push_back(i);
    }
    out.generic = out.walls.empty();
    return out;
}

bool is_irreducible(int n, const std::vector<NormalVector>& normals)
{
    if (n <= 1) return true;
    // A splitting assigns every coordinate to one of two blocks so that each
    // normal is supported inside a single block.
    for (std::uint64_t block = 1; block < (1ull << (n - 1)); ++block) {
        bool splits = true;
        for (const NormalVector& v : normals) {
            bool in_block = false, in_complement = false;
            for (int k = 0; k < n; ++k) {
                if (v[k] == 0) continue;
                if (block >> k & 1) in_block = true;
                else in_complement = true;
            }
            if (in_block && in_complement) { splits = false; break; }
        }
        if (splits) return false;
    }
    return true;
}

bool is_irreducible(const Arrangement& arr)
{
    std::vector<NormalVector> normals;
    normals.reserve(arr.hyperplanes.size());
    for (const Hyperplane& h : arr.hyperplanes) normals.push_back(h.normal);
    return is_irreducible(arr.n, normals);
}

namespace {

NormalVector normalize_primitive(NormalVector v)
{
    std::int64_t g = 0;
    for (Eigen::Index k = 0; k < v.size(); ++k) g = std::gcd(g, v[k]);
    if (g == 0) throw std::runtime_error("nakajima_arrangement: zero normal");
    std::int64_t lead = 0;
    for (Eigen::Index k = 0; k < v.size(); ++k)
        if (v[k] != 0) { lead = v[k]; break; }
    if (lead < 0) g = -g;
    for (Eigen::Index k = 0; k < v.size(); ++k) v[k] /= g;
    return v;
}

}  // namespace

std::vector<NormalVector> nakajima_arrangement(int n)
{
    if (n < 3) throw std::invalid_argument("nakajima_arrangement: need n >= 3");
    const DimVector v = v_vector(n);
    std::vector<NormalVector> normals;

    // Enumerate 0 < u < v and keep (u,u) <= 2. Projected to Q^n, the wall
    // {theta.v = theta.u = 0} has normal (2u_i - u_0)_{i=1..n}.
    for (std::int64_t u0 = 0; u0 <= 2; ++u0) {
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            DimVector u = DimVector::Zero(n + 1);
            u[0] = u0;
            for (int i = 1; i <= n; ++i) u[i] = (mask >> (i - 1)) & 1;
            bool zero = true, equal_v = true;
            for (int i = 0; i <= n; ++i) {
                if (u[i] != 0) zero = false;
                if (u[i] != v[i]) equal_v = false;
            }
            if (zero || equal_v) continue;
            if (cartan_pair(u, u) > 2) continue;
            NormalVector w(n);
            for (int i = 1; i <= n; ++i) w[i - 1] = 2 * u[i] - u0;
            normals.push_back(normalize_primitive(std::move(w)));
        }
    }

    std::sort(normals.begin(), normals.end(), [](const NormalVector& a, const NormalVector& b) {
        for (Eigen::Index k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) return a[k] < b[k];
        return false;
    });
    normals.erase(std::unique(normals.begin(), normals.end(),
                              [](const NormalVector& a, const NormalVector& b) {
                                  for (Eigen::Index k = 0; k < a.size(); ++k)
                                      if (a[k] != b[k]) return false;
                                  return true;
                              }),
                  normals.end());
    return normals;
}

RefinementReport refinement_check(int n)
{
    const Arrangement arr = build_arrangement(n);
    const std::vector<NormalVector> nak = nakajima_arrangement(n);

    auto same = [](const NormalVector& a, const NormalVector& b) {
        for (Eigen::Index k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) return false;
        return true;
    };
    auto present = [&](const NormalVector& v) {
        for (const NormalVector& w : nak)
            if (same(v, w)) return true;
        return false;
    };

    RefinementReport report;
    report.refines = true;
    for (const Hyperplane& h : arr.hyperplanes) {
        NormalVector v = normalize_primitive(h.normal);
        if (!present(v)) { report.refines = false; break; }
    }

    // Hunt for one wall of the finer decomposition that is not a GIT wall.
    std::vector<NormalVector> git_normals;
    for (const Hyperplane& h : arr.hyperplanes) git_normals.push_back(normalize_primitive(h.normal));
    for (const NormalVector& w : nak) {
        bool in_git = false;
        for (const NormalVector& g : git_normals)
            if (same(w, g)) { in_git = true; break; }
        if (!in_git) {
            report.extra_normal = w;
            break;
        }
    }
    if (report.extra_normal) {
        // Recover a witness u for the extra wall.
        for (std::int64_t u0 = 0; u0 <= 2 && !report.extra_u; ++u0) {
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                DimVector u = DimVector::Zero(n + 1);
                u[0] = u0;
                for (int i = 1; i <= n; ++i) u[i] = (mask >> (i - 1)) & 1;
                bool zero = true, equal_v = true;
                for (int i = 0; i <= n; ++i) {
                    if (u[i] != 0) zero = false;
                    if (u[i] != v_vector(n)[i]) equal_v = false;
                }
                if (zero || equal_v || cartan_pair(u, u) > 2) continue;
                NormalVector w(n);
                for (int i = 1; i <= n; ++i) w[i - 1] = 2 * u[i] - u0;
                if (same(normalize_primitive(std::move(w)), *report.extra_normal)) {
                    report.extra_u = u;
                    break;
                }
            }
        }
    }
    return report;
}

}  // namespace hyperpoly
