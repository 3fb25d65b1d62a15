#include "hyperpoly/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperpoly {

const char* to_string(RootClass c)
{
    switch (c) {
        case RootClass::Real: return "real";
        case RootClass::Isotropic: return "isotropic";
        case RootClass::Anisotropic: return "anisotropic";
        case RootClass::NotARoot: return "not-a-root";
    }
    return "?";
}

DimVector v_vector(int n)
{
    if (n < 1) throw std::invalid_argument("v_vector: need n >= 1");
    DimVector v = DimVector::Ones(n + 1);
    v[0] = 2;
    return v;
}

DimVector e_vector(int n, int i)
{
    if (i < 0 || i > n) throw std::invalid_argument("e_vector: vertex index out of range");
    DimVector e = DimVector::Zero(n + 1);
    e[i] = 1;
    return e;
}

DimVector v_upper(int n, std::uint64_t subset)
{
    DimVector a = v_vector(n);
    for (int i = 1; i <= n; ++i)
        if (subset >> (i - 1) & 1) a[i] -= 1;
    return a;
}

static void require_same_length(const DimVector& a, const DimVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dimension vectors have different lengths");
}

std::int64_t cartan_pair(const DimVector& alpha, const DimVector& beta)
{
    require_same_length(alpha, beta);
    const int n = external_count(alpha);
    std::int64_t s = 0;
    for (int i = 0; i <= n; ++i) s += 2 * alpha[i] * beta[i];
    for (int j = 1; j <= n; ++j) s -= alpha[0] * beta[j] + alpha[j] * beta[0];
    return s;
}

std::int64_t p_value(const DimVector& alpha)
{
    const std::int64_t q = cartan_pair(alpha, alpha);
    // (alpha,alpha) is always even for integer vectors.
    return 1 - q / 2;
}

DimVector simple_reflection(int i, const DimVector& alpha)
{
    const int n = external_count(alpha);
    if (i < 0 || i > n) throw std::invalid_argument("simple_reflection: vertex index out of range");
    DimVector out = alpha;
    out[i] -= cartan_pair(alpha, e_vector(n, i));
    return out;
}

bool connected_support(const DimVector& alpha)
{
    const int n = external_count(alpha);
    if (alpha[0] != 0) return true;
    int external = 0;
    for (int i = 1; i <= n; ++i)
        if (alpha[i] != 0) ++external;
    return external == 1;
}

bool descends_to_simple(DimVector alpha, int max_steps)
{
    const int n = external_count(alpha);
    for (int step = 0; step < max_steps; ++step) {
        std::int64_t height = 0;
        bool simple = true, nonneg = true;
        for (int i = 0; i <= n; ++i) {
            if (alpha[i] < 0) nonneg = false;
            height += alpha[i];
        }
        if (!nonneg) return false;
        simple = (height == 1);
        if (simple) return true;

        int pick = -1;
        for (int i = 0; i <= n; ++i) {
            if (cartan_pair(alpha, e_vector(n, i)) > 0) { pick = i; break; }
        }
        if (pick < 0) return false;  // fundamental region: imaginary
        alpha = simple_reflection(pick, alpha);
    }
    return false;
}

RootClass classify_root(const DimVector& alpha)
{
    const int n = external_count(alpha);
    const DimVector v = v_vector(n);
    bool zero = true;
    for (int i = 0; i <= n; ++i) {
        if (alpha[i] < 0 || alpha[i] > v[i])
            throw std::invalid_argument("classify_root: alpha outside [0, v]");
        if (alpha[i] != 0) zero = false;
    }
    if (zero) throw std::invalid_argument("classify_root: alpha = 0");

    if (!connected_support(alpha)) return RootClass::NotARoot;

    // alpha = v^I exactly when the central entry is 2.
    if (alpha[0] == 2) {
        int missing = 0;  // |I|
        for (int i = 1; i <= n; ++i)
            if (alpha[i] == 0) ++missing;
        if (missing >= n - 2) return RootClass::NotARoot;
        if (n - missing > 4) return RootClass::Anisotropic;
        if (n - missing == 4) return RootClass::Isotropic;
    }

    if (!descends_to_simple(alpha, 10 * (n + 1)))
        throw std::runtime_error("classify_root: reflection descent failed on a real verdict");
    return RootClass::Real;
}

std::vector<std::pair<DimVector, RootClass>> enumerate_roots_below_v(int n)
{
    if (n < 3) throw std::invalid_argument("enumerate_roots_below_v: need n >= 3");
    std::vector<std::pair<DimVector, RootClass>> out;
    const std::uint64_t full = (n >= 64) ? ~0ull : ((1ull << n) - 1);
    // Walk candidates 0 < alpha <= v in lexicographic order: central entry
    // first, then the external pattern as a bitmask read from vertex 1 up.
    for (std::int64_t a0 = 0; a0 <= 2; ++a0) {
        for (std::uint64_t pattern = 0; pattern <= full; ++pattern) {
            if (a0 == 0 && pattern == 0) continue;
            DimVector alpha = DimVector::Zero(n + 1);
            alpha[0] = a0;
            for (int i = 1; i <= n; ++i) alpha[i] = (pattern >> (i - 1)) & 1;
            const RootClass c = classify_root(alpha);
            if (c != RootClass::NotARoot) out.emplace_back(std::move(alpha), c);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return DimVectorLess{}(x.first, y.first); });
    return out;
}

std::int64_t hyperpolygon_dimension(int n)
{
    if (n < 3) throw std::invalid_argument("hyperpolygon_dimension: need n >= 3");
    const std::int64_t d = 2 * static_cast<std::int64_t>(n) - 6;
    if (d != 2 * p_value(v_vector(n)))
        throw std::runtime_error("hyperpolygon_dimension: 2p(v) != 2n-6");
    return d;
}

}  // namespace hyperpoly
