#include "hyperpoly/charpoly.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace hyperpoly {

Integer CharPoly::eval(const Integer& q) const
{
    Integer acc(0);
    for (const Integer& c : coeffs) acc = acc * q + c;
    return acc;
}

namespace {

constexpr int kMaxDim = 12;

using FlatRow = std::array<std::int64_t, kMaxDim>;

/// Primitive integer row-echelon basis of a normal span. Rows are fully
/// reduced at each other's lead columns, primitive, with positive leading
/// entry, so the row list is a canonical form for the subspace it spans.
struct FlatBasis {
    int n = 0;
    std::vector<FlatRow> rows;
    std::vector<int> leads;

    int rank() const { return static_cast<int>(rows.size()); }
};

std::int64_t row_gcd(const FlatRow& r, int n)
{
    std::int64_t g = 0;
    for (int k = 0; k < n; ++k) g = std::gcd(g, r[k]);
    return g;
}

void make_primitive_positive(FlatRow& r, int n)
{
    std::int64_t g = row_gcd(r, n);
    if (g == 0) return;
    std::int64_t lead = 0;
    for (int k = 0; k < n; ++k)
        if (r[k] != 0) { lead = r[k]; break; }
    if (lead < 0) g = -g;
    for (int k = 0; k < n; ++k) r[k] /= g;
}

/// Reduce v against the basis; returns true iff v is in the span.
bool reduce_row(const FlatBasis& basis, FlatRow& v)
{
    const int n = basis.n;
    for (int r = 0; r < basis.rank(); ++r) {
        const int c = basis.leads[static_cast<std::size_t>(r)];
        if (v[static_cast<std::size_t>(c)] == 0) continue;
        const std::int64_t a = basis.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        const std::int64_t b = v[static_cast<std::size_t>(c)];
        for (int k = 0; k < n; ++k)
            v[static_cast<std::size_t>(k)] =
                a * v[static_cast<std::size_t>(k)] -
                b * basis.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
        make_primitive_positive(v, n);
    }
    for (int k = 0; k < n; ++k)
        if (v[static_cast<std::size_t>(k)] != 0) return false;
    return true;
}

/// Extend by one independent vector, restoring the canonical form.
FlatBasis extend_basis(const FlatBasis& basis, const NormalVector& normal)
{
    const int n = basis.n;
    FlatRow v{};
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = normal[k];
    if (reduce_row(basis, v))
        throw std::runtime_error("extend_basis: vector already in span");

    int lead = 0;
    while (v[static_cast<std::size_t>(lead)] == 0) ++lead;

    FlatBasis out = basis;
    std::size_t pos = 0;
    while (pos < out.leads.size() && out.leads[pos] < lead) ++pos;
    out.rows.insert(out.rows.begin() + static_cast<std::ptrdiff_t>(pos), v);
    out.leads.insert(out.leads.begin() + static_cast<std::ptrdiff_t>(pos), lead);

    // Clear the new lead column from the other rows.
    for (std::size_t r = 0; r < out.rows.size(); ++r) {
        if (r == pos) continue;
        FlatRow& row = out.rows[r];
        if (row[static_cast<std::size_t>(lead)] == 0) continue;
        const std::int64_t a = v[static_cast<std::size_t>(lead)];
        const std::int64_t b = row[static_cast<std::size_t>(lead)];
        for (int k = 0; k < n; ++k)
            row[static_cast<std::size_t>(k)] =
                a * row[static_cast<std::size_t>(k)] - b * v[static_cast<std::size_t>(k)];
        make_primitive_positive(row, n);
    }
    return out;
}

std::vector<std::int64_t> basis_key(const FlatBasis& b)
{
    std::vector<std::int64_t> key;
    key.reserve(static_cast<std::size_t>(b.rank() * b.n) + 1);
    key.push_back(b.rank());
    for (const FlatRow& r : b.rows)
        for (int k = 0; k < b.n; ++k) key.push_back(r[static_cast<std::size_t>(k)]);
    return key;
}

struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const
    {
        std::size_t h = 1469598103934665603ull;
        for (const std::int64_t x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

using Mask = std::vector<std::uint64_t>;

bool mask_subset(const Mask& a, const Mask& b)
{
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

struct Flat {
    FlatBasis basis;
    Mask mask;
    int rank = 0;
    std::int64_t mobius = 0;
};

std::vector<Flat> intersection_poset(const Arrangement& arr)
{
    const int n = arr.n;
    if (n > kMaxDim) throw std::invalid_argument("intersection poset: dimension too large");
    const int m = arr.size();
    const std::size_t words = static_cast<std::size_t>((m + 63) / 64);

    auto full_mask = [&](const FlatBasis& basis) {
        Mask mask(words, 0);
        for (int j = 0; j < m; ++j) {
            FlatRow v{};
            for (int k = 0; k < n; ++k)
                v[static_cast<std::size_t>(k)] = arr.hyperplanes[static_cast<std::size_t>(j)].normal[k];
            if (reduce_row(basis, v))
                mask[static_cast<std::size_t>(j) / 64] |= 1ull << (j % 64);
        }
        return mask;
    };

    std::vector<Flat> flats;
    std::unordered_map<std::vector<std::int64_t>, int, KeyHash> seen;

    Flat ambient;
    ambient.basis.n = n;
    ambient.mask.assign(words, 0);
    ambient.rank = 0;
    flats.push_back(ambient);
    seen.emplace(basis_key(ambient.basis), 0);

    std::size_t level_begin = 0, level_end = 1;
    for (int depth = 0; depth < n; ++depth) {
        for (std::size_t f = level_begin; f < level_end; ++f) {
            for (int j = 0; j < m; ++j) {
                if (flats[f].mask[static_cast<std::size_t>(j) / 64] >> (j % 64) & 1) continue;
                FlatBasis extended =
                    extend_basis(flats[f].basis, arr.hyperplanes[static_cast<std::size_t>(j)].normal);
                auto key = basis_key(extended);
                if (seen.contains(key)) continue;
                Flat next;
                next.rank = flats[f].rank + 1;
                next.mask = full_mask(extended);
                next.basis = std::move(extended);
                seen.emplace(std::move(key), static_cast<int>(flats.size()));
                flats.push_back(std::move(next));
            }
        }
        level_begin = level_end;
        level_end = flats.size();
        if (level_begin == level_end) break;
    }

    std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.mask < b.mask;
    });
    return flats;
}

void fill_mobius(std::vector<Flat>& flats)
{
    for (std::size_t i = 0; i < flats.size(); ++i) {
        if (flats[i].rank == 0) {
            flats[i].mobius = 1;
            continue;
        }
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (flats[j].rank >= flats[i].rank) break;
            if (mask_subset(flats[j].mask, flats[i].mask)) acc += flats[j].mobius;
        }
        flats[i].mobius = -acc;
    }
}

}  // namespace

std::size_t flat_count(const Arrangement& arr) { return intersection_poset(arr).size(); }

CharPoly char_poly_poset(const Arrangement& arr)
{
    std::vector<Flat> flats = intersection_poset(arr);
    fill_mobius(flats);

    CharPoly chi;
    chi.degree = arr.n;
    chi.coeffs.assign(static_cast<std::size_t>(arr.n) + 1, Integer(0));
    for (const Flat& f : flats) chi.coeffs[static_cast<std::size_t>(f.rank)] += f.mobius;

    if (chi.coeffs[0] != 1) throw std::runtime_error("char_poly: not monic");
    if (chi.coeffs[1] != -Integer(arr.size()))
        throw std::runtime_error("char_poly: hyperplane count mismatch in q^{n-1} coefficient");
    return chi;
}

std::uint64_t complement_count_bruteforce(const Arrangement& arr, std::uint32_t q)
{
    const int n = arr.n, m = arr.size();
    std::vector<std::int32_t> normals(static_cast<std::size_t>(m * n));
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < n; ++k)
            normals[static_cast<std::size_t>(j * n + k)] =
                static_cast<std::int32_t>(arr.hyperplanes[static_cast<std::size_t>(j)].normal[k]);

    std::vector<std::uint32_t> point(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    while (true) {
        bool on_wall = false;
        for (int j = 0; j < m && !on_wall; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < n; ++k)
                s += static_cast<std::int64_t>(normals[static_cast<std::size_t>(j * n + k)]) *
                     point[static_cast<std::size_t>(k)];
            if (((s % q) + q) % q == 0) on_wall = true;
        }
        if (!on_wall) ++count;

        int k = 0;
        while (k < n && point[static_cast<std::size_t>(k)] == q - 1) point[static_cast<std::size_t>(k++)] = 0;
        if (k == n) break;
        ++point[static_cast<std::size_t>(k)];
    }
    return count;
}

std::uint64_t complement_count_dp(int n, std::uint32_t q)
{
    if (q < 3 || q > 61 || q % 2 == 0)
        throw std::invalid_argument("complement_count_dp: need an odd prime 3 <= q <= 61");
    // State: the set {eps.theta mod q : eps in {+-1}^k} of signed partial
    // sums, as a bitmask over F_q. Coordinates are restricted to F_q^x.
    const std::uint64_t field_mask = (q == 64) ? ~0ull : ((1ull << q) - 1);
    auto rotate = [&](std::uint64_t s, std::uint32_t t) {
        t %= q;
        if (t == 0) return s;
        return ((s << t) | (s >> (q - t))) & field_mask;
    };

    std::unordered_map<std::uint64_t, std::uint64_t> states;
    states[1ull] = 1;  // the empty signed sum is 0
    for (int step = 0; step < n; ++step) {
        std::unordered_map<std::uint64_t, std::uint64_t> next;
        next.reserve(states.size() * 2);
        for (const auto& [s, c] : states) {
            for (std::uint32_t t = 1; t < q; ++t) {
                const std::uint64_t s2 = rotate(s, t) | rotate(s, q - t);
                next[s2] += c;
            }
        }
        states = std::move(next);
    }

    std::uint64_t total = 0;
    for (const auto& [s, c] : states)
        if (!(s & 1ull)) total += c;
    return total;
}

namespace {

bool is_prime(std::uint32_t x)
{
    if (x < 2) return false;
    for (std::uint32_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

}  // namespace

namespace {

/// Exact Lagrange fit of a degree-(pts-1) polynomial through the samples;
/// returns ascending rational coefficients.
std::vector<Rational> lagrange_fit(const std::vector<std::uint32_t>& x,
                                   const std::vector<Integer>& y, int pts)
{
    std::vector<Rational> poly(static_cast<std::size_t>(pts), Rational(0));
    for (int k = 0; k < pts; ++k) {
        std::vector<Rational> basis{Rational(1)};
        Rational denom(1);
        for (int j = 0; j < pts; ++j) {
            if (j == k) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t c = 0; c < basis.size(); ++c) {
                next[c] += basis[c] * Rational(-static_cast<std::int64_t>(x[static_cast<std::size_t>(j)]));
                next[c + 1] += basis[c];
            }
            basis = std::move(next);
            denom *= Rational(static_cast<std::int64_t>(x[static_cast<std::size_t>(k)])) -
                     Rational(static_cast<std::int64_t>(x[static_cast<std::size_t>(j)]));
        }
        const Rational scale = Rational(y[static_cast<std::size_t>(k)]) / denom;
        for (std::size_t c = 0; c < basis.size(); ++c) poly[c] += basis[c] * scale;
    }
    return poly;
}

}  // namespace

CharPoly char_poly_interpolated(const Arrangement& arr)
{
    const int n = arr.n;
    {
        // The signed-sum count is only meaningful for the full arrangement.
        const Arrangement reference = build_arrangement(n);
        if (arr.size() != reference.size())
            throw std::invalid_argument("char_poly_interpolated: not the full GIT arrangement");
    }

    // Small characteristics degenerate the intersection lattice (3 is bad
    // for n = 5; 3 and 5 for n = 6; isolated larger primes appear by n = 8),
    // so sample every prime in [2n+1, 61] and search for a fit that every
    // remaining sample confirms, dropping up to a few suspect primes.
    std::vector<std::uint32_t> primes;
    for (std::uint32_t q = static_cast<std::uint32_t>(2 * n + 1); q <= 61; ++q)
        if (is_prime(q)) primes.push_back(q);
    const int sample_count = static_cast<int>(primes.size());
    if (sample_count < n + 2)
        throw std::runtime_error("char_poly_interpolated: not enough primes below 61");

    // Counts are computed lazily: the clean fast path touches only the
    // first n+3 primes, and the wider sweep runs only when needed.
    std::vector<Integer> values(primes.size());
    std::vector<bool> have(primes.size(), false);
    const auto value_at = [&](int idx) -> const Integer& {
        if (!have[static_cast<std::size_t>(idx)]) {
            values[static_cast<std::size_t>(idx)] =
                Integer(complement_count_dp(n, primes[static_cast<std::size_t>(idx)]));
            have[static_cast<std::size_t>(idx)] = true;
        }
        return values[static_cast<std::size_t>(idx)];
    };

    const auto try_fit = [&](const std::vector<int>& keep) -> std::optional<CharPoly> {
        std::vector<std::uint32_t> x;
        std::vector<Integer> y;
        for (int idx : keep) {
            x.push_back(primes[static_cast<std::size_t>(idx)]);
            y.push_back(value_at(idx));
        }
        const std::vector<Rational> poly = lagrange_fit(x, y, n + 1);

        CharPoly chi;
        chi.degree = n;
        chi.coeffs.assign(static_cast<std::size_t>(n) + 1, Integer(0));
        for (int c = 0; c <= n; ++c) {
            const Rational& coeff = poly[static_cast<std::size_t>(n - c)];
            if (boost::multiprecision::denominator(coeff) != 1) return std::nullopt;
            chi.coeffs[static_cast<std::size_t>(c)] = Integer(boost::multiprecision::numerator(coeff));
        }
        if (chi.coeffs[0] != 1) return std::nullopt;
        if (chi.coeffs[1] != -Integer(arr.size())) return std::nullopt;
        if (chi.eval(Integer(1)) != 0) return std::nullopt;
        // Whitney coefficients alternate in sign.
        for (int c = 0; c <= n; ++c) {
            const Integer& co = chi.coeffs[static_cast<std::size_t>(c)];
            if (c % 2 == 0 && co <= 0) return std::nullopt;
            if (c % 2 == 1 && co >= 0) return std::nullopt;
        }
        // Every kept sample, fitted or spare, must match exactly.
        for (int idx : keep)
            if (chi.eval(Integer(primes[static_cast<std::size_t>(idx)])) != value_at(idx))
                return std::nullopt;
        return chi;
    };

    // Deterministic search: first the clean prefix of n+3 primes, then the
    // full sweep dropping 0, 1 or 2 suspect primes (smallest first). Every
    // fit must be confirmed by at least one spare sample.
    if (sample_count >= n + 3) {
        std::vector<int> prefix;
        for (int idx = 0; idx < n + 3; ++idx) prefix.push_back(idx);
        if (const auto chi = try_fit(prefix)) return *chi;
    }
    std::vector<std::vector<int>> drops{{}};
    for (int a = 0; a < sample_count; ++a) drops.push_back({a});
    for (int a = 0; a < sample_count; ++a)
        for (int b = a + 1; b < sample_count; ++b) drops.push_back({a, b});

    for (const auto& drop : drops) {
        std::vector<int> keep;
        for (int idx = 0; idx < sample_count; ++idx)
            if (std::find(drop.begin(), drop.end(), idx) == drop.end()) keep.push_back(idx);
        if (static_cast<int>(keep.size()) < n + 2) continue;
        if (const auto chi = try_fit(keep)) return *chi;
    }
    throw std::runtime_error("char_poly_interpolated: no fit confirmed by the sampled primes");
}

CharPoly char_poly(const Arrangement& arr)
{
    if (arr.n <= 6) return char_poly_poset(arr);
    return char_poly_interpolated(arr);
}

Integer region_count(const Arrangement& arr)
{
    const Integer at_minus_one = char_poly(arr).eval(Integer(-1));
    return at_minus_one < 0 ? Integer(-at_minus_one) : at_minus_one;
}

}  // namespace hyperpoly
