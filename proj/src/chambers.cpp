#include "hyperpoly/chambers.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "hyperpoly/lp.hpp"

namespace hyperpoly {

std::string Chamber::sign_string() const
{
    std::string s(signs.size(), '+');
    for (std::size_t k = 0; k < signs.size(); ++k)
        if (!signs[k]) s[k] = '-';
    return s;
}

std::vector<std::uint8_t> signs_at(const Arrangement& arr, const VectorXz& point)
{
    std::vector<std::uint8_t> out(static_cast<std::size_t>(arr.size()));
    for (int j = 0; j < arr.size(); ++j) {
        const NormalVector& normal = arr.hyperplanes[static_cast<std::size_t>(j)].normal;
        Integer s(0);
        for (int k = 0; k < arr.n; ++k) {
            if (normal[k] == 1) s += point[k];
            else if (normal[k] == -1) s -= point[k];
        }
        if (s == 0) throw std::runtime_error("signs_at: point lies on " +
                                             arr.hyperplanes[static_cast<std::size_t>(j)].label());
        out[static_cast<std::size_t>(j)] = s > 0 ? 1 : 0;
    }
    return out;
}

namespace {

Integer dot_normal(const NormalVector& normal, const VectorXz& point)
{
    Integer s(0);
    for (Eigen::Index k = 0; k < normal.size(); ++k) {
        if (normal[k] == 1) s += point[k];
        else if (normal[k] == -1) s -= point[k];
    }
    return s;
}

VectorXz gcd_normalize(VectorXz v)
{
    Integer g(0);
    for (Eigen::Index k = 0; k < v.size(); ++k) g = boost::multiprecision::gcd(g, v[k]);
    if (g > 1)
        for (Eigen::Index k = 0; k < v.size(); ++k) v[k] /= g;
    return v;
}

/// Cheap probe for the neighbour across wall h: step a little beyond the
/// orthogonal projection of the witness onto the wall and check the signs.
/// Returns an integer point realizing `target`, or an empty vector.
VectorXz reflected_probe(const Arrangement& arr, const VectorXz& witness, int h,
                         const std::vector<std::uint8_t>& target)
{
    const NormalVector& normal = arr.hyperplanes[static_cast<std::size_t>(h)].normal;
    Integer c(0);
    for (Eigen::Index k = 0; k < normal.size(); ++k) c += normal[k] * normal[k];
    const Integer a = dot_normal(normal, witness);

    // candidate = d*c*witness - (d + num)*a*normal, an integer multiple of
    // witness - (1 + num/d)(a/c) normal; lambda = num/d shrinks geometrically.
    static const std::int64_t kLambdaDen[] = {2, 16, 1024, 1048576};
    for (const std::int64_t d : kLambdaDen) {
        VectorXz cand(witness.size());
        for (Eigen::Index k = 0; k < witness.size(); ++k)
            cand[k] = Integer(d) * c * witness[k] - Integer(d + 1) * a * Integer(normal[k]);
        bool ok = true;
        for (int j = 0; j < arr.size() && ok; ++j) {
            const Integer s = dot_normal(arr.hyperplanes[static_cast<std::size_t>(j)].normal, cand);
            const bool positive = s > 0;
            if (s == 0 || positive != static_cast<bool>(target[static_cast<std::size_t>(j)]))
                ok = false;
        }
        if (ok) return gcd_normalize(std::move(cand));
    }
    return VectorXz();
}

/// Full feasibility check of a sign vector; returns a witness or empty.
VectorXz solve_sign_vector(const Arrangement& arr, const std::vector<std::uint8_t>& target)
{
    MatrixXq rows(arr.size(), arr.n);
    for (int j = 0; j < arr.size(); ++j) {
        const NormalVector& normal = arr.hyperplanes[static_cast<std::size_t>(j)].normal;
        const std::int64_t sign = target[static_cast<std::size_t>(j)] ? 1 : -1;
        for (int k = 0; k < arr.n; ++k) rows(j, k) = Rational(sign * normal[k]);
    }
    const auto x = feasible_point(rows);
    if (!x) return VectorXz();
    return integerize(*x);
}

using SignKey = std::vector<std::uint64_t>;

SignKey key_of(const std::vector<std::uint8_t>& signs)
{
    SignKey key((signs.size() + 63) / 64, 0);
    for (std::size_t k = 0; k < signs.size(); ++k)
        if (signs[k]) key[k / 64] |= 1ull << (k % 64);
    return key;
}

struct SignKeyHash {
    std::size_t operator()(const SignKey& k) const
    {
        std::size_t h = 1469598103934665603ull;
        for (const std::uint64_t w : k) {
            h ^= static_cast<std::size_t>(w);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

ChamberSet enumerate_chambers(const Arrangement& arr, bool restrict_to_F, int jobs,
                              const std::function<void(std::size_t)>& progress)
{
    const int n = arr.n;
    if (jobs < 1) jobs = 1;

    // Candidate walls to cross: inside F the coordinate walls are the
    // boundary of the orthant and the all-ones wall cannot vanish there.
    std::vector<int> crossable;
    const std::uint64_t full = (1ull << n) - 1;
    for (int j = 0; j < arr.size(); ++j) {
        const Hyperplane& h = arr.hyperplanes[static_cast<std::size_t>(j)];
        if (restrict_to_F && h.kind == Hyperplane::Kind::Coordinate) continue;
        if (restrict_to_F && h.kind == Hyperplane::Kind::Balanced && h.subset == full) continue;
        crossable.push_back(j);
    }

    // Seed: (n, 1, ..., 1) lies in C_+ and is generic for every n >= 3.
    VectorXz seed(n);
    seed[0] = n;
    for (int k = 1; k < n; ++k) seed[k] = 1;

    struct Node {
        std::vector<std::uint8_t> signs;
        VectorXz witness;
    };

    std::vector<Node> nodes;
    std::unordered_map<SignKey, int, SignKeyHash> seen;
    std::vector<std::tuple<int, int, int>> raw_edges;
    std::mutex lock;

    nodes.push_back({signs_at(arr, seed), seed});
    seen.emplace(key_of(nodes[0].signs), 0);

    std::size_t frontier_begin = 0;
    while (frontier_begin < nodes.size()) {
        const std::size_t frontier_end = nodes.size();

        struct Found {
            int from;
            int wall;
            std::vector<std::uint8_t> signs;
            VectorXz witness;
            bool fresh;  // witness found by probe/LP; false when already known
        };
        std::vector<Found> found;

        auto process = [&](std::size_t begin, std::size_t end, std::vector<Found>& out) {
            for (std::size_t f = begin; f < end; ++f) {
                const Node node = [&] {
                    std::scoped_lock g(lock);
                    return nodes[f];
                }();
                for (const int h : crossable) {
                    std::vector<std::uint8_t> target = node.signs;
                    target[static_cast<std::size_t>(h)] ^= 1;
                    {
                        std::scoped_lock g(lock);
                        if (seen.contains(key_of(target))) {
                            out.push_back({static_cast<int>(f), h, std::move(target), VectorXz(), false});
                            continue;
                        }
                    }
                    VectorXz witness = reflected_probe(arr, node.witness, h, target);
                    if (witness.size() == 0) witness = solve_sign_vector(arr, target);
                    if (witness.size() == 0) continue;  // wall is not a facet here
                    out.push_back({static_cast<int>(f), h, std::move(target), std::move(witness), true});
                }
            }
        };

        if (jobs == 1 || frontier_end - frontier_begin < 8) {
            process(frontier_begin, frontier_end, found);
        } else {
            std::vector<std::vector<Found>> buckets(static_cast<std::size_t>(jobs));
            std::vector<std::thread> workers;
            const std::size_t span = frontier_end - frontier_begin;
            for (int t = 0; t < jobs; ++t) {
                const std::size_t lo = frontier_begin + span * static_cast<std::size_t>(t) /
                                                            static_cast<std::size_t>(jobs);
                const std::size_t hi = frontier_begin + span * static_cast<std::size_t>(t + 1) /
                                                            static_cast<std::size_t>(jobs);
                workers.emplace_back(process, lo, hi, std::ref(buckets[static_cast<std::size_t>(t)]));
            }
            for (auto& w : workers) w.join();
            for (auto& b : buckets)
                for (auto& item : b) found.push_back(std::move(item));
        }

        for (auto& item : found) {
            const SignKey key = key_of(item.signs);
            auto it = seen.find(key);
            int to;
            if (it == seen.end()) {
                if (!item.fresh) continue;  // neighbour was claimed by a probe that then lost it
                to = static_cast<int>(nodes.size());
                nodes.push_back({std::move(item.signs), std::move(item.witness)});
                seen.emplace(key, to);
            } else {
                to = it->second;
            }
            raw_edges.emplace_back(item.from, to, item.wall);
        }

        frontier_begin = frontier_end;
        if (progress) progress(nodes.size());
    }

    // Deterministic output: chambers sorted by sign vector, edges re-indexed.
    std::vector<int> order(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return nodes[static_cast<std::size_t>(a)].signs < nodes[static_cast<std::size_t>(b)].signs;
    });
    std::vector<int> rank(nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    ChamberSet out;
    out.chambers.reserve(nodes.size());
    for (const int idx : order) {
        Chamber c;
        c.signs = nodes[static_cast<std::size_t>(idx)].signs;
        c.witness = nodes[static_cast<std::size_t>(idx)].witness;
        out.chambers.push_back(std::move(c));
    }
    std::vector<std::tuple<int, int, int>> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [a, b, h] : raw_edges) {
        int ra = rank[static_cast<std::size_t>(a)], rb = rank[static_cast<std::size_t>(b)];
        if (ra > rb) std::swap(ra, rb);
        if (ra != rb) edges.emplace_back(ra, rb, h);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.edges = std::move(edges);
    return out;
}

StabilityParam weyl_act(std::uint64_t flips, const StabilityParam& theta)
{
    VectorXq coords = theta.coords();
    for (int i = 0; i < theta.n(); ++i)
        if (flips >> i & 1) coords[i] = -coords[i];
    return StabilityParam(std::move(coords));
}

VectorXz weyl_act(std::uint64_t flips, const VectorXz& point)
{
    VectorXz out = point;
    for (Eigen::Index i = 0; i < point.size(); ++i)
        if (flips >> i & 1) out[i] = -out[i];
    return out;
}

Chamber weyl_act(const Arrangement& arr, std::uint64_t flips, const Chamber& chamber)
{
    Chamber out;
    out.witness = weyl_act(flips, chamber.witness);
    out.signs = signs_at(arr, out.witness);
    return out;
}

}  // namespace hyperpoly
