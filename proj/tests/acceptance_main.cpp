#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperpoly/birational.hpp"
#include "hyperpoly/charpoly.hpp"
#include "hyperpoly/group_g.hpp"

/**
 * @file acceptance_main.cpp
 * @brief End-to-end acceptance gates, one line per criterion.
 *
 * Run with no arguments for all ten criteria, or pass a criterion number.
 * Exit status is zero iff every selected criterion passes.
 */

using namespace hyperpoly;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int number;
    std::string description;
    bool pass;
    std::string detail;
};

Criterion criterion_1()
{
    const auto start = Clock::now();
    const std::vector<std::vector<std::int64_t>> expected{
        {1, -12, 50, -84, 45},
        {1, -21, 170, -650, 1125, -625},
        {1, -38, 607, -5100, 22935, -48750, 30345},
    };
    bool pass = true;
    std::ostringstream detail;
    for (int n = 4; n <= 6; ++n) {
        const CharPoly chi = char_poly_poset(build_arrangement(n));
        bool match = chi.degree == n;
        for (int c = 0; match && c <= n; ++c)
            match = chi.coeffs[static_cast<std::size_t>(c)] ==
                    expected[static_cast<std::size_t>(n - 4)][static_cast<std::size_t>(c)];
        if (!match) pass = false;
        detail << "n=" << n << (match ? " exact" : " MISMATCH") << "; ";
    }
    detail << std::fixed << std::setprecision(2) << seconds_since(start) << "s";
    return {1, "characteristic polynomials reproduce the published values exactly", pass,
            detail.str()};
}

Criterion criterion_2()
{
    const std::vector<Integer> expected{Integer(192), Integer(2592), Integer(107776)};
    bool pass = true;
    std::ostringstream detail;
    for (int n = 4; n <= 6; ++n) {
        const Integer regions = region_count(build_arrangement(n));
        const bool match = regions == expected[static_cast<std::size_t>(n - 4)];
        if (!match) pass = false;
        detail << "n=" << n << ": " << regions << (match ? "" : " MISMATCH") << "; ";
    }
    return {2, "region counts |chi(-1)| equal 192 / 2592 / 107776", pass, detail.str()};
}

Criterion criterion_3()
{
    const auto start = Clock::now();
    const std::vector<Integer> expected{Integer(1), Integer(81), Integer(1684)};
    bool pass = true;
    std::ostringstream detail;
    for (int n = 4; n <= 6; ++n) {
        const ResolutionCount division = count_resolutions(n);
        const ChamberSet enumerated = enumerate_chambers(build_arrangement(n), true, 2);
        const Integer direct(enumerated.chambers.size());
        const bool methods_agree = division.in_F == direct;
        const bool value = direct == expected[static_cast<std::size_t>(n - 4)];
        if (!methods_agree || !value) pass = false;
        detail << "n=" << n << ": division=" << division.in_F << " enumeration=" << direct
               << " agree=" << (methods_agree ? "yes" : "NO") << " expected="
               << expected[static_cast<std::size_t>(n - 4)] << (value ? "" : " <- MISMATCH")
               << "; ";
    }
    detail << std::fixed << std::setprecision(1) << seconds_since(start) << "s";
    return {3, "chambers in F equal 1 / 81 / 1684 by division and direct enumeration", pass,
            detail.str()};
}

Criterion criterion_4()
{
    bool pass = true;
    std::ostringstream detail;
    for (int n = 4; n <= 8; ++n) {
        const auto computed = sigma_set(n, StabilityParam::zero(n), StabilityParam::zero(n));
        const auto closed = sigma_zero_closed_form(n);
        bool equal = computed.size() == closed.size();
        for (std::size_t k = 0; equal && k < computed.size(); ++k)
            equal = same_vector(computed[k], closed[k]);
        if (!equal) pass = false;
        detail << "n=" << n << ": " << computed.size() << (equal ? "" : " MISMATCH") << "; ";
    }
    return {4, "Sigma_0(v) equals its closed form for n = 4..8 (exact set equality)", pass,
            detail.str()};
}

Criterion criterion_5()
{
    const std::vector<std::size_t> expected{2, 7, 23};
    bool pass = true;
    std::ostringstream detail;
    for (int n = 4; n <= 6; ++n) {
        const auto all = leaves(n);
        bool ok = all.size() == expected[static_cast<std::size_t>(n - 4)];
        for (const auto& leaf : all) {
            if (leaf.zero_leaf) {
                ok = ok && leaf.dimension == 0 && leaf.codimension == 2 * n - 6;
            } else {
                ok = ok && leaf.codimension == 2 * leaf.index_size() &&
                     leaf.slice == "(C^2/Z_2)^" + std::to_string(leaf.index_size());
            }
        }
        if (!ok) pass = false;
        detail << "n=" << n << ": " << all.size() << " leaves" << (ok ? "" : " MISMATCH") << "; ";
    }
    return {5, "leaf census 2 / 7 / 23 with codimension 2|I| and slices (C^2/Z_2)^{|I|}", pass,
            detail.str()};
}

Criterion criterion_6()
{
    bool pass = true;
    std::ostringstream detail;
    for (int n = 4; n <= 8; ++n) {
        int walls = 0;
        bool ok = true;
        for (const Hyperplane& h : build_arrangement(n).hyperplanes) {
            if (h.kind != Hyperplane::Kind::Balanced) continue;
            ++walls;
            const WallReport report = wall_report(n, h);
            ok = ok && p_value(report.alpha) == 0 && p_value(report.beta) == 0 &&
                 report.pairing == 2 - n;
        }
        if (!ok) pass = false;
        detail << "n=" << n << ": " << walls << " walls" << (ok ? "" : " MISMATCH") << "; ";
    }
    return {6, "every balanced wall has p(alpha) = p(beta) = 0 and (alpha,beta) = 2-n", pass,
            detail.str()};
}

Criterion criterion_7()
{
    bool pass = true;
    std::ostringstream detail;
    for (int n = 4; n <= 8; ++n) {
        try {
            const PoincarePoly poly = poincare_poly(n);  // divisibility asserted inside
            const bool ok = poly.coeffs.size() >= 2 && poly.coeffs[1] == n;
            if (!ok) pass = false;
            detail << "n=" << n << ": b2=" << poly.coeffs[1] << (ok ? "" : " MISMATCH") << "; ";
        } catch (const std::exception& e) {
            pass = false;
            detail << "n=" << n << ": " << e.what() << "; ";
        }
    }
    return {7, "Poincare polynomial: exact division by 1-t^2 and t^2 coefficient n", pass,
            detail.str()};
}

Criterion criterion_8()
{
    const auto start = Clock::now();
    bool pass = true;
    std::ostringstream detail;
    int checked = 0;
    for (int n : {4, 5, 6}) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const QuiverRep rep = sample_moment_zero_rep(n, seed);
            const PfaffianTable table = pfaffian_table(rep);
            if (!verify_plucker(table) || !verify_moment_relations(table)) pass = false;
            const Matrix2q g = random_sl2(seed + 1000 * static_cast<std::uint64_t>(n));
            const PfaffianTable moved = pfaffian_table(sl2_transform(rep, g));
            for (int r = 0; r < 2 * n && pass; ++r)
                for (int c = 0; c < 2 * n; ++c)
                    if (moved.values(r, c) != table.values(r, c)) { pass = false; break; }
            ++checked;
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) pass = false;
    std::ostringstream d;
    d << checked << " fibre points over n in {4,5,6}; " << std::fixed << std::setprecision(2)
      << elapsed << "s (budget 10s)";
    (void)detail;
    return {8, "Plucker, moment and SL2-invariance relations hold on 100 seeds per n", pass,
            d.str()};
}

Criterion criterion_9()
{
    bool pass = true;
    std::string detail;
    try {
        const GroupCertificate cert = group_certificate();
        pass = cert.pass();
        detail = std::string("order/centre/commutator/abelianisation ") +
                 (cert.order_32 && cert.centre_is_pm_identity && cert.commutator_is_pm_identity &&
                          cert.abelianisation_z2_4
                      ? "ok"
                      : "BAD") +
                 "; gamma image " + (cert.image_diagonal_z2_4 ? "diagonal Z_2^4" : "BAD") +
                 "; psi plucker " + (cert.psi.plucker ? "ok" : "BAD") + "; psi orthogonality " +
                 (cert.psi.orthogonality ? "ok" : "BAD");
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    return {9, "group certificate: |G| = 32, centre = [G,G] = {+-1}, Ab = Z_2^4, psi identities",
            pass, detail};
}

Criterion criterion_10()
{
    bool pass = true;
    std::ostringstream detail;

    // Free sign-flip action: expanding the chambers in F by all flips must
    // produce 2^n distinct chambers per orbit, covering the region count.
    for (int n : {4, 5}) {
        const Arrangement arr = build_arrangement(n);
        const ChamberSet restricted = enumerate_chambers(arr, true);
        std::set<std::string> orbit_union;
        bool free_action = true;
        for (const Chamber& c : restricted.chambers)
            for (std::uint64_t w = 0; w < (1ull << n); ++w)
                if (!orbit_union.insert(weyl_act(arr, w, c).sign_string()).second)
                    free_action = false;
        const bool covers = Integer(orbit_union.size()) == region_count(arr);
        if (!free_action || !covers) pass = false;
        detail << "n=" << n << " freeness " << (free_action ? "ok" : "BAD") << ", cover "
               << (covers ? "ok" : "BAD") << "; ";
    }

    // Witness consistency.
    for (int n : {4, 5}) {
        const Arrangement arr = build_arrangement(n);
        for (const Chamber& c : enumerate_chambers(arr, true).chambers)
            if (signs_at(arr, c.witness) != c.signs) pass = false;
    }
    detail << "witnesses ok; ";

    // Irreducibility.
    for (int n : {4, 5, 6})
        if (!is_irreducible(build_arrangement(n))) pass = false;
    detail << "irreducible n=4,5,6; ";

    // Refinement with the promised witness at n = 5.
    const RefinementReport report = refinement_check(5);
    bool witness_ok = report.refines && report.extra_normal.has_value() &&
                      report.extra_u.has_value();
    if (witness_ok) {
        const DimVector expected_u = [&] {
            DimVector u = DimVector::Zero(6);
            u[0] = 2;
            u[1] = u[2] = u[3] = 1;
            return u;
        }();
        witness_ok = same_vector(*report.extra_u, expected_u);
        const NormalVector& w = *report.extra_normal;
        for (int k = 0; k < 5; ++k)
            if (w[k] != (k >= 3 ? 1 : 0)) witness_ok = false;
    }
    if (!witness_ok) pass = false;
    detail << "refinement witness u=(2,1,1,1,0,0) " << (witness_ok ? "ok" : "BAD");

    return {10, "property suites: free orbits, witness consistency, irreducibility, refinement",
            pass, detail.str()};
}

}  // namespace

int main(int argc, char** argv)
{
    int selected = 0;
    if (argc > 1) {
        selected = std::atoi(argv[1]);
        if (selected < 1 || selected > 10) {
            std::cerr << "usage: " << argv[0] << " [criterion 1..10]\n";
            return 2;
        }
    }

    using Runner = Criterion (*)();
    const Runner runners[] = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                              criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};

    bool all_pass = true;
    for (int k = 1; k <= 10; ++k) {
        if (selected != 0 && k != selected) continue;
        const Criterion result = runners[k - 1]();
        all_pass = all_pass && result.pass;
        std::cout << "criterion " << std::setw(2) << result.number << ": "
                  << (result.pass ? "PASS" : "FAIL") << " - " << result.description << "\n";
        if (!result.detail.empty()) std::cout << "              " << result.detail << "\n";
    }
    return all_pass ? 0 : 1;
}
