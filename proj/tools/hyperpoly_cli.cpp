#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hyperpoly/json_io.hpp"

/**
 * @file hyperpoly_cli.cpp
 * @brief Command-line surface over the library, one subcommand per
 *        operation, JSON (default) or text output.
 *
 * Exit codes: 0 success, 1 verification failure, 2 input error.
 */

using namespace hyperpoly;

namespace {

enum class Format { Json, Text };

struct Options {
    int n = 5;
    Format format = Format::Json;
    bool classify = false;
    bool in_f = false;
    int seeds = 100;
    int degree = 4;
    int jobs = 1;
    std::string theta;
    std::string wall;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

StabilityParam parse_theta(const std::string& text, int n)
{
    VectorXq coords(n);
    std::size_t pos = 0;
    for (int i = 0; i < n; ++i) {
        const std::size_t comma = text.find(',', pos);
        const std::string token =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        if (token.empty()) throw std::invalid_argument("theta: expected " + std::to_string(n) + " entries");
        coords(i) = parse_rational(token);
        if (comma == std::string::npos) {
            if (i + 1 != n)
                throw std::invalid_argument("theta: expected " + std::to_string(n) + " entries");
            pos = text.size();
        } else {
            pos = comma + 1;
        }
    }
    if (pos != text.size() && pos != text.size() + 1)
        throw std::invalid_argument("theta: trailing input");
    return StabilityParam(std::move(coords));
}

std::string poly_string(const CharPoly& chi)
{
    std::string s;
    for (int k = 0; k <= chi.degree; ++k) {
        const Integer& c = chi.coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const int power = chi.degree - k;
        std::string term = c < 0 ? " - " : (s.empty() ? "" : " + ");
        Integer mag = c < 0 ? Integer(-c) : c;
        if (mag != 1 || power == 0) term += mag.str();
        if (power > 0) {
            if (mag != 1) term += "*";
            term += "q";
            if (power > 1) term += "^" + std::to_string(power);
        }
        s += term;
    }
    return s;
}

int run_roots(const Options& opt)
{
    if (opt.n == 3)
        std::cerr << "warning: n = 3 sits below the stable range (dimension 2n-6 = 0); "
                     "output is the formal root list\n";
    const auto roots = enumerate_roots_below_v(opt.n);
    Json params;
    params["classify"] = opt.classify;
    Json list = Json::array();
    for (const auto& [root, cls] : roots) {
        Json item;
        item["vector"] = to_json(root);
        if (opt.classify) item["class"] = to_string(cls);
        list.push_back(std::move(item));
    }
    Json result;
    result["count"] = roots.size();
    result["roots"] = std::move(list);
    if (opt.format == Format::Json) {
        emit(envelope("roots", opt.n, std::move(params), std::move(result)));
    } else {
        std::cout << roots.size() << " roots below v for n = " << opt.n << "\n";
        for (const auto& [root, cls] : roots) {
            std::cout << "(";
            for (Eigen::Index k = 0; k < root.size(); ++k)
                std::cout << root[k] << (k + 1 < root.size() ? "," : "");
            std::cout << ")";
            if (opt.classify) std::cout << "  " << to_string(cls);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_leaves(const Options& opt)
{
    const auto all = leaves(opt.n);
    Json list = Json::array();
    for (const auto& leaf : all) list.push_back(to_json(leaf));
    Json result;
    result["count"] = all.size();
    result["leaves"] = std::move(list);
    if (opt.format == Format::Json) {
        emit(envelope("leaves", opt.n, Json::object(), std::move(result)));
    } else {
        std::cout << all.size() << " symplectic leaves of X_" << opt.n << "(0)\n";
        for (const auto& leaf : all) {
            if (leaf.zero_leaf) std::cout << "L_0 (origin)";
            else {
                std::cout << "L_{";
                bool first = true;
                for (int i = 0; i < 64; ++i)
                    if (leaf.index_set >> i & 1) {
                        std::cout << (first ? "" : ",") << (i + 1);
                        first = false;
                    }
                std::cout << "}";
            }
            std::cout << "  dim " << leaf.dimension << "  codim " << leaf.codimension
                      << "  slice " << leaf.slice << "\n";
        }
    }
    return 0;
}

int run_charpoly(const Options& opt)
{
    const Arrangement arr = build_arrangement(opt.n);
    const CharPoly chi = char_poly(arr);
    Json result = to_json(chi);
    result["hyperplanes"] = arr.size();
    result["regions"] = to_json(region_count(arr));
    if (opt.format == Format::Json) {
        emit(envelope("charpoly", opt.n, Json::object(), std::move(result)));
    } else {
        std::cout << "chi(q) = " << poly_string(chi) << "\n"
                  << "hyperplanes: " << arr.size() << "\n"
                  << "regions |chi(-1)|: " << region_count(arr).str() << "\n";
    }
    return 0;
}

int run_count(const Options& opt)
{
    const ResolutionCount count = count_resolutions(opt.n);
    Json result;
    result["regions"] = to_json(count.regions);
    result["in_F"] = to_json(count.in_F);
    if (opt.format == Format::Json) {
        emit(envelope("count", opt.n, Json::object(), std::move(result)));
    } else {
        std::cout << "regions: " << count.regions.str() << "\n"
                  << "chambers in F (regions / 2^n): " << count.in_F.str() << "\n";
    }
    return 0;
}

int run_chambers(const Options& opt)
{
    const Arrangement arr = build_arrangement(opt.n);
    const bool noisy = opt.n >= 6;
    std::size_t last_report = 0;
    const auto progress = [&](std::size_t found) {
        if (noisy && found - last_report >= 256) {
            std::cerr << "chambers found: " << found << "\n";
            last_report = found;
        }
    };
    const ChamberSet set = enumerate_chambers(arr, opt.in_f, opt.jobs, progress);
    Json params;
    params["in_F"] = opt.in_f;
    Json result = to_json(set);
    result["restricted"] = opt.in_f;
    if (opt.format == Format::Json) {
        emit(envelope("chambers", opt.n, std::move(params), std::move(result)));
    } else {
        std::cout << set.chambers.size() << (opt.in_f ? " chambers in F" : " chambers") << "\n";
        for (const Chamber& c : set.chambers) {
            std::cout << c.sign_string() << "  [";
            for (Eigen::Index k = 0; k < c.witness.size(); ++k)
                std::cout << c.witness[k] << (k + 1 < c.witness.size() ? "," : "");
            std::cout << "]\n";
        }
    }
    return 0;
}

int run_graph(const Options& opt)
{
    const Arrangement arr = build_arrangement(opt.n);
    const ResolutionGraph graph = resolution_graph(opt.n, opt.jobs);
    if (opt.format == Format::Json) {
        emit(envelope("graph", opt.n, Json::object(), to_json(graph, arr)));
    } else {
        std::cout << "vertices: " << graph.vertex_count() << "\nedges: " << graph.edge_count()
                  << "\n";
        for (const auto& [a, b, h] : graph.base.edges)
            std::cout << a << " " << b << " "
                      << arr.hyperplanes[static_cast<std::size_t>(h)].label() << "\n";
    }
    return 0;
}

int run_classify(const Options& opt)
{
    const Arrangement arr = build_arrangement(opt.n);
    const StabilityParam theta = parse_theta(opt.theta, opt.n);
    const ThetaClass verdict = classify_theta(arr, theta);
    Json params;
    params["theta"] = to_json(theta);
    Json result;
    result["generic"] = verdict.generic;
    Json walls = Json::array();
    for (const int w : verdict.walls)
        walls.push_back(arr.hyperplanes[static_cast<std::size_t>(w)].label());
    result["walls"] = std::move(walls);
    if (opt.format == Format::Json) {
        emit(envelope("classify", opt.n, std::move(params), std::move(result)));
    } else {
        if (verdict.generic) std::cout << "generic\n";
        else {
            std::cout << "on " << verdict.walls.size() << " wall(s):";
            for (const int w : verdict.walls)
                std::cout << " " << arr.hyperplanes[static_cast<std::size_t>(w)].label();
            std::cout << "\n";
        }
    }
    return 0;
}

int run_wall(const Options& opt)
{
    const Arrangement arr = build_arrangement(opt.n);
    const int idx = arr.index_of(opt.wall);
    const WallReport report = wall_report(opt.n, arr.hyperplanes[static_cast<std::size_t>(idx)]);
    Json params;
    params["wall"] = opt.wall;
    if (opt.format == Format::Json) {
        emit(envelope("wall", opt.n, std::move(params), to_json(report)));
    } else {
        std::cout << report.label << ": "
                  << (report.kind == WallReport::Kind::Flop ? "flop wall" : "boundary wall")
                  << "\nlocal model: " << report.local_model << "\n";
        if (report.kind == WallReport::Kind::Flop)
            std::cout << "pairing (alpha,beta) = " << report.pairing << "\n";
    }
    return 0;
}

int run_poincare(const Options& opt)
{
    const PoincarePoly poly = poincare_poly(opt.n);
    if (opt.format == Format::Json) {
        emit(envelope("poincare", opt.n, Json::object(), to_json(poly)));
    } else {
        std::cout << "P(t) = ";
        bool first = true;
        for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
            if (poly.coeffs[k] == 0) continue;
            if (!first) std::cout << " + ";
            std::cout << poly.coeffs[k].str();
            if (k == 1) std::cout << "*t^2";
            else if (k > 1) std::cout << "*t^" << 2 * k;
            first = false;
        }
        std::cout << "\n";
    }
    return 0;
}

int run_verify(const Options& opt)
{
    const IsomorphismCertificate cert = verify_isomorphism_certificate(opt.seeds, opt.degree);
    Json params;
    params["seeds"] = opt.seeds;
    params["degree"] = opt.degree;
    if (opt.format == Format::Json) {
        emit(envelope("verify", cert.n, std::move(params), to_json(cert)));
    } else {
        const auto line = [](const char* name, bool ok) {
            std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
        };
        line("group facts (order, centre, commutator, abelianisation)",
             cert.group.order_32 && cert.group.centre_is_pm_identity &&
                 cert.group.commutator_is_pm_identity && cert.group.abelianisation_z2_4);
        line("gamma homomorphism and diagonal Z_2^4 image",
             cert.group.gamma_homomorphism && cert.group.image_diagonal_z2_4);
        line("psi plucker relations", cert.group.psi.plucker);
        line("psi orthogonality relations", cert.group.psi.orthogonality);
        line("phi plucker relations on sampled fibre points", cert.phi_plucker);
        line("phi moment relations on sampled fibre points", cert.phi_moment);
        line("phi SL2 invariance", cert.phi_sl2_invariance);
        line("invariant monomial parity correspondence", cert.monomial_parity);
        std::cout << (cert.pass() ? "certificate PASS" : "certificate FAIL") << "\n";
    }
    return cert.pass() ? 0 : 1;
}

int run_nakajima(const Options& opt)
{
    const auto normals = nakajima_arrangement(opt.n);
    const RefinementReport report = refinement_check(opt.n);
    Json result;
    result["count"] = normals.size();
    result["refines"] = report.refines;
    if (report.extra_normal) {
        Json extra;
        Json nvec = Json::array();
        for (Eigen::Index k = 0; k < report.extra_normal->size(); ++k)
            nvec.push_back((*report.extra_normal)[k]);
        extra["normal"] = std::move(nvec);
        if (report.extra_u) extra["u"] = to_json(*report.extra_u);
        result["extra_wall"] = std::move(extra);
    } else {
        result["extra_wall"] = nullptr;
    }
    if (opt.format == Format::Json) {
        emit(envelope("nakajima", opt.n, Json::object(), std::move(result)));
    } else {
        std::cout << "hyperplanes in the finer decomposition: " << normals.size() << "\n"
                  << "refines the GIT arrangement: " << (report.refines ? "yes" : "no") << "\n";
        if (report.extra_normal) {
            std::cout << "wall absent from the GIT arrangement: normal (";
            for (Eigen::Index k = 0; k < report.extra_normal->size(); ++k)
                std::cout << (*report.extra_normal)[k]
                          << (k + 1 < report.extra_normal->size() ? "," : "");
            std::cout << ")\n";
        }
    }
    return report.refines ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations for star-quiver hyperpolygon spaces: roots, the GIT "
                 "hyperplane arrangement, chamber counts, wall crossings and the order-32 "
                 "group certificate"};
    app.require_subcommand(1);

    Options opt;
    std::string command;

    const auto add_common = [&](CLI::App* sub, int min_n) {
        sub->add_option("--n", opt.n, "number of external vertices")->check(CLI::Range(min_n, 12));
        sub->add_option("--format", [&](const std::vector<std::string>& v) {
            if (v[0] == "json") opt.format = Format::Json;
            else if (v[0] == "text") opt.format = Format::Text;
            else throw CLI::ValidationError("--format must be json or text");
            return true;
        }, "output format: json (default) or text");
        sub->add_option("--jobs", opt.jobs, "worker threads for chamber search")
            ->check(CLI::Range(1, 64));
    };

    auto* roots = app.add_subcommand("roots", "roots below the dimension vector v");
    add_common(roots, 3);
    roots->add_flag("--classify", opt.classify, "attach root classes");
    roots->callback([&] { command = "roots"; });

    auto* leaves_cmd = app.add_subcommand("leaves", "symplectic leaves of the affine cone");
    add_common(leaves_cmd, 4);
    leaves_cmd->callback([&] { command = "leaves"; });

    auto* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial of the arrangement");
    add_common(charpoly_cmd, 3);
    charpoly_cmd->callback([&] { command = "charpoly"; });

    auto* count = app.add_subcommand("count", "region count and chambers in F by division");
    add_common(count, 4);
    count->callback([&] { command = "count"; });

    auto* chambers_cmd = app.add_subcommand("chambers", "enumerate chambers with exact witnesses");
    add_common(chambers_cmd, 3);
    chambers_cmd->add_flag("--in-F", opt.in_f, "restrict to the open positive orthant");
    chambers_cmd->callback([&] { command = "chambers"; });

    auto* graph = app.add_subcommand("graph", "wall-crossing graph of the chambers in F");
    add_common(graph, 4);
    graph->callback([&] { command = "graph"; });

    auto* classify = app.add_subcommand("classify", "locate a parameter relative to the walls");
    add_common(classify, 3);
    classify->add_option("--theta", opt.theta, "comma-separated exact rationals p/q")->required();
    classify->callback([&] { command = "classify"; });

    auto* wall = app.add_subcommand("wall", "wall-crossing report for one hyperplane");
    add_common(wall, 4);
    wall->add_option("id", opt.wall, "wall label, e.g. L3 or H{1,4}")->required();
    wall->callback([&] { command = "wall"; });

    auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of a resolution");
    add_common(poincare, 4);
    poincare->callback([&] { command = "poincare"; });

    auto* verify = app.add_subcommand("verify", "isomorphism certificate for n = 5");
    add_common(verify, 5);
    verify->add_option("--seeds", opt.seeds, "number of sampled fibre points")
        ->check(CLI::Range(1, 100000));
    verify->add_option("--degree", opt.degree, "monomial degree bound")->check(CLI::Range(1, 6));
    verify->callback([&] { command = "verify"; });

    auto* nakajima = app.add_subcommand("nakajima", "finer chamber decomposition and refinement check");
    add_common(nakajima, 4);
    nakajima->callback([&] { command = "nakajima"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (command == "roots") return run_roots(opt);
        if (command == "leaves") return run_leaves(opt);
        if (command == "charpoly") return run_charpoly(opt);
        if (command == "count") return run_count(opt);
        if (command == "chambers") return run_chambers(opt);
        if (command == "graph") return run_graph(opt);
        if (command == "classify") return run_classify(opt);
        if (command == "wall") return run_wall(opt);
        if (command == "poincare") return run_poincare(opt);
        if (command == "verify") return run_verify(opt);
        if (command == "nakajima") return run_nakajima(opt);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
}
