#include "hyperpoly/json_io.hpp"

namespace hyperpoly {

Json envelope(const std::string& command, int n, Json parameters, Json result)
{
    Json j;
    j["command"] = command;
    j["n"] = n;
    j["parameters"] = std::move(parameters);
    j["result"] = std::move(result);
    j["version"] = kVersion;
    return j;
}

Json to_json(const Integer& x)
{
    static const Integer lo = -(Integer(1) << 62), hi = Integer(1) << 62;
    if (x > lo && x < hi) return static_cast<std::int64_t>(x);
    return x.str();
}

Json to_json(const Rational& x)
{
    return x.str();
}

Json to_json(const DimVector& v)
{
    Json arr = Json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(v[k]);
    return arr;
}

Json to_json(const VectorXz& v)
{
    Json arr = Json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(to_json(v[k]));
    return arr;
}

Json to_json(const StabilityParam& theta)
{
    Json arr = Json::array();
    for (int i = 1; i <= theta.n(); ++i) arr.push_back(to_json(theta[i]));
    return arr;
}

Json to_json(const CharPoly& chi)
{
    Json j;
    j["degree"] = chi.degree;
    Json coeffs = Json::array();
    for (const Integer& c : chi.coeffs) coeffs.push_back(to_json(c));
    j["coefficients"] = std::move(coeffs);  // descending powers of q, monic
    return j;
}

Json to_json(const Chamber& chamber)
{
    Json j;
    j["signs"] = chamber.sign_string();
    j["witness"] = to_json(chamber.witness);
    return j;
}

Json to_json(const ChamberSet& set)
{
    Json j;
    j["count"] = set.chambers.size();
    Json chambers = Json::array();
    for (const Chamber& c : set.chambers) chambers.push_back(to_json(c));
    j["chambers"] = std::move(chambers);
    return j;
}

Json to_json(const RepresentationType& rep)
{
    Json parts = Json::array();
    for (const auto& [root, mult] : rep.parts) {
        Json p;
        p["root"] = to_json(root);
        p["multiplicity"] = mult;
        parts.push_back(std::move(p));
    }
    return parts;
}

Json to_json(const LeafDescriptor& leaf)
{
    Json j;
    if (leaf.zero_leaf) {
        j["index_set"] = nullptr;
    } else {
        Json idx = Json::array();
        for (int i = 0; i < 64; ++i)
            if (leaf.index_set >> i & 1) idx.push_back(i + 1);
        j["index_set"] = std::move(idx);
    }
    j["dimension"] = leaf.dimension;
    j["codimension"] = leaf.codimension;
    j["slice"] = leaf.slice;
    j["rep_type"] = to_json(leaf.rep_type);
    return j;
}

Json to_json(const WallReport& report)
{
    Json j;
    j["wall"] = report.label;
    j["kind"] = report.kind == WallReport::Kind::Flop ? "flop" : "divisorial";
    j["local_model"] = report.local_model;
    if (report.kind == WallReport::Kind::Flop) {
        j["alpha"] = to_json(report.alpha);
        j["beta"] = to_json(report.beta);
        j["p_alpha"] = 0;
        j["p_beta"] = 0;
        j["pairing"] = report.pairing;
        Json sigma = Json::array();
        for (const DimVector& s : report.sigma) sigma.push_back(to_json(s));
        j["sigma"] = std::move(sigma);
    } else {
        Json reps = Json::array();
        for (const RepresentationType& r : report.rep_types) reps.push_back(to_json(r));
        j["rep_types"] = std::move(reps);
    }
    return j;
}

Json to_json(const PoincarePoly& poly)
{
    Json j;
    Json coeffs = Json::array();
    for (const Integer& c : poly.coeffs) coeffs.push_back(to_json(c));
    j["coefficients_t2"] = std::move(coeffs);  // coefficient of t^{2k} at index k
    return j;
}

Json to_json(const ResolutionGraph& graph, const Arrangement& arr)
{
    Json j;
    j["vertices"] = graph.vertex_count();
    j["edges"] = graph.edge_count();
    j["connected"] = graph.connected();
    Json vertex_list = Json::array();
    for (const Chamber& c : graph.base.chambers) vertex_list.push_back(to_json(c));
    j["chambers"] = std::move(vertex_list);
    Json edge_list = Json::array();
    for (const auto& [a, b, h] : graph.base.edges) {
        Json e = Json::array();
        e.push_back(a);
        e.push_back(b);
        e.push_back(arr.hyperplanes[static_cast<std::size_t>(h)].label());
        edge_list.push_back(std::move(e));
    }
    j["edge_list"] = std::move(edge_list);
    return j;
}

Json to_json(const GroupCertificate& cert)
{
    Json j;
    j["order_32"] = cert.order_32;
    j["closure"] = cert.closure;
    j["preserves_omega"] = cert.preserves_omega;
    j["centre_is_pm_identity"] = cert.centre_is_pm_identity;
    j["commutator_is_pm_identity"] = cert.commutator_is_pm_identity;
    j["abelianisation_z2_4"] = cert.abelianisation_z2_4;
    j["gamma_homomorphism"] = cert.gamma_homomorphism;
    j["image_diagonal_z2_4"] = cert.image_diagonal_z2_4;
    j["characters_distinct"] = cert.characters_distinct;
    j["weights_biject"] = cert.weights_biject;
    j["psi_plucker"] = cert.psi.plucker;
    j["psi_orthogonality"] = cert.psi.orthogonality;
    j["psi_form_ranks"] = cert.psi.form_ranks;
    j["d_values"] = cert.d_values;
    j["psi_scalars"] = cert.psi_scalars;
    j["pass"] = cert.pass();
    return j;
}

Json to_json(const IsomorphismCertificate& cert)
{
    Json j;
    j["n"] = cert.n;
    j["seeds"] = cert.seeds;
    j["degree"] = cert.degree;
    j["group"] = to_json(cert.group);
    j["phi_plucker"] = cert.phi_plucker;
    j["phi_moment"] = cert.phi_moment;
    j["phi_sl2_invariance"] = cert.phi_sl2_invariance;
    j["monomial_parity"] = cert.monomial_parity;
    j["invariant_monomials_checked"] = cert.invariant_monomials_checked;
    j["reverse_direction_fails"] = cert.reverse_direction_fails;
    j["reverse_witness"] = cert.reverse_witness;
    j["pass"] = cert.pass();
    return j;
}

}  // namespace hyperpoly
