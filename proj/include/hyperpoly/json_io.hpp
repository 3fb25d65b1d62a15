#ifndef HYPERPOLY_JSON_IO_HPP
#define HYPERPOLY_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "hyperpoly/birational.hpp"
#include "hyperpoly/charpoly.hpp"
#include "hyperpoly/group_g.hpp"

/**
 * @file json_io.hpp
 * @brief JSON serialisation of every result type, with a fixed envelope.
 *
 * Output is deterministic byte-for-byte: insertion-ordered objects, exact
 * integers as JSON numbers when they fit 64 bits and as decimal strings
 * otherwise, rationals always as "p/q" strings.
 */

namespace hyperpoly {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "hyperpoly 0.1.0";

Json envelope(const std::string& command, int n, Json parameters, Json result);

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const DimVector& v);
Json to_json(const VectorXz& v);
Json to_json(const StabilityParam& theta);
Json to_json(const CharPoly& chi);
Json to_json(const Chamber& chamber);
Json to_json(const ChamberSet& set);
Json to_json(const LeafDescriptor& leaf);
Json to_json(const RepresentationType& rep);
Json to_json(const WallReport& report);
Json to_json(const PoincarePoly& poly);
Json to_json(const ResolutionGraph& graph, const Arrangement& arr);
Json to_json(const GroupCertificate& cert);
Json to_json(const IsomorphismCertificate& cert);

}  // namespace hyperpoly

#endif  // HYPERPOLY_JSON_IO_HPP
