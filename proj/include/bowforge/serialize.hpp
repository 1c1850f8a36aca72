#pragma once

#include "bowforge/affine_weights.hpp"
#include "bowforge/bow_calculus.hpp"
#include "bowforge/fock_oracle.hpp"
#include "bowforge/maya.hpp"
#include "bowforge/young_diagrams.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace bowforge {

using Json = nlohmann::ordered_json;

/* Malformed or incomplete JSON input. */
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Parses inline JSON text, "-" for stdin, or otherwise a file path. */
Json load_json(const std::string& source);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const AffineWeight& w);
AffineWeight weight_from_json(const Json& j);

Json to_json(const RootVector& v);

Json to_json(const GYDiagram& d);
GYDiagram gyd_from_json(const Json& j);

Json to_json(const BowDiagram& d);
BowDiagram bow_from_json(const Json& j);

Json to_json(const InvariantRecord& r);
Json to_json(const SeparatedRecord& r);
SeparatedRecord separated_from_json(const Json& j);

Json to_json(const MayaDiagram& m);
MayaDiagram maya_from_json(const Json& j);
Json to_json(const MayaStats& s);
Json to_json(const FixedPointQuery& q);
Json to_json(const EnumerationResult& r);
Json to_json(const DeformedFixedPoint& p);
Json to_json(const Sl2RestrictionData& d);
Json to_json(const AInfinityWeight& w);

Json to_json(const FockState& s);
FockState fock_state_from_json(const Json& j);
Json to_json(const FockVector& v);
Json to_json(const CharReport& r);
Json to_json(const RelationReport& r);
Json to_json(const CrystalReport& r);

} // namespace bowforge
