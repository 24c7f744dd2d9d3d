#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fareykit/bounded_sets.hpp"
#include "fareykit/covers.hpp"
#include "fareykit/farey_metric.hpp"
#include "fareykit/fillings.hpp"
#include "fareykit/slope_set.hpp"
#include "fareykit/txtree.hpp"

namespace fareykit::json_io {

using nlohmann::json;

/// Version tag carried by every structured document the CLI prints.
inline constexpr std::string_view kSchema = "fareykit/1";

/// {"schema": "fareykit/1", "command": command, "result": result}
json envelope(std::string_view command, json result);
/// The result of an envelope. Throws ParseError on a wrong schema or command.
const json& unwrap(const json& doc, std::string_view command);

// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
json encode(const Integer& v);
Integer decode_integer(const json& j);

json encode(const Slope& s);
Slope decode_slope(const json& j);

json encode(const SlopeSet& s);
SlopeSet decode_slope_set(const json& j);

json encode(const DistanceResult& r);
DistanceResult decode_distance(const json& j);

json encode(const GeodesicPath& p);
GeodesicPath decode_path(const json& j);

json encode(const PairAudit& p);
PairAudit decode_pair_audit(const json& j);

json encode(const LipschitzAudit& a);
LipschitzAudit decode_lipschitz_audit(const json& j);

json encode(const ClosureDerivation& d);
ClosureDerivation decode_derivation(const json& j);

json encode(const Multislope& m);
Multislope decode_multislope(const json& j);

json encode(const MnhReport& r);
MnhReport decode_mnh_report(const json& j);

json encode(const ValidationReport& r);
ValidationReport decode_validation_report(const json& j);

json encode(const VolumeChainReport& r);
VolumeChainReport decode_volume_chain(const json& j);

}  // namespace fareykit::json_io
