#pragma once

#include <json.hpp>

#include "klnet/defect.hpp"
#include "klnet/factor.hpp"
#include "klnet/hecke.hpp"
#include "klnet/network.hpp"

namespace klnet {

using nlohmann::json;

json int_to_json(const Int& v);
Int int_from_json(const json& j);

// Ascending coefficient array, e.g. 1+q^2 -> [1,0,1]. Coefficients beyond the
// exact double range are emitted as decimal strings; both forms parse.
json poly_to_json(const QPoly& p);
QPoly poly_from_json(const json& j);

// {"n":..., "terms":[{"perm":"45312","poly":[1,0,1]},...]} sorted by one-line
// notation.
json hecke_to_json(const HeckeElement& h);
HeckeElement hecke_from_json(const json& j);

// {"n":..., "intervals":[[a,b],...], "condensed":[bool,...]}
json network_to_json(const StarNetwork& f);
StarNetwork network_from_json(const json& j);

// {"n":..., "intervals":[[a,b],...]}
json interval_sequence_to_json(const IntervalSequence& seq);
IntervalSequence interval_sequence_from_json(const json& j);

json family_to_json(const StarNetwork& f, const PathFamily& pi);
PathFamily family_from_json(const json& j);

json phi_trace_to_json(const PhiTrace& t, int defects_before, int defects_after);

json factorization_result_to_json(const FactorizationResult& r);

}  // namespace klnet
