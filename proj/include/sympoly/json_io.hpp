#pragma once

#include <string>

#include <json.hpp>

#include "sympoly/domains.hpp"
#include "sympoly/schwarz.hpp"
#include "sympoly/verify.hpp"

namespace sympoly {

using Json = nlohmann::json;

// Complex values travel as [re, im] pairs.
Json to_json(Cplx v);
Cplx cplx_from_json(const Json& j);

/// {"n": int, "y": [[re,im], ...], "q": [re,im]}
Json to_json(const DomainPoint& p);
DomainPoint point_from_json(const Json& j);

/// {"verdict": str, "margin": double, "binding_j": int}
Json to_json(const MembershipVerdict& v);

/// {"n": int, "x": [[re,im], ...], "r": [re,im]}
Json to_json(const InterpolantSpec& s);
/// "r" may be omitted on input; it is recomputed.
InterpolantSpec interpolant_spec_from_json(const Json& j);

Json to_json(const Mat2& m);
Json to_json(const ContractionTuple& t);

Json to_json(const Failure& f);
Json to_json(const VerificationReport& r);

/// Shortest round-trip decimal form, shared by the CSV writer.
std::string format_double(double v);

} // namespace sympoly
