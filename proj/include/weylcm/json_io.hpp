#pragma once

// JSON serialization for the public value types.  All rationals travel as
// strings ("p" or "p/q") so no precision is lost; univariate polynomials
// are coefficient arrays, low degree first; matrices are row-major arrays
// of rational strings.  Parsers throw std::invalid_argument on anything
// malformed (including shape mismatches), which the CLI maps to its
// input-error exit code.

#include <json.hpp>

#include "weylcm/cm.hpp"
#include "weylcm/envelope.hpp"
#include "weylcm/resolution.hpp"

namespace weylcm {

// Ordered so printed objects keep insertion order, making CLI output
// byte-stable.
using Json = nlohmann::ordered_json;

Json weyl_to_json(const WeylElement& a);
WeylElement weyl_from_json(const Json& j);

Json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

Json skew_to_json(const SkewSum& s);
SkewSum skew_from_json(const Json& j);

Json cm_to_json(const CMPoint& p);
CMPoint cm_from_json(const Json& j);

Json report_to_json(const AxiomReport& r);

Json ideal_to_json(const IdealPresentation& I);

}  // namespace weylcm
