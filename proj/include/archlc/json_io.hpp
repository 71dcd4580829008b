#pragma once

// JSON forms. Rationals are always written as "p/q" strings (denominator 1
// included) so values round-trip bit-exactly; readers also accept "p".

#include "archlc/converse.hpp"
#include "archlc/gamma_expr.hpp"
#include "archlc/genericity.hpp"
#include "archlc/parameters.hpp"

#include <json.hpp>

namespace archlc {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const GaussQ& z);
Json to_json(const LinForm& f);
Json to_json(const GammaExpr& x);
Json to_json(const Constituent& c);
Json to_json(const Parameter& p);
Json to_json(const GenericityVerdict& v);
Json to_json(const FamilyReport& r);

Rational rational_from_json(const Json& j);
GaussQ gaussq_from_json(const Json& j);
LinForm linform_from_json(const Json& j);
GammaExpr gamma_expr_from_json(const Json& j);
Parameter parameter_from_json(const Json& j);

/// Transcript of an oracle: {"<character>": GammaExpr, ...}.
Json transcript_json(const Parameter& p, const std::vector<Constituent>& twists);
/// Oracle answering exactly the characters in the transcript; other queries
/// raise ReconstructionFailure. Throws ParseError for malformed keys.
GammaOracle oracle_from_transcript(const Json& j);

}  // namespace archlc
