#pragma once

#include <json.hpp>

#include "necklace/glue.hpp"
#include "necklace/transform.hpp"

namespace necklace {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Scalar& s);
Json to_json(const Poly& p);
Json to_json(const RatFunc& f);
Json to_json(const Multivector& mv);
Json to_json(const DiffForm& form);
Json to_json(const PoissonStructure& pi);
Json to_json(const Matrix& m);
Json to_json(const ModeElement& e);
Json to_json(const TruncatedModeComplex& cx);
Json to_json(const CohomologyReport& r);
Json to_json(const ZeroModeBlock& b);
Json to_json(const ExactSequence& seq);
Json to_json(const RestrictionMatrix& r);
Json to_json(const GlobalReport& r);
Json to_json(const DeformationReport& r);
Json to_json(const NecklaceGeometry& g);
Json to_json(const AreaResult& a);
Json to_json(const ValidationResult& v);
Json to_json(const ChartMap& m);
Json to_json(const Chart& c);

/// Reverses to_json for polynomials; the variable list is taken from the document.
Poly poly_from_json(const Json& j);
Scalar scalar_from_json(const Json& j);

Json conventions_json();

/// {"schema_version", "command", "conventions", "assumptions", "result"}.
Json envelope(const std::string& command, Json result, const std::vector<std::string>& assumptions);

}  // namespace necklace
