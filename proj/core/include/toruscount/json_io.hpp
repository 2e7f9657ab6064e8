#pragma once

#include <json.hpp>

#include "toruscount/analysis.hpp"
#include "toruscount/oracle.hpp"
#include "toruscount/prp.hpp"

namespace toruscount {

// Every numeric value serializes as a string of a reduced integer or
// fraction; floats never appear in JSON output.

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Angle& a);
nlohmann::json to_json(const Integer& n);
nlohmann::json to_json(const Cyclotomic& c);
nlohmann::json to_json(const Lattice& l);
nlohmann::json to_json(const TorsionSolution& s);
nlohmann::json to_json(const CongruenceSystem& s);
nlohmann::json to_json(const RationalPlane& p);
nlohmann::json to_json(const Prp& p);
nlohmann::json to_json(const Prp::SchoenbergTerm& t);
nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const PolynomialPeriodicFunction& f);

/// Rebuilds a congruence system from its {rows, rhs} record.
CongruenceSystem system_from_json(const nlohmann::json& j);

}  // namespace toruscount
