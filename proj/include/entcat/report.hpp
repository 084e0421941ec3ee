#pragma once

#include <ostream>
#include <span>

#include "json.hpp"

#include "entcat/catalysis.hpp"
#include "entcat/construction.hpp"
#include "entcat/majorization.hpp"
#include "entcat/oracle.hpp"
#include "entcat/rational.hpp"

namespace entcat {

using Json = nlohmann::ordered_json;

// Scalars serialize as {"exact": "num/den", "decimal": "...", "approximate": bool};
// the exact string is authoritative. Vectors of probabilities serialize as
// arrays of exact strings.

Json to_json(const Rational& r);
Json to_json(const ExtendedRational& r);
Json to_json(const EpsilonTriple& eps);
Json to_json(const Interval& interval);
Json to_json(const FeasibilityReport& report);
Json to_json(const ConstructionResult& result);
Json exact_array(std::span<const Rational> values);

/// Header "p,p_decimal,valid", one row per point, LF endings.
void write_sweep_csv(std::ostream& os, std::span<const SweepPoint> points);

/// Header "k_over_n,lambda,lambda_decimal", one row per point, LF endings.
void write_lorenz_csv(std::ostream& os, std::span<const LorenzPoint> points);

}  // namespace entcat
