#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "polylab/bounds.hpp"
#include "polylab/controllability.hpp"
#include "polylab/ensembles.hpp"
#include "polylab/experiments.hpp"
#include "polylab/factor_search.hpp"
#include "polylab/int_matrix.hpp"
#include "polylab/int_poly.hpp"
#include "polylab/roots.hpp"

// Integers are written as decimal strings so nothing is lost to doubles;
// readers accept either strings or JSON integers. Parse failures throw
// InvalidArgument.
namespace polylab {

using Json = nlohmann::ordered_json;

Json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

/// Ascending coefficient array.
Json poly_to_json(const IntPoly& f);
IntPoly poly_from_json(const Json& j);
/// Parses text such as "[1, -1, 1]".
IntPoly parse_poly(std::string_view text);

/// {"n": n, "entries": [row-major]}
Json matrix_to_json(const IntMatrix& a);
IntMatrix matrix_from_json(const Json& j);

Json factor_report_to_json(const FactorReport& r);
Json rootset_to_json(const RootSet& r);

/// {"model": "<name>", ...parameters}
Json ensemble_to_json(const EnsembleSpec& spec);
EnsembleSpec ensemble_from_json(const Json& j);

Json sample_to_json(const Sample& s);

Json region_to_json(const RegionSpec& r);
RegionSpec region_from_json(const Json& j);

/// {"kind": "reducible"} or {"kind": "has-factor-deg-at-most", "k": 2}, ...
Json statistic_to_json(const Statistic& s);
Statistic statistic_from_json(const Json& j);

/// {"spec": {...}, "statistic": {...}, "trials": N, "seed": S, "region": {...}}
Json experiment_config_to_json(const ExperimentConfig& c);
ExperimentConfig experiment_config_from_json(const Json& j);

Json estimate_record_to_json(const EstimateRecord& r);
Json census_to_json(const CensusResult& r);
Json profile_to_json(const DelocalizationProfile& p);
Json validation_to_json(const ValidationReport& r);
Json bound_report_to_json(const BoundReport& r);
Json collected_result_to_json(const CollectedResult& r);
Json cross_check_to_json(const Graph& g, const ControllabilityCrossCheck& c);

/// {"n": n, "edges": [[i, j], ...]}
Graph graph_from_json(const Json& j);

std::string rational_to_string(const BigRational& q);

}  // namespace polylab
