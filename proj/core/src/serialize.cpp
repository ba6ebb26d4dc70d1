#include "polylab/serialize.hpp"

#include <initializer_list>
#include <limits>
#include <sstream>

#include "polylab/error.hpp"

namespace polylab {

namespace {

void require_object(const Json& j, std::string_view what) {
  if (!j.is_object()) throw InvalidArgument(std::string(what) + " must be a JSON object");
}

void check_keys(const Json& j, std::string_view what, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw InvalidArgument("unknown field '" + key + "' in " + std::string(what));
  }
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string("missing field '") + key + "'");
  return *it;
}

long long get_int(const Json& j, const char* key) {
  const BigInt v = bigint_from_json(field(j, key));
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw InvalidArgument(std::string("field '") + key + "' is out of range");
  }
  return v.convert_to<long long>();
}

int get_small(const Json& j, const char* key) {
  const long long v = get_int(j, key);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw InvalidArgument(std::string("field '") + key + "' is out of range");
  }
  return static_cast<int>(v);
}

std::uint64_t get_u64(const Json& j, const char* key) {
  const BigInt v = bigint_from_json(field(j, key));
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw InvalidArgument(std::string("field '") + key + "' must be a non-negative 64-bit integer");
  }
  return v.convert_to<std::uint64_t>();
}

double get_double(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      std::size_t pos = 0;
      const std::string s = v.get<std::string>();
      const double d = std::stod(s, &pos);
      if (pos == s.size()) return d;
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument(std::string("field '") + key + "' must be a number");
}

}  // namespace

Json bigint_to_json(const BigInt& x) { return x.str(); }

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw InvalidArgument("'" + s + "' is not an integer");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw InvalidArgument("'" + s + "' is not an integer");
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

Json poly_to_json(const IntPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(bigint_to_json(c));
  return a;
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("a polynomial must be a JSON array of coefficients");
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(bigint_from_json(x));
  return IntPoly(std::move(c));
}

IntPoly parse_poly(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("cannot parse polynomial '" + std::string(text) + "': expected a JSON array");
  }
  return poly_from_json(j);
}

Json matrix_to_json(const IntMatrix& a) {
  Json entries = Json::array();
  for (const auto& x : a.entries()) entries.push_back(bigint_to_json(x));
  return Json{{"n", a.dim()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const Json& j) {
  require_object(j, "matrix");
  check_keys(j, "matrix", {"n", "entries"});
  const long long n = get_int(j, "n");
  if (n < 1) throw InvalidArgument("matrix dimension must be >= 1");
  const Json& e = field(j, "entries");
  if (!e.is_array()) throw InvalidArgument("matrix entries must be an array");
  std::vector<BigInt> entries;
  for (const auto& x : e) entries.push_back(bigint_from_json(x));
  return IntMatrix(static_cast<std::size_t>(n), std::move(entries));
}

Json factor_report_to_json(const FactorReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.factors) {
    factors.push_back({{"coeffs", poly_to_json(f.poly)}, {"degree", f.degree()}, {"method", to_string(f.method)}});
  }
  Json j{{"status", to_string(r.status)}, {"factors", std::move(factors)}};
  if (r.status == FactorStatus::NoFactorUpTo) j["k"] = r.k;
  if (!r.certificate.empty()) j["certificate"] = r.certificate;
  return j;
}

Json rootset_to_json(const RootSet& r) {
  Json roots = Json::array();
  for (const auto& z : r.roots) roots.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"roots", std::move(roots)},
              {"residuals", r.residuals},
              {"converged", r.converged},
              {"clustered", r.clustered},
              {"sweeps", r.sweeps}};
}

Json ensemble_to_json(const EnsembleSpec& spec) {
  Json j{{"model", model_name(spec)}};
  std::visit(
      [&j](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        j["n"] = s.n;
        if constexpr (std::is_same_v<T, UniformPoly>) j["N"] = std::to_string(s.N);
        if constexpr (std::is_same_v<T, SymmetricBounded>) {
          j["B"] = s.B;
          j["mean_zero"] = s.mean_zero;
          if (s.weights) {
            Json w = Json::array();
            for (auto x : *s.weights) w.push_back(std::to_string(x));
            j["weights"] = std::move(w);
          }
        }
        if constexpr (std::is_same_v<T, Elliptical>) j["rho"] = s.rho;
        if constexpr (std::is_same_v<T, ProductSigns>) j["m"] = s.m;
        if constexpr (std::is_same_v<T, ErdosRenyi> || std::is_same_v<T, DirectedBernoulli>) j["p"] = s.p;
        if constexpr (std::is_same_v<T, FixedOutdegree>) j["s"] = s.s;
      },
      spec);
  return j;
}

EnsembleSpec ensemble_from_json(const Json& j) {
  require_object(j, "ensemble");
  const Json& m = field(j, "model");
  if (!m.is_string()) throw InvalidArgument("'model' must be a string");
  const std::string model = m.get<std::string>();
  const int n = get_small(j, "n");
  EnsembleSpec spec;
  if (model == "rademacher-poly") {
    check_keys(j, model, {"model", "n"});
    spec = RademacherPoly{n};
  } else if (model == "uniform-poly") {
    check_keys(j, model, {"model", "n", "N"});
    spec = UniformPoly{n, get_u64(j, "N")};
  } else if (model == "zero-one-konyagin") {
    check_keys(j, model, {"model", "n"});
    spec = ZeroOneKonyagin{n};
  } else if (model == "iid-sign-matrix") {
    check_keys(j, model, {"model", "n"});
    spec = IidSignMatrix{n};
  } else if (model == "symmetric-bounded") {
    check_keys(j, model, {"model", "n", "B", "mean_zero", "weights"});
    SymmetricBounded s{n, get_small(j, "B"), true, std::nullopt};
    if (j.contains("mean_zero")) {
      if (!j["mean_zero"].is_boolean()) throw InvalidArgument("'mean_zero' must be a boolean");
      s.mean_zero = j["mean_zero"].get<bool>();
    }
    if (j.contains("weights")) {
      if (!j["weights"].is_array()) throw InvalidArgument("'weights' must be an array");
      std::vector<std::uint64_t> w;
      for (const auto& x : j["weights"]) {
        const BigInt v = bigint_from_json(x);
        if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) throw InvalidArgument("weights must be non-negative");
        w.push_back(v.convert_to<std::uint64_t>());
      }
      s.weights = std::move(w);
    }
    spec = std::move(s);
  } else if (model == "elliptical") {
    check_keys(j, model, {"model", "n", "rho"});
    spec = Elliptical{n, get_double(j, "rho")};
  } else if (model == "product-signs") {
    check_keys(j, model, {"model", "n", "m"});
    spec = ProductSigns{n, get_small(j, "m")};
  } else if (model == "erdos-renyi") {
    check_keys(j, model, {"model", "n", "p"});
    spec = ErdosRenyi{n, get_double(j, "p")};
  } else if (model == "directed-bernoulli") {
    check_keys(j, model, {"model", "n", "p"});
    spec = DirectedBernoulli{n, get_double(j, "p")};
  } else if (model == "fixed-outdegree") {
    check_keys(j, model, {"model", "n", "s"});
    spec = FixedOutdegree{n, get_small(j, "s")};
  } else if (model == "permutation-matrix") {
    check_keys(j, model, {"model", "n"});
    spec = PermutationMatrix{n};
  } else {
    throw InvalidArgument("unknown model '" + model + "'");
  }
  validate(spec);
  return spec;
}

Json sample_to_json(const Sample& s) {
  if (const auto* p = std::get_if<IntPoly>(&s)) return Json{{"poly", poly_to_json(*p)}};
  return Json{{"matrix", matrix_to_json(std::get<IntMatrix>(s))}};
}

Json region_to_json(const RegionSpec& r) {
  return Json{{"M", r.M}, {"excluded", r.excluded}, {"real_only", r.real_only}};
}

RegionSpec region_from_json(const Json& j) {
  require_object(j, "region");
  check_keys(j, "region", {"M", "excluded", "real_only"});
  RegionSpec r;
  r.M = get_double(j, "M");
  if (j.contains("excluded")) {
    if (!j["excluded"].is_array()) throw InvalidArgument("'excluded' must be an array");
    for (const auto& x : j["excluded"]) {
      const BigInt v = bigint_from_json(x);
      if (abs(v) > BigInt(std::numeric_limits<long long>::max())) throw InvalidArgument("excluded point out of range");
      r.excluded.push_back(v.convert_to<long long>());
    }
  }
  if (j.contains("real_only")) {
    if (!j["real_only"].is_boolean()) throw InvalidArgument("'real_only' must be a boolean");
    r.real_only = j["real_only"].get<bool>();
  }
  r.validate();
  return r;
}

Json statistic_to_json(const Statistic& s) {
  Json j;
  if (std::holds_alternative<Reducible>(s)) j["kind"] = "reducible";
  if (const auto* h = std::get_if<HasFactorDegAtMost>(&s)) j = {{"kind", "has-factor-deg-at-most"}, {"k", h->k}};
  if (const auto* p = std::get_if<IntegerPointRoot>(&s)) j = {{"kind", "integer-point-root"}, {"x", std::to_string(p->x)}};
  if (const auto* m = std::get_if<MinPolyDivides>(&s)) j = {{"kind", "minpoly-divides"}, {"g", poly_to_json(m->g)}};
  if (std::holds_alternative<Singular>(s)) j["kind"] = "singular";
  if (std::holds_alternative<TrivialEigenvalueMultiplicityAtLeast2>(s)) j["kind"] = "trivial-eigenvalue-multiplicity-2";
  return j;
}

Statistic statistic_from_json(const Json& j) {
  if (j.is_string()) return statistic_from_json(Json{{"kind", j}});
  require_object(j, "statistic");
  const Json& k = field(j, "kind");
  if (!k.is_string()) throw InvalidArgument("'kind' must be a string");
  const std::string kind = k.get<std::string>();
  if (kind == "reducible") {
    check_keys(j, kind, {"kind"});
    return Reducible{};
  }
  if (kind == "has-factor-deg-at-most") {
    check_keys(j, kind, {"kind", "k"});
    return HasFactorDegAtMost{get_small(j, "k")};
  }
  if (kind == "integer-point-root") {
    check_keys(j, kind, {"kind", "x"});
    return IntegerPointRoot{get_int(j, "x")};
  }
  if (kind == "minpoly-divides") {
    check_keys(j, kind, {"kind", "g"});
    return MinPolyDivides{poly_from_json(field(j, "g"))};
  }
  if (kind == "singular") {
    check_keys(j, kind, {"kind"});
    return Singular{};
  }
  if (kind == "trivial-eigenvalue-multiplicity-2") {
    check_keys(j, kind, {"kind"});
    return TrivialEigenvalueMultiplicityAtLeast2{};
  }
  throw InvalidArgument("unknown statistic '" + kind + "'");
}

Json experiment_config_to_json(const ExperimentConfig& c) {
  Json j{{"spec", ensemble_to_json(c.spec)},
         {"statistic", statistic_to_json(c.statistic)},
         {"trials", c.trials},
         {"seed", std::to_string(c.seed)}};
  if (c.region) j["region"] = region_to_json(*c.region);
  return j;
}

ExperimentConfig experiment_config_from_json(const Json& j) {
  require_object(j, "experiment config");
  check_keys(j, "experiment config", {"spec", "statistic", "trials", "seed", "region", "workers"});
  ExperimentConfig c;
  c.spec = ensemble_from_json(field(j, "spec"));
  c.statistic = statistic_from_json(field(j, "statistic"));
  if (j.contains("trials")) c.trials = get_u64(j, "trials");
  if (j.contains("seed")) c.seed = get_u64(j, "seed");
  if (j.contains("region")) c.region = region_from_json(j["region"]);
  if (j.contains("workers")) c.workers = static_cast<unsigned>(get_u64(j, "workers"));
  validate(c);
  return c;
}

Json estimate_record_to_json(const EstimateRecord& r) {
  std::ostringstream os;
  write_report({r}, ReportFormat::Json, os);
  return Json::parse(os.str()).at(0);
}

std::string rational_to_string(const BigRational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Json census_to_json(const CensusResult& r) {
  Json by = Json::object();
  for (std::size_t d = 1; d < r.by_smallest_degree.size(); ++d) by[std::to_string(d)] = r.by_smallest_degree[d];
  return Json{{"n", r.n},
              {"total", r.total},
              {"reducible", r.reducible},
              {"unknown", r.unknown},
              {"probability", rational_to_string(r.probability)},
              {"probability_decimal", r.probability.convert_to<double>()},
              {"by_smallest_degree", std::move(by)},
              {"pm1_root_probability", rational_to_string(r.pm1_root_probability)}};
}

Json profile_to_json(const DelocalizationProfile& p) {
  Json cands = Json::array();
  for (const auto& c : p.nonzero) {
    cands.push_back({{"g", poly_to_json(c.g)}, {"hits", c.hits}, {"p_hat", c.p_hat}, {"ci_lo", c.ci.lo}, {"ci_hi", c.ci.hi}});
  }
  Json j{{"model", p.model}, {"n", p.n},          {"k", p.k},
         {"M", p.M},         {"trials", p.trials}, {"seed", std::to_string(p.seed)},
         {"shared", true},   {"candidates", p.candidates}, {"nonzero", std::move(cands)}};
  j["argmax"] = p.argmax ? poly_to_json(*p.argmax) : Json(nullptr);
  j["p_hat"] = p.p_hat;
  return j;
}

Json validation_to_json(const ValidationReport& r) {
  Json j{{"model", r.model},
         {"n", r.n},
         {"k", r.k},
         {"M", r.M},
         {"cauchy_M", r.cauchy_M},
         {"trials", r.trials},
         {"seed", std::to_string(r.seed)},
         {"events", r.events},
         {"unknown", r.unknown},
         {"empirical", r.empirical},
         {"p_hat", r.p_hat}};
  j["argmax"] = r.argmax ? poly_to_json(*r.argmax) : Json(nullptr);
  j["tail"] = r.tail;
  j["budget"] = r.budget;
  j["verdict"] = r.holds ? "holds" : "violated";
  return j;
}

Json bound_report_to_json(const BoundReport& r) {
  Json values = Json::array();
  for (const auto& v : r.values) {
    Json e{{"name", v.name}, {"log", v.log_value}};
    if (v.exact) e["exact"] = rational_to_string(*v.exact);
    values.push_back(std::move(e));
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"log_lhs", c.log_lhs}, {"log_rhs", c.log_rhs}, {"holds", c.holds}});
  }
  return Json{{"values", std::move(values)}, {"checks", std::move(checks)}, {"all_hold", r.all_hold()}};
}

Json collected_result_to_json(const CollectedResult& r) {
  static const char* names[] = {"i", "ii", "iii", "iv"};
  Json j{{"case", names[static_cast<int>(r.which)]},
         {"n", r.n},
         {"k", r.k},
         {"log_value", r.log_value},
         {"log_limit", r.log_limit},
         {"holds", r.holds}};
  j["threshold"] = r.threshold ? Json(*r.threshold) : Json(nullptr);
  return j;
}

Json cross_check_to_json(const Graph& g, const ControllabilityCrossCheck& c) {
  Json edges = Json::array();
  for (auto [i, k] : g.edges()) edges.push_back(Json::array({i, k}));
  Json j{{"n", g.n()},
         {"edges", std::move(edges)},
         {"charpoly", poly_to_json(mat_charpoly_exact(g.adjacency()))},
         {"charpoly_status", to_string(c.charpoly_status)},
         {"controllable", c.controllable},
         {"minimally_controllable", c.minimally_controllable}};
  j["automorphisms"] = c.automorphisms ? Json(*c.automorphisms) : Json(nullptr);
  j["verdict"] = to_string(c.verdict);
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Graph graph_from_json(const Json& j) {
  require_object(j, "graph");
  check_keys(j, "graph", {"n", "edges"});
  const int n = get_small(j, "n");
  const Json& e = field(j, "edges");
  if (!e.is_array()) throw InvalidArgument("'edges' must be an array of [i, j] pairs");
  std::vector<std::pair<int, int>> edges;
  for (const auto& pair : e) {
    if (!pair.is_array() || pair.size() != 2) throw InvalidArgument("each edge must be a pair [i, j]");
    const BigInt a = bigint_from_json(pair[0]);
    const BigInt b = bigint_from_json(pair[1]);
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgument("edge endpoint out of range");
    edges.emplace_back(a.convert_to<int>(), b.convert_to<int>());
  }
  return Graph::from_edges(n, edges);
}

}  // namespace polylab
