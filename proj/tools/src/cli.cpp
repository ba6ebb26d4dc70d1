#include "polylab_cli/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "polylab/bounds.hpp"
#include "polylab/controllability.hpp"
#include "polylab/error.hpp"
#include "polylab/experiments.hpp"
#include "polylab/factor_search.hpp"
#include "polylab/serialize.hpp"

namespace polylab::cli {

namespace {

struct Global {
  std::uint64_t seed = 0;
  std::string format;
  std::string out_path;
};

// Model parameters as given on the command line; only flags that were
// actually passed reach the ensemble parser, which rejects extras.
struct ModelFlags {
  std::string model;
  std::string n, p, rho, s, m, N, B;
  bool include_zero = false;

  void add_to(CLI::App* app) {
    app->add_option("--model", model, "Ensemble name, e.g. rademacher-poly, iid-sign-matrix, erdos-renyi");
    app->add_option("--n", n, "Degree or matrix dimension");
    app->add_option("--p", p, "Edge or entry probability");
    app->add_option("--rho", rho, "Elliptical correlation");
    app->add_option("--s", s, "Fixed outdegree");
    app->add_option("--m", m, "Number of sign-matrix factors");
    app->add_option("--N", N, "Coefficient range for uniform-poly");
    app->add_option("--B", B, "Entry bound for symmetric-bounded");
    app->add_flag("--include-zero", include_zero, "symmetric-bounded: allow zero entries");
  }

  bool given() const { return !model.empty(); }

  EnsembleSpec spec() const {
    if (model.empty()) throw InvalidArgument("--model is required");
    Json j{{"model", model}};
    auto put = [&j](const char* key, const std::string& v) {
      if (!v.empty()) j[key] = v;
    };
    put("n", n);
    put("p", p);
    put("rho", rho);
    put("s", s);
    put("m", m);
    put("N", N);
    put("B", B);
    if (include_zero) j["mean_zero"] = false;
    return ensemble_from_json(j);
  }
};

struct RegionFlags {
  std::string M;
  std::vector<long long> exclude;
  bool real_only = false;

  void add_to(CLI::App* app) {
    app->add_option("--M", M, "Region radius: Omega is |z| <= M");
    app->add_option("--exclude", exclude, "Integer points removed from Omega")->delimiter(',');
    app->add_flag("--real-only", real_only, "Intersect Omega with the real line");
  }

  std::optional<RegionSpec> region() const {
    if (M.empty()) {
      if (!exclude.empty() || real_only) throw InvalidArgument("--exclude and --real-only need --M");
      return std::nullopt;
    }
    Json j{{"M", M}, {"excluded", exclude}, {"real_only", real_only}};
    return region_from_json(j);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw InvalidArgument("cannot parse " + what + " as JSON");
  }
}

// "@path" reads the file, anything else is taken as JSON text.
Json json_argument(const std::string& arg, const std::string& what) {
  if (!arg.empty() && arg[0] == '@') return parse_json_text(read_file(arg.substr(1)), what);
  return parse_json_text(arg, what);
}

BigRational parse_rational(const std::string& s, const std::string& what) {
  try {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
      if (s.find_first_of(".eE") != std::string::npos) return BigRational(std::stod(s));
      return BigRational(BigInt(s));
    }
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw InvalidArgument(what + " has a zero denominator");
    return BigRational(BigInt(s.substr(0, slash)), den);
  } catch (const InvalidArgument&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidArgument(what + " '" + s + "' is not a number");
  }
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void aligned(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(w) + 2) << k << v << '\n';
}

std::string format_or(const Global& g, const char* fallback, std::initializer_list<const char*> allowed) {
  const std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw CLI::ValidationError("--format", "format '" + f + "' is not available for this command");
}

// ---------------------------------------------------------------- factor

struct FactorCmd {
  std::string poly;
  int k = 0;
  std::string method = "auto";
  std::string M;

  void add(CLI::App* app) {
    app->add_option("--poly", poly, "Monic polynomial as a JSON array, constant term first")->required();
    app->add_option("--k", k, "Largest factor degree to search; omit for a full irreducibility test");
    app->add_option("--method", method, "auto, enumerate or subset (only with --k)")
        ->check(CLI::IsMember({"auto", "enumerate", "subset"}));
    app->add_option("--M", M, "Root bound for --method enumerate (default: Cauchy bound)");
  }

  int run(const Global& g, std::ostream& os, bool k_given) const {
    const std::string f_fmt = format_or(g, "json", {"json", "text"});
    const IntPoly f = parse_poly(poly);
    FactorReport r;
    if (!k_given) {
      if (method != "auto") throw InvalidArgument("--method needs --k");
      r = classify_irreducibility(f);
    } else if (method == "enumerate") {
      std::optional<BigRational> bound;
      if (!M.empty()) bound = parse_rational(M, "--M");
      r = low_degree_factors_enumerate(f, k, bound);
    } else if (method == "subset") {
      r = low_degree_factors_subset(f, k);
    } else {
      r = low_degree_factors(f, k);
    }
    if (f_fmt == "json") {
      os << factor_report_to_json(r).dump(2) << '\n';
    } else {
      os << "status " << to_string(r.status);
      if (!r.certificate.empty()) os << " (" << r.certificate << ")";
      os << '\n';
      for (const auto& fac : r.factors) os << fac.poly.to_string() << "  [" << to_string(fac.method) << "]\n";
    }
    return kOk;
  }
};

// -------------------------------------------------------------- charpoly

IntMatrix matrix_argument(const Json& j) {
  if (j.is_array()) {
    const std::size_t n = j.size();
    std::vector<BigInt> entries;
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != n) throw InvalidArgument("matrix rows must form an n x n array");
      for (const auto& x : row) entries.push_back(bigint_from_json(x));
    }
    if (n == 0) throw InvalidArgument("empty matrix");
    return IntMatrix(n, std::move(entries));
  }
  return matrix_from_json(j);
}

struct CharpolyCmd {
  std::string matrix;

  void add(CLI::App* app) {
    app->add_option("--matrix", matrix,
                    "Integer matrix: {\"n\":..,\"entries\":[..]}, nested rows, or @file")
        ->required();
  }

  int run(const Global& g, std::ostream& os) const {
    const std::string f = format_or(g, "json", {"json", "text"});
    const IntMatrix a = matrix_argument(json_argument(matrix, "--matrix"));
    const IntPoly cp = mat_charpoly_exact(a);
    if (f == "json") {
      os << Json{{"n", a.dim()}, {"charpoly", poly_to_json(cp)}, {"det", bigint_to_json(mat_det_exact(a))}}.dump(2)
         << '\n';
    } else {
      os << cp.to_string() << '\n';
    }
    return kOk;
  }
};

// ---------------------------------------------------------------- sample

struct SampleCmd {
  ModelFlags model;
  std::uint64_t count = 1;
  std::uint64_t start = 0;
  bool charpoly = false;

  void add(CLI::App* app) {
    model.add_to(app);
    app->add_option("--count", count, "Number of samples");
    app->add_option("--start", start, "First stream index");
    app->add_flag("--charpoly", charpoly, "Also print the characteristic polynomial of matrix samples");
  }

  int run(const Global& g, std::ostream& os) const {
    const std::string f = format_or(g, "json", {"json", "text"});
    const EnsembleSpec spec = model.spec();
    Json samples = Json::array();
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t idx = start + i;
      const Sample s = sample(spec, SeedStream{g.seed, idx});
      if (f == "text") {
        if (const auto* p = std::get_if<IntPoly>(&s)) {
          os << p->to_string() << '\n';
        } else {
          const auto& a = std::get<IntMatrix>(s);
          for (std::size_t r = 0; r < a.dim(); ++r) {
            for (std::size_t c = 0; c < a.dim(); ++c) os << (c ? " " : "") << a(r, c);
            os << '\n';
          }
          if (charpoly) os << mat_charpoly_exact(a).to_string() << '\n';
          os << '\n';
        }
        continue;
      }
      Json j = sample_to_json(s);
      j["index"] = idx;
      if (charpoly && std::holds_alternative<IntMatrix>(s)) {
        j["charpoly"] = poly_to_json(mat_charpoly_exact(std::get<IntMatrix>(s)));
      }
      samples.push_back(std::move(j));
    }
    if (f == "json") {
      os << Json{{"spec", ensemble_to_json(spec)}, {"seed", std::to_string(g.seed)}, {"samples", std::move(samples)}}
                .dump(2)
         << '\n';
    }
    return kOk;
  }
};

// ------------------------------------------------------------ experiment

struct ExperimentCmd {
  std::string config;
  ModelFlags model;
  RegionFlags region;
  std::string statistic = "reducible";
  int k = 1;
  long long x = 1;
  std::string g;
  std::uint64_t trials = 1000;
  std::string mode = "estimate";
  unsigned workers = 0;
  bool timing = false;
  CLI::Option* trials_opt = nullptr;
  CLI::Option* k_opt = nullptr;

  void add(CLI::App* app) {
    app->add_option("--config", config, "JSON experiment config file (object or array of objects)");
    model.add_to(app);
    region.add_to(app);
    app->add_option("--statistic", statistic,
                    "reducible, has-factor-deg-at-most, integer-point-root, minpoly-divides, singular, "
                    "trivial-eigenvalue-multiplicity-2");
    k_opt = app->add_option("--k", k, "Factor degree bound");
    app->add_option("--x", x, "Integer point for integer-point-root");
    app->add_option("--g", g, "Polynomial for minpoly-divides, JSON array");
    trials_opt = app->add_option("--trials", trials, "Number of samples");
    app->add_option("--mode", mode, "estimate, profile or validate")
        ->check(CLI::IsMember({"estimate", "profile", "validate"}));
    app->add_option("--workers", workers, "Worker threads (default: logical cores)");
    app->add_flag("--timing", timing, "Fill the seconds column with wall time");
  }

  Statistic statistic_from_flags() const {
    Json j{{"kind", statistic}};
    if (statistic == "has-factor-deg-at-most") j["k"] = k;
    if (statistic == "integer-point-root") j["x"] = x;
    if (statistic == "minpoly-divides") {
      if (g.empty()) throw InvalidArgument("minpoly-divides needs --g");
      j["g"] = parse_json_text(g, "--g");
    }
    return statistic_from_json(j);
  }

  std::vector<ExperimentConfig> configs(const Global& gl) const {
    std::vector<ExperimentConfig> out;
    if (!config.empty()) {
      if (model.given()) throw InvalidArgument("use either --config or --model, not both");
      const Json j = parse_json_text(read_file(config), "--config");
      std::vector<Json> items;
      if (j.is_array()) {
        for (const auto& e : j) items.push_back(e);
      } else {
        items.push_back(j);
      }
      for (auto e : items) {
        if (e.is_object() && !e.contains("seed")) e["seed"] = std::to_string(gl.seed);
        if (e.is_object() && *trials_opt) e["trials"] = trials;
        out.push_back(experiment_config_from_json(e));
      }
    } else {
      ExperimentConfig c;
      c.spec = model.spec();
      c.statistic = statistic_from_flags();
      c.trials = trials;
      c.seed = gl.seed;
      c.region = region.region();
      validate(c);
      out.push_back(std::move(c));
    }
    for (auto& c : out) {
      c.workers = workers;
      c.timing = timing;
    }
    return out;
  }

  int run(const Global& gl, std::ostream& os) const {
    if (mode == "estimate") {
      const std::string f = format_or(gl, "csv", {"csv", "json"});
      std::vector<EstimateRecord> records;
      for (const auto& c : configs(gl)) records.push_back(mc_estimate(c));
      write_report(records, f == "csv" ? ReportFormat::Csv : ReportFormat::Json, os);
      return kOk;
    }
    format_or(gl, "json", {"json"});
    if (mode == "profile") {
      const EnsembleSpec spec = model.spec();
      const auto reg = region.region();
      if (!reg) throw InvalidArgument("profile mode needs --M");
      const auto p = delocalization_profile(spec, k, reg->M, trials, gl.seed, reg, workers);
      os << profile_to_json(p).dump(2) << '\n';
      return kOk;
    }
    ValidationConfig v;
    v.spec = model.spec();
    v.k = k;
    v.trials = *trials_opt ? trials : 10000;
    v.seed = gl.seed;
    v.region = region.region();
    v.workers = workers;
    const ValidationReport r = validate_root_budget(v);
    os << validation_to_json(r).dump(2) << '\n';
    return r.holds ? kOk : kViolation;
  }
};

// ---------------------------------------------------------------- bounds

struct BoundsCmd {
  std::string kind = "sandwich";
  int k = 2;
  std::string M = "2";
  double p = 0.0;
  double tail = 0.0;
  std::string which = "i";
  double n = 0.0;
  int x = 1;
  CollectedParams params;
  double b_prime = 0.0;
  CLI::Option* b_prime_opt = nullptr;

  void add(CLI::App* app) {
    app->add_option("--kind", kind, "sandwich, budget, collected, littlewood-offord or reducibility-bound")
        ->check(CLI::IsMember({"sandwich", "budget", "collected", "littlewood-offord", "reducibility-bound"}));
    app->add_option("--k", k, "Degree bound k");
    app->add_option("--M", M, "Root bound M (integer or fraction)");
    app->add_option("--p", p, "Pointwise probability p (budget)");
    app->add_option("--tail", tail, "Tail probability (budget)");
    app->add_option("--case", which, "Collected-bounds case: i, ii, iii or iv")
        ->check(CLI::IsMember({"i", "ii", "iii", "iv"}));
    app->add_option("--n", n, "Degree n");
    app->add_option("--x", x, "Evaluation point +1 or -1 (littlewood-offord)");
    app->add_option("--scale", params.p_scale, "Case i: p = scale / sqrt(n)");
    app->add_option("--eps", params.eps, "Case ii: k = floor(n^(1/2 - eps))");
    app->add_option("--c", params.c, "Case iii: p = 2 exp(-n^c)");
    app->add_option("--c-prime", params.c_prime, "Case iii: k = floor(n^c')");
    app->add_option("--C", params.C, "Case iii: M = C sqrt(n)");
    app->add_option("--B", params.B, "Case iv: target n^-B");
    app->add_option("--m", params.m, "Case iv: M = n^m");
    app->add_option("--K", params.K, "Case iv: k = K");
    b_prime_opt = app->add_option("--B-prime", b_prime, "Case iv: p = n^-B' (default B + 2mK^2)");
  }

  int run(const Global& g, std::ostream& os) {
    const std::string f = format_or(g, "text", {"text", "json"});
    if (kind == "sandwich") {
      const BoundReport r = candidate_count_sandwich(k, parse_rational(M, "--M"));
      if (f == "json") {
        os << bound_report_to_json(r).dump(2) << '\n';
      } else {
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& v : r.values) {
          rows.emplace_back(v.name, v.exact ? rational_to_string(*v.exact) + "  (log " + fmt(v.log_value) + ")"
                                            : "log " + fmt(v.log_value));
        }
        for (const auto& c : r.checks) rows.emplace_back(c.name, c.holds ? "holds" : "FAILS");
        aligned(os, rows);
      }
      return r.all_hold() ? kOk : kViolation;
    }
    if (kind == "budget") {
      const double b = low_degree_root_budget(p, parse_rational(M, "--M").convert_to<double>(), k, tail);
      if (f == "json") {
        os << Json{{"p", p}, {"M", M}, {"k", k}, {"tail", tail}, {"budget", b}}.dump(2) << '\n';
      } else {
        os << fmt(b) << '\n';
      }
      return kOk;
    }
    if (kind == "collected") {
      static const std::map<std::string, CollectedCase> cases{
          {"i", CollectedCase::I}, {"ii", CollectedCase::II}, {"iii", CollectedCase::III}, {"iv", CollectedCase::IV}};
      if (*b_prime_opt) params.B_prime = b_prime;
      const CollectedResult r = collected_bounds_check(cases.at(which), params, n);
      if (f == "json") {
        os << collected_result_to_json(r).dump(2) << '\n';
      } else {
        aligned(os, {{"case", which},
                     {"n", fmt(r.n)},
                     {"k", std::to_string(r.k)},
                     {"log p(eM)^(k^2)", fmt(r.log_value)},
                     {"log limit", fmt(r.log_limit)},
                     {"verdict", r.holds ? "holds" : "fails"},
                     {"threshold", r.threshold ? fmt(*r.threshold) : "-"}});
      }
      return r.holds ? kOk : kViolation;
    }
    if (kind == "littlewood-offord") {
      const BigRational q = lo_exact_pm1(static_cast<int>(n), x);
      if (f == "json") {
        os << Json{{"n", static_cast<int>(n)}, {"x", x}, {"probability", rational_to_string(q)},
                   {"decimal", q.convert_to<double>()}}
                  .dump(2)
           << '\n';
      } else {
        os << rational_to_string(q) << " = " << fmt(q.convert_to<double>()) << '\n';
      }
      return kOk;
    }
    const double v = odd_degree_reducibility_lower_bound(static_cast<int>(n));
    if (f == "json") {
      os << Json{{"n", static_cast<int>(n)}, {"lower_bound", v}}.dump(2) << '\n';
    } else {
      os << fmt(v) << '\n';
    }
    return kOk;
  }
};

// --------------------------------------------------------------- ffcount

struct FfcountCmd {
  std::uint64_t q = 2;
  std::uint64_t n = 1;

  void add(CLI::App* app) {
    app->add_option("--q", q, "Field size, a prime power")->required();
    app->add_option("--n", n, "Degree")->required();
  }

  int run(const Global& g, std::ostream& os) const {
    const std::string f = format_or(g, "text", {"text", "json", "csv"});
    const BigInt c = ff_irreducible_count(q, n);
    if (f == "json") {
      os << Json{{"q", q}, {"n", n}, {"count", bigint_to_json(c)}}.dump(2) << '\n';
    } else if (f == "csv") {
      os << "q,n,count\n" << q << ',' << n << ',' << c << '\n';
    } else {
      os << c << '\n';
    }
    return kOk;
  }
};

// --------------------------------------------------------------- control

struct ControlCmd {
  std::string graph;
  ModelFlags model;
  std::uint64_t index = 0;
  int sweep = 0;
  unsigned workers = 0;

  void add(CLI::App* app) {
    app->add_option("--graph", graph, "Edge-list JSON file {\"n\":..,\"edges\":[[i,j],..]}");
    model.add_to(app);
    app->add_option("--index", index, "Stream index of the sampled graph");
    app->add_option("--sweep", sweep, "Check every labelled graph on this many vertices (<= 7)");
    app->add_option("--workers", workers, "Worker threads for --sweep (default: logical cores)");
  }

  int run(const Global& g, std::ostream& os) const {
    format_or(g, "json", {"json"});
    const int sources = (graph.empty() ? 0 : 1) + (model.given() ? 1 : 0) + (sweep > 0 ? 1 : 0);
    if (sources != 1) throw InvalidArgument("give exactly one of --graph, --model, --sweep");
    if (sweep > 0) {
      const GraphSweepSummary s = controllability_sweep(sweep, workers);
      Json bad = Json::array();
      for (auto m : s.violating_masks) bad.push_back(m);
      os << Json{{"n", s.n},
                 {"graphs", s.graphs},
                 {"irreducible", s.irreducible},
                 {"controllable", s.controllable},
                 {"minimally_controllable", s.minimally_controllable},
                 {"asymmetric_controllable", s.asymmetric},
                 {"skipped", s.skipped},
                 {"violations", s.violations},
                 {"violating_masks", std::move(bad)},
                 {"verdict", s.violations == 0 ? "holds" : "violation"}}
                .dump(2)
         << '\n';
      return s.violations == 0 ? kOk : kViolation;
    }
    Graph gr(1);
    if (!graph.empty()) {
      gr = graph_from_json(parse_json_text(read_file(graph), "--graph"));
    } else {
      const EnsembleSpec spec = model.spec();
      if (!std::holds_alternative<ErdosRenyi>(spec)) throw InvalidArgument("control --model supports erdos-renyi");
      gr = Graph::from_adjacency(std::get<IntMatrix>(sample(spec, SeedStream{g.seed, index})));
    }
    const ControllabilityCrossCheck c = controllability_cross_check(gr);
    os << cross_check_to_json(gr, c).dump(2) << '\n';
    return c.verdict == CrossCheckVerdict::Violation ? kViolation : kOk;
  }
};

// ---------------------------------------------------------------- census

struct CensusCmd {
  int n = 0;
  int to = 0;
  unsigned workers = 0;

  void add(CLI::App* app) {
    app->add_option("--n", n, "Degree (1..14)")->required();
    app->add_option("--to", to, "Run every degree from --n up to this one");
    app->add_option("--workers", workers, "Worker threads (default: logical cores)");
  }

  int run(const Global& g, std::ostream& os) const {
    const std::string f = format_or(g, "text", {"text", "json", "csv"});
    const int last = std::max(n, to);
    std::vector<CensusResult> results;
    for (int d = n; d <= last; ++d) results.push_back(exhaustive_reducibility(d, workers));
    if (f == "json") {
      Json a = Json::array();
      for (const auto& r : results) a.push_back(census_to_json(r));
      os << (results.size() == 1 ? a.at(0) : a).dump(2) << '\n';
    } else if (f == "csv") {
      os << "n,total,reducible,unknown,probability,decimal,pm1_root_probability\n";
      for (const auto& r : results) {
        os << r.n << ',' << r.total << ',' << r.reducible << ',' << r.unknown << ',' << rational_to_string(r.probability)
           << ',' << fmt(r.probability.convert_to<double>()) << ',' << rational_to_string(r.pm1_root_probability)
           << '\n';
      }
    } else {
      for (const auto& r : results) {
        std::string by;
        for (std::size_t d = 1; d < r.by_smallest_degree.size(); ++d) {
          by += (by.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(r.by_smallest_degree[d]);
        }
        aligned(os, {{"n", std::to_string(r.n)},
                     {"polynomials", std::to_string(r.total)},
                     {"reducible", std::to_string(r.reducible)},
                     {"unknown", std::to_string(r.unknown)},
                     {"fraction", fmt(r.probability.convert_to<double>())},
                     {"exact", rational_to_string(r.probability)},
                     {"smallest factor degree", by.empty() ? "-" : by},
                     {"P(f(1)=0 or f(-1)=0)", rational_to_string(r.pm1_root_probability)}});
      }
    }
    return kOk;
  }
};

std::uint64_t parse_seed(const std::string& s, const std::string& source) {
  try {
    std::size_t pos = 0;
    if (s.empty() || s[0] == '-') throw std::invalid_argument("negative");
    const unsigned long long v = std::stoull(s, &pos, 10);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError(source, "seed must be a non-negative 64-bit integer, got '" + s + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed) {
  CLI::App app{"Exact and Monte Carlo tools for random integer polynomials and matrices", "polylab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Global global;
  std::string seed_text;
  app.add_option("--seed", seed_text, "Master seed (fallback: POLYLAB_SEED, then a random seed)");
  app.add_option("--format", global.format, "Output format: csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--out", global.out_path, "Write the output to this file instead of standard output");

  FactorCmd factor;
  CharpolyCmd charpoly;
  SampleCmd sample_cmd;
  ExperimentCmd experiment;
  BoundsCmd bounds;
  FfcountCmd ffcount;
  ControlCmd control;
  CensusCmd census;

  auto* factor_app = app.add_subcommand("factor", "Low-degree factors or a full irreducibility verdict");
  factor.add(factor_app);
  auto* k_opt = factor_app->get_option("--k");
  charpoly.add(app.add_subcommand("charpoly", "Exact characteristic polynomial of an integer matrix"));
  sample_cmd.add(app.add_subcommand("sample", "Draw seeded samples from an ensemble"));
  experiment.add(app.add_subcommand("experiment", "Monte Carlo estimates, delocalization profiles, budget validation"));
  bounds.add(app.add_subcommand("bounds", "Evaluate the closed-form bounds"));
  ffcount.add(app.add_subcommand("ffcount", "Number of monic irreducible polynomials of degree n over F_q"));
  control.add(app.add_subcommand("control", "Graph controllability and its consistency checks"));
  census.add(app.add_subcommand("census", "Exhaustive reducibility census of monic +-1 polynomials"));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  // CLI11 expects argv-style input.
  std::vector<std::string> argv_store{"polylab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (!seed_text.empty()) {
      global.seed = parse_seed(seed_text, "--seed");
    } else if (env_seed && !env_seed->empty()) {
      global.seed = parse_seed(*env_seed, "POLYLAB_SEED");
    } else {
      std::random_device rd;
      global.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "seed: " << global.seed << '\n';

  std::ostringstream buf;
  int rc = kOk;
  try {
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "factor") rc = factor.run(global, buf, k_opt->count() > 0);
    if (name == "charpoly") rc = charpoly.run(global, buf);
    if (name == "sample") rc = sample_cmd.run(global, buf);
    if (name == "experiment") rc = experiment.run(global, buf);
    if (name == "bounds") rc = bounds.run(global, buf);
    if (name == "ffcount") rc = ffcount.run(global, buf);
    if (name == "control") rc = control.run(global, buf);
    if (name == "census") rc = census.run(global, buf);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const polylab::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (global.out_path.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(global.out_path, std::ios::binary | std::ios::trunc);
    file << buf.str();
    if (!file) {
      err << "error: cannot write '" << global.out_path << "'\n";
      return kUsage;
    }
  }
  return rc;
}

}  // namespace polylab::cli
