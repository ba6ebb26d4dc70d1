#include "polylab/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>

#include <nlohmann/json.hpp>

#include "polylab/bounds.hpp"
#include "polylab/candidates.hpp"
#include "polylab/error.hpp"
#include "polylab/factor_search.hpp"

namespace polylab {

void RegionSpec::validate() const {
  if (!(M > 0.0) || !std::isfinite(M)) throw InvalidArgument("region radius M must be a positive number");
  for (long long e : excluded) {
    if (std::abs(static_cast<double>(e)) > M) {
      throw InvalidArgument("excluded point " + std::to_string(e) + " lies outside |z| <= M");
    }
  }
}

bool RegionSpec::contains(Complex z) const {
  const double r = std::abs(z);
  if (r > M + 1e-9) return false;
  if (real_only && std::abs(z.imag()) > 1e-9 * std::max(1.0, r)) return false;
  for (long long e : excluded) {
    if (std::abs(z - Complex(static_cast<double>(e), 0.0)) < 1e-9) return false;
  }
  return true;
}

bool RegionSpec::contains_integer(const BigInt& r) const {
  if (abs(r).convert_to<double>() > M) return false;
  for (long long e : excluded) {
    if (r == e) return false;
  }
  return true;
}

std::string statistic_name(const Statistic& s) {
  struct {
    std::string operator()(const Reducible&) const { return "reducible"; }
    std::string operator()(const HasFactorDegAtMost&) const { return "has-factor-deg-at-most"; }
    std::string operator()(const IntegerPointRoot& p) const { return "integer-point-root:" + std::to_string(p.x); }
    std::string operator()(const MinPolyDivides&) const { return "minpoly-divides"; }
    std::string operator()(const Singular&) const { return "singular"; }
    std::string operator()(const TrivialEigenvalueMultiplicityAtLeast2&) const {
      return "trivial-eigenvalue-multiplicity-2";
    }
  } visitor;
  return std::visit(visitor, s);
}

int statistic_k(const Statistic& s) {
  if (const auto* h = std::get_if<HasFactorDegAtMost>(&s)) return h->k;
  if (const auto* m = std::get_if<MinPolyDivides>(&s)) return m->g.degree();
  return 0;
}

void validate(const ExperimentConfig& config) {
  polylab::validate(config.spec);
  if (config.trials == 0) throw InvalidArgument("trials must be >= 1");
  if (config.region) config.region->validate();
  const bool matrix = is_matrix_model(config.spec);
  if (std::holds_alternative<Singular>(config.statistic) && !matrix) {
    throw InvalidArgument("statistic 'singular' needs a matrix ensemble");
  }
  if (std::holds_alternative<TrivialEigenvalueMultiplicityAtLeast2>(config.statistic) &&
      !std::holds_alternative<FixedOutdegree>(config.spec)) {
    throw InvalidArgument("the trivial eigenvalue statistic needs the fixed-outdegree ensemble");
  }
  if (const auto* h = std::get_if<HasFactorDegAtMost>(&config.statistic); h && h->k < 1) {
    throw InvalidArgument("k must be >= 1");
  }
  if (const auto* m = std::get_if<MinPolyDivides>(&config.statistic)) {
    if (m->g.degree() < 1 || !m->g.is_monic()) throw InvalidArgument("g must be monic of degree >= 1");
  }
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  WilsonInterval w{center - half, center + half};
  w.lo = std::clamp(w.lo, 0.0, p);
  w.hi = std::clamp(w.hi, p, 1.0);
  return w;
}

EstimateRecord make_record(const ExperimentConfig& config, std::uint64_t successes, std::uint64_t unknown) {
  EstimateRecord r;
  r.model = model_name(config.spec);
  r.n = spec_dimension(config.spec);
  r.statistic = statistic_name(config.statistic);
  r.k = statistic_k(config.statistic);
  r.M = config.region ? config.region->M : 0.0;
  r.trials = config.trials;
  r.successes = successes;
  r.unknown = unknown;
  r.p_hat = static_cast<double>(successes) / static_cast<double>(config.trials);
  const auto w = wilson_interval(successes, config.trials);
  r.ci_lo = w.lo;
  r.ci_hi = w.hi;
  r.seed = config.seed;
  return r;
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

IntPoly polynomial_of(const Sample& s) {
  if (const auto* p = std::get_if<IntPoly>(&s)) return *p;
  return mat_charpoly_exact(std::get<IntMatrix>(s));
}

bool factor_meets_region(const IntPoly& g, const std::optional<RegionSpec>& region) {
  if (!region) return true;
  if (g.degree() == 1) return region->contains_integer(-g.coeff(0));
  RootSet rs = find_roots(g);
  if (!rs.converged) rs = refine_roots(g, std::move(rs));
  for (const auto& z : rs.roots) {
    if (region->contains(z)) return true;
  }
  return false;
}

}  // namespace

std::optional<bool> evaluate_statistic(const Statistic& statistic, const EnsembleSpec& spec, const Sample& s,
                                       const std::optional<RegionSpec>& region) {
  if (std::holds_alternative<Singular>(statistic)) {
    return mat_det_exact(std::get<IntMatrix>(s)) == 0;
  }
  const IntPoly f = polynomial_of(s);
  if (std::holds_alternative<Reducible>(statistic)) {
    const FactorReport r = classify_irreducibility(f);
    if (r.status == FactorStatus::Unknown) return std::nullopt;
    return r.status == FactorStatus::Reducible;
  }
  if (const auto* h = std::get_if<HasFactorDegAtMost>(&statistic)) {
    const FactorReport r = low_degree_factors(f, h->k);
    for (const auto& g : r.factors) {
      if (factor_meets_region(g.poly, region)) return true;
    }
    if (r.status == FactorStatus::Unknown) return std::nullopt;
    return false;
  }
  if (const auto* p = std::get_if<IntegerPointRoot>(&statistic)) {
    return poly_eval_int(f, BigInt(p->x)) == 0;
  }
  if (const auto* m = std::get_if<MinPolyDivides>(&statistic)) {
    return poly_divides(m->g, f);
  }
  const int s_out = std::get<FixedOutdegree>(spec).s;
  const IntPoly lin = IntPoly::linear(BigInt(s_out));
  return poly_divides(lin * lin, f);
}

EstimateRecord mc_estimate(const ExperimentConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::uint64_t> successes{0};
  std::atomic<std::uint64_t> unknown{0};
  parallel_trials(config.trials, resolve_workers(config.workers), [&](std::uint64_t i) {
    const Sample s = sample(config.spec, SeedStream{config.seed, i});
    const auto hit = evaluate_statistic(config.statistic, config.spec, s, config.region);
    if (!hit) {
      unknown.fetch_add(1, std::memory_order_relaxed);
    } else if (*hit) {
      successes.fetch_add(1, std::memory_order_relaxed);
    }
  });
  EstimateRecord r = make_record(config, successes.load(), unknown.load());
  if (config.timing) {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

IntPoly rademacher_poly_from_bits(int n, std::uint64_t bits) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = ((bits >> i) & 1u) ? -1 : 1;
  c[static_cast<std::size_t>(n)] = 1;
  return IntPoly(std::move(c));
}

CensusResult exhaustive_reducibility(int n, unsigned workers) {
  if (n < 1 || n > 14) throw InvalidArgument("exhaustive census supports 1 <= n <= 14");
  const std::uint64_t total = std::uint64_t{1} << n;
  // -1: unknown, 0: irreducible, d > 0: smallest factor degree.
  std::vector<signed char> smallest(total, 0);
  std::vector<unsigned char> pm1(total, 0);
  parallel_trials(total, resolve_workers(workers), [&](std::uint64_t bits) {
    const IntPoly f = rademacher_poly_from_bits(n, bits);
    pm1[bits] = poly_eval_int(f, BigInt(1)) == 0 || poly_eval_int(f, BigInt(-1)) == 0;
    const SmallestFactor sf = smallest_factor_degree(f);
    if (sf.status == FactorStatus::Reducible) {
      smallest[bits] = static_cast<signed char>(sf.degree);
    } else if (sf.status == FactorStatus::Unknown) {
      smallest[bits] = -1;
    }
  });
  CensusResult r;
  r.n = n;
  r.total = total;
  r.by_smallest_degree.assign(static_cast<std::size_t>(n / 2) + 1, 0);
  std::uint64_t pm1_count = 0;
  for (std::uint64_t b = 0; b < total; ++b) {
    pm1_count += pm1[b];
    if (smallest[b] < 0) {
      ++r.unknown;
    } else if (smallest[b] > 0) {
      ++r.reducible;
      ++r.by_smallest_degree[static_cast<std::size_t>(smallest[b])];
    }
  }
  r.probability = BigRational(BigInt(r.reducible), BigInt(total));
  r.pm1_root_probability = BigRational(BigInt(pm1_count), BigInt(total));
  return r;
}

namespace {

// Divisibility prefilter: if g | f over the integers then also modulo the
// Mersenne prime 2^61 - 1.
constexpr std::uint64_t kFilterPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(x & kFilterPrime) + static_cast<std::uint64_t>(x >> 61);
  if (r >= kFilterPrime) r -= kFilterPrime;
  return r;
}

std::uint64_t reduce(const BigInt& c) {
  BigInt r = c % kFilterPrime;
  if (r < 0) r += kFilterPrime;
  return r.convert_to<std::uint64_t>();
}

std::vector<std::uint64_t> reduce_poly(const IntPoly& f) {
  std::vector<std::uint64_t> out;
  for (const auto& c : f.coeffs()) out.push_back(reduce(c));
  return out;
}

// Remainder of monic g dividing f, both reduced; true iff it vanishes.
bool divides_mod_p(const std::vector<std::uint64_t>& g, std::vector<std::uint64_t> f) {
  const std::size_t dg = g.size() - 1;
  if (f.size() < g.size()) return false;
  for (std::size_t i = f.size() - 1; i >= dg; --i) {
    const std::uint64_t q = f[i];
    if (q != 0) {
      for (std::size_t j = 0; j <= dg; ++j) {
        const std::uint64_t t = mulmod(q, g[j]);
        std::uint64_t& slot = f[i - dg + j];
        slot = slot >= t ? slot - t : slot + kFilterPrime - t;
      }
    }
    if (i == dg) break;
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (f[i] != 0) return false;
  }
  return true;
}

struct Candidate {
  IntPoly g;
  std::vector<std::uint64_t> reduced;
};

std::vector<Candidate> irreducible_candidates(int k, double M, const std::optional<RegionSpec>& region) {
  RegionSpec disk;
  disk.M = M;
  const RegionSpec& omega = region ? *region : disk;
  std::vector<Candidate> out;
  BigInt total = 0;
  for (int d = 1; d <= k; ++d) total += CandidateBox::make(d, BigRational(M)).cardinality();
  if (total > kDefaultCandidateCeiling) throw CeilingExceeded(total, kDefaultCandidateCeiling);
  for (int d = 1; d <= k; ++d) {
    CandidateStream stream = enumerate_candidates(d, BigRational(M));
    while (auto g = stream.next()) {
      if (d >= 2 && classify_irreducibility(*g).status != FactorStatus::Irreducible) continue;
      if (!factor_meets_region(*g, omega)) continue;
      out.push_back({*g, reduce_poly(*g)});
    }
  }
  return out;
}

}  // namespace

DelocalizationProfile delocalization_profile(const EnsembleSpec& spec, int k, double M, std::uint64_t trials,
                                             std::uint64_t seed, const std::optional<RegionSpec>& region,
                                             unsigned workers) {
  polylab::validate(spec);
  if (k < 1) throw InvalidArgument("k must be >= 1");
  if (!(M >= 1.0)) throw InvalidArgument("M must be >= 1");
  if (trials == 0) throw InvalidArgument("trials must be >= 1");
  if (region) region->validate();

  const std::vector<Candidate> cands = irreducible_candidates(k, M, region);
  std::vector<std::atomic<std::uint64_t>> hits(cands.size());
  parallel_trials(trials, resolve_workers(workers), [&](std::uint64_t i) {
    const IntPoly f = sample_polynomial(spec, SeedStream{seed, i});
    const auto fr = reduce_poly(f);
    for (std::size_t c = 0; c < cands.size(); ++c) {
      if (cands[c].g.degree() > f.degree()) continue;
      if (!divides_mod_p(cands[c].reduced, fr)) continue;
      if (poly_divides(cands[c].g, f)) hits[c].fetch_add(1, std::memory_order_relaxed);
    }
  });

  DelocalizationProfile p;
  p.model = model_name(spec);
  p.n = spec_dimension(spec);
  p.k = k;
  p.M = M;
  p.trials = trials;
  p.seed = seed;
  p.candidates = cands.size();
  std::uint64_t best = 0;
  for (std::size_t c = 0; c < cands.size(); ++c) {
    const std::uint64_t h = hits[c].load();
    if (h == 0) continue;
    CandidateFrequency cf{cands[c].g, h, static_cast<double>(h) / static_cast<double>(trials), wilson_interval(h, trials)};
    if (h > best) {
      best = h;
      p.argmax = cf.g;
    }
    p.nonzero.push_back(std::move(cf));
  }
  p.p_hat = static_cast<double>(best) / static_cast<double>(trials);
  return p;
}

ValidationReport validate_root_budget(const ValidationConfig& config) {
  polylab::validate(config.spec);
  if (config.k < 1) throw InvalidArgument("k must be >= 1");
  if (config.trials == 0) throw InvalidArgument("trials must be >= 1");
  if (config.region) config.region->validate();

  std::mutex mutex;
  std::map<IntPoly, std::uint64_t> counts;
  std::atomic<std::uint64_t> events{0};
  std::atomic<std::uint64_t> unknown{0};
  std::atomic<std::uint64_t> tail_events{0};
  BigRational max_cauchy = 1;

  parallel_trials(config.trials, resolve_workers(config.workers), [&](std::uint64_t i) {
    const IntPoly f = sample_polynomial(config.spec, SeedStream{config.seed, i});
    if (config.region) {
      // Tail: some root outside |z| <= M. Unsettled root moduli count as tail.
      if (cauchy_root_bound(f) > BigRational(static_cast<long long>(std::floor(config.region->M)))) {
        const auto mm = max_root_modulus(f);
        if (!mm || *mm > config.region->M + 1e-9) tail_events.fetch_add(1, std::memory_order_relaxed);
      }
    } else {
      const BigRational c = cauchy_root_bound(f);
      std::lock_guard lock(mutex);
      if (c > max_cauchy) max_cauchy = c;
    }
    const FactorReport r = low_degree_factors(f, config.k);
    std::vector<const IntPoly*> in_region;
    for (const auto& g : r.factors) {
      if (factor_meets_region(g.poly, config.region)) in_region.push_back(&g.poly);
    }
    if (!in_region.empty()) {
      events.fetch_add(1, std::memory_order_relaxed);
      std::lock_guard lock(mutex);
      for (const IntPoly* g : in_region) ++counts[*g];
    } else if (r.status == FactorStatus::Unknown) {
      unknown.fetch_add(1, std::memory_order_relaxed);
    }
  });

  ValidationReport rep;
  rep.model = model_name(config.spec);
  rep.n = spec_dimension(config.spec);
  rep.k = config.k;
  rep.cauchy_M = !config.region;
  rep.M = config.region ? config.region->M : max_cauchy.convert_to<double>();
  rep.trials = config.trials;
  rep.seed = config.seed;
  rep.events = events.load();
  rep.unknown = unknown.load();
  rep.tail_events = tail_events.load();
  const double trials = static_cast<double>(config.trials);
  rep.empirical = static_cast<double>(rep.events) / trials;
  rep.tail = static_cast<double>(rep.tail_events) / trials;
  std::uint64_t best = 0;
  for (const auto& [g, c] : counts) {
    if (c > best) {
      best = c;
      rep.argmax = g;
    }
  }
  rep.p_hat = static_cast<double>(best) / trials;
  rep.budget = low_degree_root_budget(rep.p_hat, std::max(1.0, rep.M), config.k, rep.tail);
  rep.holds = rep.empirical <= rep.budget;
  return rep;
}

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

void write_report(const std::vector<EstimateRecord>& records, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Csv) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
      out << r.model << ',' << r.n << ',' << r.statistic << ',' << r.k << ',' << fmt(r.M) << ',' << r.trials << ','
          << r.successes << ',' << fmt(r.p_hat) << ',' << fmt(r.ci_lo) << ',' << fmt(r.ci_hi) << ',' << r.seed << ','
          << fmt(r.seconds) << '\n';
    }
    return;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    arr.push_back({{"model", r.model},
                   {"n", r.n},
                   {"statistic", r.statistic},
                   {"k", r.k},
                   {"M", r.M},
                   {"trials", r.trials},
                   {"successes", r.successes},
                   {"unknown", r.unknown},
                   {"p_hat", r.p_hat},
                   {"ci_lo", r.ci_lo},
                   {"ci_hi", r.ci_hi},
                   {"seed", std::to_string(r.seed)},
                   {"seconds", r.seconds},
                   {"shared", r.shared}});
  }
  out << arr.dump(2) << '\n';
}

void emit_report(const std::vector<EstimateRecord>& records, ReportFormat format, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write_report(records, format, file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace polylab
