#include "polylab/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "polylab/error.hpp"
#include "polylab/number_theory.hpp"

namespace polylab {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint64_t, IntPoly>& cyclotomic_cache() {
  static std::map<std::uint64_t, IntPoly> cache;
  return cache;
}

std::map<std::uint64_t, std::vector<std::uint64_t>>& totient_cache() {
  static std::map<std::uint64_t, std::vector<std::uint64_t>> cache;
  return cache;
}

IntPoly compute_cyclotomic(std::uint64_t index) {
  IntPoly num = IntPoly::monomial(index) - IntPoly{1};
  for (std::uint64_t d : divisors(index)) {
    if (d == index) continue;
    auto dm = poly_divmod_monic(num, cyclotomic(d));
    if (!dm.remainder.is_zero()) throw Error("cyclotomic division left a remainder");
    num = std::move(dm.quotient);
  }
  return num;
}

}  // namespace

IntPoly cyclotomic(std::uint64_t index) {
  if (index < 1) throw InvalidArgument("cyclotomic index must be >= 1");
  {
    std::lock_guard lock(cache_mutex());
    auto it = cyclotomic_cache().find(index);
    if (it != cyclotomic_cache().end()) return it->second;
  }
  IntPoly phi = compute_cyclotomic(index);
  std::lock_guard lock(cache_mutex());
  return cyclotomic_cache().emplace(index, std::move(phi)).first->second;
}

std::vector<std::uint64_t> inverse_totient(std::uint64_t d) {
  if (d < 1) throw InvalidArgument("inverse totient needs d >= 1");
  {
    std::lock_guard lock(cache_mutex());
    auto it = totient_cache().find(d);
    if (it != totient_cache().end()) return it->second;
  }
  // kk = prod p^e with every p - 1 dividing d; walk the primes in increasing
  // order, peeling p - 1 and then powers of p off the remaining totient.
  std::vector<std::uint64_t> primes;
  for (std::uint64_t t : divisors(d))
    if (is_prime(t + 1)) primes.push_back(t + 1);
  std::vector<std::uint64_t> out;
  auto search = [&](auto&& self, std::size_t from, std::uint64_t rest, std::uint64_t kk) -> void {
    if (rest == 1) out.push_back(kk);
    for (std::size_t i = from; i < primes.size(); ++i) {
      const std::uint64_t p = primes[i];
      if (p - 1 > rest) break;
      if (rest % (p - 1) != 0) continue;
      std::uint64_t r = rest / (p - 1);
      std::uint64_t pk = kk * p;
      while (true) {
        self(self, i + 1, r, pk);
        if (r % p != 0) break;
        r /= p;
        pk *= p;
      }
    }
  };
  search(search, 0, d, 1);
  std::sort(out.begin(), out.end());
  std::lock_guard lock(cache_mutex());
  totient_cache().emplace(d, out);
  return out;
}

std::vector<CyclotomicFactor> cyclotomic_factors(const IntPoly& f, int dmax) {
  std::vector<CyclotomicFactor> out;
  for (int d = 1; d <= std::min(dmax, f.degree()); ++d) {
    for (std::uint64_t kk : inverse_totient(static_cast<std::uint64_t>(d))) {
      IntPoly phi = cyclotomic(kk);
      if (poly_divides(phi, f)) out.push_back({kk, std::move(phi)});
    }
  }
  return out;
}

bool rademacher_structural_certificate(int n) {
  if (n < 1) throw InvalidArgument("degree must be >= 1");
  const auto m = static_cast<std::uint64_t>(n) + 1;
  if (!is_prime(m)) return false;
  auto order = multiplicative_order(2 % m, m);
  return order && *order == static_cast<std::uint64_t>(n);
}

namespace {

// Dense polynomials over F_p, ascending, trimmed.
using PolyP = std::vector<std::uint64_t>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

PolyP reduce(const IntPoly& f, std::uint64_t p) {
  PolyP out;
  const BigInt bp = p;
  for (const auto& c : f.coeffs()) {
    BigInt r = c % bp;
    if (r < 0) r += bp;
    out.push_back(r.convert_to<std::uint64_t>());
  }
  trim(out);
  return out;
}

// a mod m, m monic.
PolyP mod_poly(PolyP a, const PolyP& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::uint64_t t = a[i];
    if (t == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = (a[i - dm + j] + (p - t) * m[j]) % p;
  }
  if (a.size() > dm) a.resize(dm);
  trim(a);
  return a;
}

PolyP mul_mod(const PolyP& a, const PolyP& b, const PolyP& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return mod_poly(std::move(r), m, p);
}

PolyP pow_poly_mod(PolyP base, std::uint64_t e, const PolyP& m, std::uint64_t p) {
  PolyP r{1};
  while (e) {
    if (e & 1) r = mul_mod(r, base, m, p);
    e >>= 1;
    if (e) base = mul_mod(base, base, m, p);
  }
  return r;
}

PolyP gcd_poly(PolyP a, PolyP b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    const std::uint64_t inv = inv_mod(b.back(), p);
    for (auto& c : b) c = c * inv % p;
    a = mod_poly(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

PolyP sub_x(PolyP a, std::uint64_t p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

}  // namespace

bool irreducible_mod_p(const IntPoly& f, std::uint64_t p) {
  if (!f.is_monic()) throw InvalidArgument("mod-p test needs a monic polynomial");
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  PolyP fp = reduce(f, p);

  PolyP deriv;
  for (std::size_t i = 1; i < fp.size(); ++i) deriv.push_back(fp[i] * (i % p) % p);
  trim(deriv);
  if (deriv.empty() || gcd_poly(fp, deriv, p).size() > 1) return false;

  // frob[i] = x^(p^i) mod f
  std::vector<PolyP> frob(static_cast<std::size_t>(n) + 1);
  frob[0] = mod_poly(PolyP{0, 1}, fp, p);
  for (int i = 1; i <= n; ++i) frob[i] = pow_poly_mod(frob[i - 1], p, fp, p);
  if (!sub_x(frob[n], p).empty()) return false;
  for (const auto& pp : factorize(static_cast<std::uint64_t>(n))) {
    PolyP g = gcd_poly(fp, sub_x(frob[n / pp.prime], p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::optional<std::uint64_t> modp_irreducibility_certificate(const IntPoly& f,
                                                             std::span<const std::uint64_t> primes) {
  for (std::uint64_t p : primes)
    if (irreducible_mod_p(f, p)) return p;
  return std::nullopt;
}

}  // namespace polylab
