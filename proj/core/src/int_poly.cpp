#include "polylab/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "polylab/error.hpp"

namespace polylab {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const BigInt& r) { return IntPoly(std::vector<BigInt>{-r, 1}); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * i;
  return IntPoly(std::move(d));
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << "z";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const BigInt& s, const IntPoly& a) {
  std::vector<BigInt> r(a.coeffs_);
  for (auto& c : r) c *= s;
  return IntPoly(std::move(r));
}

std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b) {
  if (auto cmp = a.degree() <=> b.degree(); cmp != 0) return cmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] < b.coeffs_[i]) return std::strong_ordering::less;
    if (a.coeffs_[i] > b.coeffs_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

DivMod poly_divmod_monic(const IntPoly& f, const IntPoly& h) {
  if (h.degree() < 1) throw InvalidArgument("divisor must have degree >= 1");
  if (!h.is_monic()) throw InvalidArgument("divisor must be monic: " + h.to_string());
  const int dh = h.degree();
  if (f.degree() < dh) return {IntPoly{}, f};

  std::vector<BigInt> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<BigInt> quo(static_cast<std::size_t>(f.degree() - dh + 1));
  auto hc = h.coeffs();
  for (int i = f.degree(); i >= dh; --i) {
    const BigInt t = rem[i];
    if (t == 0) continue;
    quo[i - dh] = t;
    for (int j = 0; j <= dh; ++j) rem[i - dh + j] -= t * hc[j];
  }
  rem.resize(static_cast<std::size_t>(dh));
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

bool poly_divides(const IntPoly& h, const IntPoly& f) {
  return poly_divmod_monic(f, h).remainder.is_zero();
}

BigInt poly_eval_int(const IntPoly& f, const BigInt& x) {
  BigInt acc = 0;
  auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

BigRational cauchy_root_bound(const IntPoly& f) {
  if (f.degree() < 1) throw InvalidArgument("root bound needs degree >= 1");
  if (!f.is_monic()) throw InvalidArgument("root bound needs a monic polynomial");
  BigInt m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, BigInt(abs(f.coeff(i))));
  return BigRational(1 + m);
}

bool is_pm1_poly(const IntPoly& f) {
  if (f.degree() < 1 || !f.is_monic()) return false;
  for (int i = 0; i < f.degree(); ++i) {
    if (abs(f.coeff(i)) != 1) return false;
  }
  return true;
}

}  // namespace polylab
