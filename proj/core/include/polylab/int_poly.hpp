#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polylab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored ascending by degree; the highest stored
/// coefficient is never zero, so the zero polynomial is the empty list and
/// has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly monomial(std::size_t degree, const BigInt& c = 1);
  /// z - r
  static IntPoly linear(const BigInt& r);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of z^i; zero past the degree.
  const BigInt& coeff(std::size_t i) const;
  const BigInt& leading() const;
  std::span<const BigInt> coeffs() const { return coeffs_; }

  IntPoly derivative() const;
  std::string to_string() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& s, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Canonical order: by degree, then coefficients lexicographically from c_0.
  friend std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b);

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

struct DivMod {
  IntPoly quotient;
  IntPoly remainder;
};

/// Exact division by a monic divisor: f = q*h + r with deg r < deg h.
/// Throws InvalidArgument for a zero, constant or non-monic divisor.
DivMod poly_divmod_monic(const IntPoly& f, const IntPoly& h);

bool poly_divides(const IntPoly& h, const IntPoly& f);

BigInt poly_eval_int(const IntPoly& f, const BigInt& x);

/// 1 + max |a_i| over the non-leading coefficients of a monic f. Every
/// complex root has modulus strictly below this value.
BigRational cauchy_root_bound(const IntPoly& f);

/// True when f is monic and every other coefficient is +1 or -1.
bool is_pm1_poly(const IntPoly& f);

}  // namespace polylab
