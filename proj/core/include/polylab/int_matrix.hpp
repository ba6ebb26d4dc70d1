#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "polylab/int_poly.hpp"

namespace polylab {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  /// Throws InvalidArgument unless entries.size() == n*n.
  IntMatrix(std::size_t n, std::vector<BigInt> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t dim() const { return n_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  std::span<const BigInt> entries() const { return entries_; }

  IntMatrix transpose() const;
  bool is_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> entries_;
};

std::vector<BigInt> mat_vec(const IntMatrix& a, std::span<const BigInt> v);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
BigInt mat_det_exact(const IntMatrix& a);

/// det(zI - A), evaluated exactly at z = 0..n with Bareiss and recovered by
/// exact Newton interpolation on the integer grid.
IntPoly mat_charpoly_exact(const IntMatrix& a);

/// Rank of a rows x cols integer matrix by fraction-free elimination.
std::size_t rank_exact(std::vector<std::vector<BigInt>> rows);

/// n * max |a_ij|: bounds every eigenvalue modulus. For +-1 matrices this is n.
BigInt matrix_eigenvalue_bound(const IntMatrix& a);

}  // namespace polylab
