#include "polylab/int_matrix.hpp"

#include <algorithm>

#include "polylab/error.hpp"

namespace polylab {

IntMatrix::IntMatrix(std::size_t n, std::vector<BigInt> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw InvalidArgument("matrix of dimension " + std::to_string(n) + " needs " +
                          std::to_string(n * n) + " entries, got " + std::to_string(entries_.size()));
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t n = rows.size();
  std::vector<BigInt> e;
  e.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidArgument("matrix rows must all have length " + std::to_string(n));
    for (long long v : row) e.emplace_back(v);
  }
  return IntMatrix(n, std::move(e));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = r + 1; c < n_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix product dimension mismatch");
  const std::size_t n = a.n_;
  IntMatrix p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix difference dimension mismatch");
  IntMatrix d(a.n_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) d.entries_[i] = a.entries_[i] - b.entries_[i];
  return d;
}

std::vector<BigInt> mat_vec(const IntMatrix& a, std::span<const BigInt> v) {
  const std::size_t n = a.dim();
  if (v.size() != n) throw InvalidArgument("matrix-vector dimension mismatch");
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
  return out;
}

BigInt mat_det_exact(const IntMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r, c);

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntPoly mat_charpoly_exact(const IntMatrix& a) {
  const std::size_t n = a.dim();
  // Forward differences of v(x) = det(xI - A) on x = 0..n.
  std::vector<BigInt> diff(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix shifted(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) shifted(r, c) = (r == c ? BigInt(x) : BigInt(0)) - a(r, c);
    diff[x] = mat_det_exact(shifted);
  }
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = n; i >= k; --i) diff[i] -= diff[i - 1];

  // v(x) = sum_k (Delta^k v(0) / k!) * x(x-1)...(x-k+1); each quotient is an
  // integer because v has integer coefficients.
  IntPoly result;
  IntPoly falling{1};
  BigInt factorial = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      factorial *= k;
      falling = falling * IntPoly::linear(BigInt(k - 1));
    }
    BigInt q, r;
    divide_qr(diff[k], factorial, q, r);
    if (r != 0) throw Error("non-integral Newton coefficient in characteristic polynomial");
    if (q != 0) result = result + q * falling;
  }
  return result;
}

std::size_t rank_exact(std::vector<std::vector<BigInt>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[rank], m[p]);
    const BigInt& piv = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[i][j] * piv - m[i][c] * m[rank][j]) / prev;
      m[i][c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

BigInt matrix_eigenvalue_bound(const IntMatrix& a) {
  BigInt mx = 0;
  for (const auto& e : a.entries()) mx = std::max(mx, BigInt(abs(e)));
  return mx * a.dim();
}

}  // namespace polylab
