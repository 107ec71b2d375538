#ifndef CYBE_MATRIX_HPP
#define CYBE_MATRIX_HPP

#include "cybe/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cybe {

using Vec = std::vector<Scalar>;

/// Dense matrix over exact rationals. Desk-scale (n <= ~16), no sparsity.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n)
  {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Mat& o) const = default;

  Mat transpose() const
  {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const
  {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  bool is_skew() const
  {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  bool is_symmetric() const
  {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

inline Mat operator+(const Mat& a, const Mat& b)
{
  Mat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline Mat operator-(const Mat& a, const Mat& b)
{
  Mat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline Mat operator-(const Mat& a)
{
  Mat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

inline Mat operator*(const Mat& a, const Mat& b)
{
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

inline Mat operator*(const Scalar& s, const Mat& a)
{
  Mat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

inline Vec operator*(const Mat& a, const Vec& x)
{
  Vec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

inline Vec operator+(const Vec& a, const Vec& b)
{
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Vec operator-(const Vec& a, const Vec& b)
{
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Vec operator-(const Vec& a)
{
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

inline Vec operator*(const Scalar& s, const Vec& a)
{
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

inline Scalar dot(const Vec& a, const Vec& b)
{
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Vec& v)
{
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec unit_vec(std::size_t n, std::size_t i)
{
  Vec v(n);
  v[i] = 1;
  return v;
}

inline Scalar trace(const Mat& a)
{
  Scalar t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(Mat& m)
{
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Scalar inv = Scalar(1) / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Scalar f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

/// Basis of the nullspace {x : m x = 0}, as rows.
inline std::vector<Vec> kernel_basis(Mat m)
{
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(v);
  }
  return basis;
}

/// Canonical basis of the row space (nonzero rows of the rref).
inline std::vector<Vec> row_space_basis(Mat m)
{
  auto pivots = rref(m);
  std::vector<Vec> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Vec v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m(r, j);
    basis.push_back(v);
  }
  return basis;
}

inline Mat rows_to_mat(const std::vector<Vec>& rows, std::size_t cols)
{
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

inline Mat cols_to_mat(const std::vector<Vec>& cols, std::size_t rows)
{
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

/// One exact solution of a x = b, or nullopt when inconsistent.
inline std::optional<Vec> solve(const Mat& a, const Vec& b)
{
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

/// Exact inverse; nullopt when singular.
inline std::optional<Mat> inverse(const Mat& a)
{
  if (a.rows() != a.cols()) return std::nullopt;
  std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Membership of v in the span of the given rows.
inline bool in_span(const std::vector<Vec>& rows, const Vec& v)
{
  if (is_zero(v)) return true;
  if (rows.empty()) return false;
  Mat m = rows_to_mat(rows, v.size());
  return solve(m.transpose(), v).has_value();
}

} // namespace cybe

#endif
