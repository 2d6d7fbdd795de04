#pragma once

// Dense matrices with element type T and generic algorithms parameterized by
// a ring/field object that supplies the arithmetic.

#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bigmono::linalg {

template <class R>
concept Ring = requires(const R &r, const typename R::value_type &a) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.neg(a) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
};

template <class F>
concept Field = Ring<F> && requires(const F &f, const typename F::value_type &a) {
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
};

template <class T>
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T &fill = T{})
    : rows_(rows), cols_(cols), data_(rows * cols, fill)
  {
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T> &data() const { return data_; }

  std::vector<T> row(std::size_t r) const
  {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }
  std::vector<T> col(std::size_t c) const
  {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      out[r] = (*this)(r, c);
    return out;
  }

  bool operator==(const Matrix &) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Ring R>
Matrix<typename R::value_type> identity(const R &ring, std::size_t n)
{
  Matrix<typename R::value_type> m(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = ring.one();
  return m;
}

template <Ring R>
Matrix<typename R::value_type> multiply(const R &ring, const Matrix<typename R::value_type> &a,
                                        const Matrix<typename R::value_type> &b)
{
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix dimension mismatch in multiply");
  Matrix<typename R::value_type> out(a.rows(), b.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto &aik = a(i, k);
      if (ring.is_zero(aik))
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = ring.add(out(i, j), ring.mul(aik, b(k, j)));
    }
  return out;
}

template <Ring R>
std::vector<typename R::value_type> apply(const R &ring, const Matrix<typename R::value_type> &a,
                                          const std::vector<typename R::value_type> &v)
{
  if (a.cols() != v.size())
    throw std::invalid_argument("matrix/vector dimension mismatch");
  std::vector<typename R::value_type> out(a.rows(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[i] = ring.add(out[i], ring.mul(a(i, j), v[j]));
  return out;
}

template <Ring R>
Matrix<typename R::value_type> subtract(const R &ring, const Matrix<typename R::value_type> &a,
                                        const Matrix<typename R::value_type> &b)
{
  Matrix<typename R::value_type> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = ring.sub(a(i, j), b(i, j));
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T> &a)
{
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(j, i) = a(i, j);
  return out;
}

template <Ring R>
bool is_zero_matrix(const R &ring, const Matrix<typename R::value_type> &a)
{
  for (const auto &x : a.data())
    if (!ring.is_zero(x))
      return false;
  return true;
}

template <Ring R>
bool is_zero_vector(const R &ring, const std::vector<typename R::value_type> &v)
{
  for (const auto &x : v)
    if (!ring.is_zero(x))
      return false;
  return true;
}

/// Row-reduced echelon form in place; returns pivot columns.
template <Field F>
std::vector<std::size_t> row_reduce(const F &field, Matrix<typename F::value_type> &m)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && field.is_zero(m(piv, c)))
      ++piv;
    if (piv == m.rows())
      continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(piv, j), m(r, j));
    const auto inv = field.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j)
      m(r, j) = field.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m(i, c)))
        continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <Field F>
std::size_t rank(const F &field, Matrix<typename F::value_type> m)
{
  return row_reduce(field, m).size();
}

/// Basis of {x : m x = 0}, in the canonical RREF parametrization (one
/// vector per free column, with a 1 in that column).
template <Field F>
std::vector<std::vector<typename F::value_type>> nullspace(const F &field,
                                                           Matrix<typename F::value_type> m)
{
  const auto pivots = row_reduce(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    std::vector<typename F::value_type> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = field.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field F>
std::optional<Matrix<typename F::value_type>> inverse(const F &field,
                                                      const Matrix<typename F::value_type> &a)
{
  const std::size_t n = a.rows();
  if (n != a.cols())
    throw std::invalid_argument("inverse of a non-square matrix");
  Matrix<typename F::value_type> aug(n, 2 * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    aug(i, n + i) = field.one();
  }
  const auto pivots = row_reduce(field, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  Matrix<typename F::value_type> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = aug(i, n + j);
  return out;
}

template <Field F>
typename F::value_type determinant(const F &field, Matrix<typename F::value_type> m)
{
  const std::size_t n = m.rows();
  auto det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && field.is_zero(m(piv, c)))
      ++piv;
    if (piv == n)
      return field.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(piv, j), m(c, j));
      det = field.neg(det);
    }
    det = field.mul(det, m(c, c));
    const auto inv = field.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (field.is_zero(m(i, c)))
        continue;
      const auto factor = field.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j)
        m(i, j) = field.sub(m(i, j), field.mul(factor, m(c, j)));
    }
  }
  return det;
}

/// Incrementally maintained reduced echelon basis of a subspace.
template <Field F>
class EchelonBasis
{
public:
  using value_type = typename F::value_type;

  EchelonBasis(const F &field, std::size_t dim) : field_(&field), dim_(dim) {}

  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient_dimension() const { return dim_; }
  const std::vector<std::vector<value_type>> &rows() const { return rows_; }

  /// Reduces v against the basis; returns the residue.
  std::vector<value_type> reduce(std::vector<value_type> v) const
  {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto c = pivots_[k];
      if (field_->is_zero(v[c]))
        continue;
      const auto factor = v[c];
      for (std::size_t j = c; j < dim_; ++j)
        v[j] = field_->sub(v[j], field_->mul(factor, rows_[k][j]));
    }
    return v;
  }

  bool contains(const std::vector<value_type> &v) const
  {
    return is_zero_vector(*field_, reduce(v));
  }

  /// Adds v; returns true when the span grew.
  bool insert(const std::vector<value_type> &v)
  {
    auto r = reduce(v);
    std::size_t c = 0;
    while (c < dim_ && field_->is_zero(r[c]))
      ++c;
    if (c == dim_)
      return false;
    const auto inv = field_->inv(r[c]);
    for (std::size_t j = c; j < dim_; ++j)
      r[j] = field_->mul(r[j], inv);
    // keep the basis fully reduced so that reduce() is a single pass
    for (auto &row : rows_) {
      if (field_->is_zero(row[c]))
        continue;
      const auto factor = row[c];
      for (std::size_t j = c; j < dim_; ++j)
        row[j] = field_->sub(row[j], field_->mul(factor, r[j]));
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(c);
    return true;
  }

private:
  const F *field_;
  std::size_t dim_;
  std::vector<std::vector<value_type>> rows_;
  std::vector<std::size_t> pivots_;
};

} // namespace bigmono::linalg
