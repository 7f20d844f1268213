// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdim/field.hpp"

namespace fdalg {

class Subspace;

/// Dense row-major matrix over GF(p). Vectors are rows and act on the left: v -> v * M.
class Matrix {
 public:
  Matrix() = default;
  Matrix(PrimeField f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(PrimeField f, std::size_t rows, std::size_t cols, Vec data)
      : f_(f), rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows * cols, ErrorKind::InvalidArgument, "matrix data size mismatch");
  }
  Matrix(PrimeField f, std::initializer_list<std::initializer_list<long long>> rows) : f_(f) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      require(r.size() == cols_, ErrorKind::InvalidArgument, "ragged matrix literal");
      for (long long v : r) data_.push_back(f.from_int(v));
    }
  }

  static Matrix identity(PrimeField f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(PrimeField f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == cols, ErrorKind::InvalidArgument, "row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.row_ptr(i));
    }
    return m;
  }

  const PrimeField& field() const noexcept { return f_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  const Vec& data() const noexcept { return data_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Scalar* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const Scalar* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
  std::span<const Scalar> row_span(std::size_t i) const { return {row_ptr(i), cols_}; }
  Vec row(std::size_t i) const { return Vec(row_ptr(i), row_ptr(i) + cols_); }
  void set_row(std::size_t i, std::span<const Scalar> v) {
    require(v.size() == cols_, ErrorKind::InvalidArgument, "row length mismatch");
    std::copy(v.begin(), v.end(), row_ptr(i));
  }
  std::vector<Vec> row_list() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  bool is_zero() const { return fdalg::is_zero(data_); }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    require(cols_ == o.rows_, ErrorKind::InvalidArgument, "matrix product dimension mismatch");
    Matrix r(f_, rows_, o.cols_);
    const std::uint64_t p = f_.p();
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      const Scalar* a = row_ptr(i);
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint64_t aik = a[k];
        if (!aik) continue;
        const Scalar* b = o.row_ptr(k);
        for (std::size_t j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + aik * b[j]) % p;
      }
      Scalar* out = r.row_ptr(i);
      for (std::size_t j = 0; j < o.cols_; ++j) out[j] = static_cast<Scalar>(acc[j]);
    }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::InvalidArgument, "matrix sum shape");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_.add(r.data_[i], o.data_[i]);
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::InvalidArgument, "matrix difference shape");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_.sub(r.data_[i], o.data_[i]);
    return r;
  }
  Matrix scaled(Scalar c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = f_.mul(x, c);
    return r;
  }
  /// this += c * o
  void add_scaled(const Matrix& o, Scalar c) {
    if (!c) return;
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = f_.add(data_[i], f_.mul(c, o.data_[i]));
  }

  /// Row vector times matrix.
  Vec apply(std::span<const Scalar> v) const {
    require(v.size() == rows_, ErrorKind::InvalidArgument, "vector-matrix dimension mismatch");
    const std::uint64_t p = f_.p();
    std::vector<std::uint64_t> acc(cols_, 0);
    for (std::size_t k = 0; k < rows_; ++k) {
      const std::uint64_t vk = v[k];
      if (!vk) continue;
      const Scalar* b = row_ptr(k);
      for (std::size_t j = 0; j < cols_; ++j) acc[j] = (acc[j] + vk * b[j]) % p;
    }
    return Vec(acc.begin(), acc.end());
  }

  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix s(f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
    return s;
  }
  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix s(f_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) s.set_row(i, row_span(idx[i]));
    return s;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.cols_, ErrorKind::InvalidArgument, "vstack column mismatch");
    Matrix r(a.f_, a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), r.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), r.data_.begin() + a.data_.size());
    return r;
  }
  static Matrix hstack(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_, ErrorKind::InvalidArgument, "hstack row mismatch");
    Matrix r(a.f_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::copy(a.row_ptr(i), a.row_ptr(i) + a.cols_, r.row_ptr(i));
      std::copy(b.row_ptr(i), b.row_ptr(i) + b.cols_, r.row_ptr(i) + a.cols_);
    }
    return r;
  }
  /// Block diagonal [[a, 0], [0, b]].
  static Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.f_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) std::copy(a.row_ptr(i), a.row_ptr(i) + a.cols_, r.row_ptr(i));
    for (std::size_t i = 0; i < b.rows_; ++i)
      std::copy(b.row_ptr(i), b.row_ptr(i) + b.cols_, r.row_ptr(a.rows_ + i) + a.cols_);
    return r;
  }

  struct Echelon;
  Echelon rref() const;
  std::size_t rank() const;
  Subspace kernel() const;
  Subspace row_space() const;
  std::optional<Vec> solve(std::span<const Scalar> target) const;
  std::optional<Matrix> inverse() const;
  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += std::to_string((*this)(i, j));
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  PrimeField f_;
  std::size_t rows_ = 0, cols_ = 0;
  Vec data_;
};

struct Matrix::Echelon {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

namespace detail {

// In-place Gauss-Jordan; returns pivot columns. Rows past the rank are zero afterwards.
inline std::vector<std::size_t> gauss_jordan(Matrix& m, std::size_t col_limit) {
  const PrimeField& f = m.field();
  const std::uint64_t p = f.p();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t n = m.cols();
  for (std::size_t c = 0; c < col_limit && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(r, j));
    Scalar* pr = m.row_ptr(r);
    const Scalar inv = f.inv(pr[c]);
    for (std::size_t j = c; j < n; ++j) pr[j] = f.mul(pr[j], inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Scalar* pi = m.row_ptr(i);
      const std::uint64_t factor = pi[c];
      if (!factor) continue;
      const std::uint64_t neg = p - factor;
      for (std::size_t j = c; j < n; ++j)
        if (pr[j]) pi[j] = static_cast<Scalar>((pi[j] + neg * pr[j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline Matrix::Echelon Matrix::rref() const {
  Echelon e{*this, 0, {}};
  e.pivots = detail::gauss_jordan(e.reduced, cols_);
  e.rank = e.pivots.size();
  return e;
}

inline std::size_t Matrix::rank() const { return rref().rank; }

/// A linear subspace of GF(p)^n stored by its reduced row echelon basis (a canonical form).
class Subspace {
 public:
  Subspace() = default;
  Subspace(PrimeField f, std::size_t ambient) : basis_(f, 0, ambient) {}

  /// Span of the rows of m.
  static Subspace span(const Matrix& m) {
    auto e = m.rref();
    Subspace s;
    s.basis_ = e.reduced.submatrix(0, 0, e.rank, m.cols());
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  static Subspace span(PrimeField f, std::size_t ambient, const std::vector<Vec>& vs) {
    return span(Matrix::from_rows(f, ambient, vs));
  }
  static Subspace full(PrimeField f, std::size_t n) { return span(Matrix::identity(f, n)); }

  const PrimeField& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

  /// Normal form of v modulo this subspace (entries at pivot columns cleared).
  Vec reduce(std::span<const Scalar> v) const {
    check_len(v.size());
    Vec r(v.begin(), v.end());
    const PrimeField& f = field();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Scalar c = r[pivots_[i]];
      if (!c) continue;
      const Scalar nc = f.neg(c);
      const Scalar* b = basis_.row_ptr(i);
      for (std::size_t j = 0; j < r.size(); ++j)
        if (b[j]) r[j] = f.add(r[j], f.mul(nc, b[j]));
    }
    return r;
  }
  bool contains(std::span<const Scalar> v) const { return fdalg::is_zero(reduce(v)); }
  bool contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_.row_span(i))) return false;
    return true;
  }
  /// Coordinates of v (assumed to lie in the subspace) with respect to the basis rows.
  Vec coordinates(std::span<const Scalar> v) const {
    Vec c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }
  /// Coordinates with a membership check.
  std::optional<Vec> try_coordinates(std::span<const Scalar> v) const {
    if (!contains(v)) return std::nullopt;
    return coordinates(v);
  }

  Subspace sum(const Subspace& o) const {
    check_ambient(o);
    return span(Matrix::vstack(basis_, o.basis_));
  }
  Subspace intersect(const Subspace& o) const {
    check_ambient(o);
    const std::size_t n = ambient_dim();
    // Zassenhaus: rows (a | a) and (b | 0); rows of the echelon form with zero left half span a ∩ b.
    Matrix z(field(), dim() + o.dim(), 2 * n);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < n; ++j) z(i, j) = z(i, n + j) = basis_(i, j);
    for (std::size_t i = 0; i < o.dim(); ++i)
      for (std::size_t j = 0; j < n; ++j) z(dim() + i, j) = o.basis_(i, j);
    auto e = z.rref();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < e.rank; ++i)
      if (e.pivots[i] >= n) rows.emplace_back(e.reduced.row_ptr(i) + n, e.reduced.row_ptr(i) + 2 * n);
    return span(field(), n, rows);
  }
  /// Indices of standard basis vectors completing this subspace to the ambient space.
  std::vector<std::size_t> complement_coords() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < ambient_dim(); ++j) {
      if (k < pivots_.size() && pivots_[k] == j)
        ++k;
      else
        out.push_back(j);
    }
    return out;
  }
  Subspace complement() const {
    auto idx = complement_coords();
    Matrix m(field(), idx.size(), ambient_dim());
    for (std::size_t i = 0; i < idx.size(); ++i) m(i, idx[i]) = 1;
    return span(m);
  }
  /// Image of every basis vector under v -> v * m.
  Subspace image(const Matrix& m) const {
    require(m.rows() == ambient_dim(), ErrorKind::AmbientMismatch, "image: matrix rows != ambient dim");
    return span(basis_ * m);
  }

 private:
  void check_len(std::size_t n) const {
    require(n == ambient_dim(), ErrorKind::AmbientMismatch, "vector length differs from ambient dimension");
  }
  void check_ambient(const Subspace& o) const {
    require(ambient_dim() == o.ambient_dim(), ErrorKind::AmbientMismatch,
            "subspaces live in ambient spaces of dimension " + std::to_string(ambient_dim()) + " and " +
                std::to_string(o.ambient_dim()));
  }

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally maintained RREF basis; used by closure computations.
class SubspaceBuilder {
 public:
  SubspaceBuilder(PrimeField f, std::size_t ambient) : f_(f), n_(ambient), pivot_row_(ambient, npos) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return n_; }

  Vec reduce(std::span<const Scalar> v) const {
    Vec r(v.begin(), v.end());
    reduce_in_place(r);
    return r;
  }
  bool contains(std::span<const Scalar> v) const { return fdalg::is_zero(reduce(v)); }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(std::span<const Scalar> v) {
    require(v.size() == n_, ErrorKind::AmbientMismatch, "builder insert length mismatch");
    Vec r(v.begin(), v.end());
    reduce_in_place(r);
    std::size_t piv = 0;
    while (piv < n_ && r[piv] == 0) ++piv;
    if (piv == n_) return false;
    const Scalar inv = f_.inv(r[piv]);
    for (auto& x : r) x = f_.mul(x, inv);
    const std::uint64_t p = f_.p();
    for (auto& row : rows_) {
      const std::uint64_t c = row[piv];
      if (!c) continue;
      const std::uint64_t nc = p - c;
      for (std::size_t j = piv; j < n_; ++j)
        if (r[j]) row[j] = static_cast<Scalar>((row[j] + nc * r[j]) % p);
    }
    pivot_row_[piv] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
  }

  Subspace build() const {
    // Rows are fully reduced already; sorting by pivot gives the canonical RREF.
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t c = 0; c < n_; ++c)
      if (pivot_row_[c] != npos) order.emplace_back(c, pivot_row_[c]);
    std::vector<Vec> sorted;
    sorted.reserve(order.size());
    for (auto& [c, r] : order) sorted.push_back(rows_[r]);
    return Subspace::span(f_, n_, sorted);
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void reduce_in_place(Vec& r) const {
    const std::uint64_t p = f_.p();
    for (std::size_t c = 0; c < n_; ++c) {
      if (!r[c] || pivot_row_[c] == npos) continue;
      const Vec& row = rows_[pivot_row_[c]];
      const std::uint64_t nc = p - r[c];
      for (std::size_t j = c; j < n_; ++j)
        if (row[j]) r[j] = static_cast<Scalar>((r[j] + nc * row[j]) % p);
    }
  }

  PrimeField f_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivot_row_;
};

inline Subspace Matrix::row_space() const { return Subspace::span(*this); }

/// { v : v * M = 0 }.
inline Subspace Matrix::kernel() const {
  Matrix t = transpose();
  auto piv = detail::gauss_jordan(t, t.cols());
  std::vector<bool> is_piv(rows_, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < rows_; ++free) {
    if (is_piv[free]) continue;
    Vec v(rows_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f_.neg(t(r, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(f_, rows_, basis);
}

/// Some x with x * M = target (free variables zero), or nothing when inconsistent.
inline std::optional<Vec> Matrix::solve(std::span<const Scalar> target) const {
  require(target.size() == cols_, ErrorKind::InvalidArgument, "solve: target length mismatch");
  Matrix aug(f_, cols_, rows_ + 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) aug(j, i) = (*this)(i, j);
  for (std::size_t j = 0; j < cols_; ++j) aug(j, rows_) = target[j];
  auto piv = detail::gauss_jordan(aug, rows_ + 1);
  if (!piv.empty() && piv.back() == rows_) return std::nullopt;
  Vec x(rows_, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, rows_);
  return x;
}

/// Some X with X * M = T for every row of T at once (free variables zero), or nothing.
inline std::optional<Matrix> solve_rows(const Matrix& m, const Matrix& t) {
  require(t.cols() == m.cols(), ErrorKind::InvalidArgument, "solve_rows: target width mismatch");
  const PrimeField& f = m.field();
  Matrix aug(f, m.cols(), m.rows() + t.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) aug(j, i) = m(i, j);
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) aug(j, m.rows() + i) = t(i, j);
  auto piv = detail::gauss_jordan(aug, m.rows());
  // consistency: rows past the rank must vanish on the target columns
  for (std::size_t r = piv.size(); r < aug.rows(); ++r)
    for (std::size_t c = m.rows(); c < aug.cols(); ++c)
      if (aug(r, c)) return std::nullopt;
  Matrix x(f, t.rows(), m.rows());
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t i = 0; i < t.rows(); ++i) x(i, piv[r]) = aug(r, m.rows() + i);
  return x;
}

inline std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix aug = hstack(*this, identity(f_, rows_));
  auto piv = detail::gauss_jordan(aug, cols_);
  if (piv.size() != rows_) return std::nullopt;
  return aug.submatrix(0, cols_, rows_, rows_);
}

}  // namespace fdalg
