// Copyright 2026 The qcomb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file exact.hpp
 * @brief Exact scalars (Gaussian rationals) and sparse exact linear algebra.
 *
 * Everything in qcomb is an exact equality check, so this layer never
 * rounds. Matrices are sparse and keyed row-major; zero entries are never
 * stored. Elimination always pivots on the first usable row of the leftmost
 * remaining column, which makes kernels and solutions reproducible.
 */

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcomb {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& message) : Error(message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error(message) {}
};

using Rational = mpq_class;

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t start = (t.front() == '-') ? 1 : 0;
    if (start == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("malformed rational '" + std::string(text) + "'");
    return Rational(mpz_class(s, 10));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(mpz_class(num, 10), d);
  r.canonicalize();
  return r;
}

inline std::string rational_str(const Rational& r) { return r.get_str(10); }

/// Exact square root of a nonnegative rational, when it is itself rational.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  mpz_class n = r.get_num();
  mpz_class d = r.get_den();
  mpz_class sn = sqrt(n);
  mpz_class sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

/// An element re + im*i of the Gaussian rationals Q(i).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar fraction(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return Scalar(r);
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always a nonnegative rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  Scalar inverse() const {
    if (is_zero()) throw Error("division by zero scalar");
    Rational n = norm2();
    Rational a = re_ / n;
    Rational b = -im_ / n;
    return Scalar(a, b);
  }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      re_ *= o.re_;
      return *this;
    }
    Rational a = re_ * o.re_ - im_ * o.im_;
    Rational b = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(a);
    im_ = std::move(b);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      if (sgn(o.re_) == 0) throw Error("division by zero scalar");
      re_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "p/q" for rationals, "p/q+r/s i" (or "p/q-r/s i") for Gaussian values.
  std::string str() const {
    if (is_real()) return rational_str(re_);
    std::string out = rational_str(re_);
    if (sgn(im_) >= 0) out += "+";
    out += rational_str(im_);
    out += " i";
    return out;
  }

  static Scalar parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    if (s.empty()) throw ParseError("empty scalar");
    if (s.back() != 'i') return Scalar(parse_rational(s));
    s.pop_back();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    // split at the last sign that is not the leading one
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if (s[k] == '+' || s[k] == '-') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) {
      if (s.empty() || s == "+") return Scalar(Rational(0), Rational(1));
      if (s == "-") return Scalar(Rational(0), Rational(-1));
      return Scalar(Rational(0), parse_rational(s));
    }
    Rational re = parse_rational(s.substr(0, split));
    std::string im_text = s.substr(split);
    Rational im;
    if (im_text == "+") {
      im = 1;
    } else if (im_text == "-") {
      im = -1;
    } else {
      im = parse_rational(im_text);
    }
    return Scalar(re, im);
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar()); }

inline Vector basis_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = Scalar(1);
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

inline Vector operator*(const Scalar& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

/// Sparse matrix over Q(i). Rows are ordered maps from column to nonzero entry.
class Matrix {
 public:
  using Row = std::map<std::size_t, Scalar>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.rows_[k].emplace(k, Scalar(1));
    return m;
  }

  static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != nc) throw DimensionError("ragged dense matrix");
      for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t nrows) {
    Matrix m(nrows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != nrows) throw DimensionError("column length mismatch");
      for (std::size_t r = 0; r < nrows; ++r) m.set(r, c, columns[c][r]);
    }
    return m;
  }

  /// Single column matrix.
  static Matrix column_of(const Vector& v) { return from_columns({v}, v.size()); }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const {
    check_index(r, c);
    const auto& row = rows_[r];
    auto it = row.find(c);
    return it == row.end() ? Scalar() : it->second;
  }

  void set(std::size_t r, std::size_t c, const Scalar& value) {
    check_index(r, c);
    if (value.is_zero()) {
      rows_[r].erase(c);
    } else {
      rows_[r][c] = value;
    }
  }

  void add_to(std::size_t r, std::size_t c, const Scalar& value) {
    check_index(r, c);
    if (value.is_zero()) return;
    auto [it, inserted] = rows_[r].try_emplace(c, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) rows_[r].erase(it);
    }
  }

  const Row& row(std::size_t r) const { return rows_.at(r); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.size();
    return n;
  }

  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
  }

  /// Visit nonzero entries in row-major order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) f(r, c, v);
    }
  }

  Vector column(std::size_t c) const {
    if (c >= cols_) throw DimensionError("column index out of range");
    Vector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      auto it = rows_[r].find(c);
      if (it != rows_[r].end()) v[r] = it->second;
    }
    return v;
  }

  std::vector<Vector> columns() const {
    std::vector<Vector> out(cols_, Vector(rows()));
    for_each([&](std::size_t r, std::size_t c, const Scalar& v) { out[c][r] = v; });
    return out;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    Vector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      Scalar acc;
      for (const auto& [c, x] : rows_[r]) {
        if (!v[c].is_zero()) acc += x * v[c];
      }
      out[r] = std::move(acc);
    }
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows());
    for_each([&](std::size_t r, std::size_t c, const Scalar& v) { t.rows_[c].emplace(r, v); });
    return t;
  }

  /// Rows [r0, r0+n) as a new matrix.
  Matrix row_block(std::size_t r0, std::size_t n) const {
    if (r0 + n > rows()) throw DimensionError("row block out of range");
    Matrix m(n, cols_);
    for (std::size_t k = 0; k < n; ++k) m.rows_[k] = rows_[r0 + k];
    return m;
  }

  Matrix col_block(std::size_t c0, std::size_t n) const {
    if (c0 + n > cols_) throw DimensionError("column block out of range");
    Matrix m(rows(), n);
    for (std::size_t r = 0; r < rows(); ++r) {
      for (auto it = rows_[r].lower_bound(c0); it != rows_[r].end() && it->first < c0 + n; ++it) {
        m.rows_[r].emplace(it->first - c0, it->second);
      }
    }
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    o.for_each([&](std::size_t r, std::size_t c, const Scalar& v) { add_to(r, c, v); });
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    o.for_each([&](std::size_t r, std::size_t c, const Scalar& v) { add_to(r, c, -v); });
    return *this;
  }
  Matrix& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      for (auto& row : rows_) row.clear();
      return *this;
    }
    for (auto& row : rows_) {
      for (auto& [c, v] : row) v *= s;
    }
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows()) {
      throw DimensionError("matrix product shape mismatch: " + a.shape_str() + " * " +
                           b.shape_str());
    }
    Matrix out(a.rows(), b.cols_);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Row acc;
      for (const auto& [k, x] : a.rows_[r]) {
        for (const auto& [c, y] : b.rows_[k]) {
          auto [it, inserted] = acc.try_emplace(c, x * y);
          if (!inserted) it->second += x * y;
        }
      }
      for (auto it = acc.begin(); it != acc.end();) {
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
      }
      out.rows_[r] = std::move(acc);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string shape_str() const {
    return std::to_string(rows()) + "x" + std::to_string(cols_);
  }

 private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows() || c >= cols_) {
      throw DimensionError("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                           ") out of range for " + shape_str());
    }
  }
  void require_same_shape(const Matrix& o) const {
    if (rows() != o.rows() || cols_ != o.cols_) {
      throw DimensionError("matrix shape mismatch: " + shape_str() + " vs " + o.shape_str());
    }
  }

  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// Kronecker product; index (i, j) of A (x) B is i * dim(B) + j on both sides.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  a.for_each([&](std::size_t ar, std::size_t ac, const Scalar& x) {
    b.for_each([&](std::size_t br, std::size_t bc, const Scalar& y) {
      out.set(ar * b.rows() + br, ac * b.cols() + bc, x * y);
    });
  });
  return out;
}

/// The flip tau: V (x) W -> W (x) V.
inline Matrix flip(std::size_t dim_v, std::size_t dim_w) {
  Matrix t(dim_w * dim_v, dim_v * dim_w);
  for (std::size_t i = 0; i < dim_v; ++i) {
    for (std::size_t j = 0; j < dim_w; ++j) t.set(j * dim_v + i, i * dim_w + j, Scalar(1));
  }
  return t;
}

/// Horizontal concatenation [A | B].
inline Matrix hconcat(const std::vector<Matrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionError("hconcat row mismatch");
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    b.for_each([&](std::size_t r, std::size_t c, const Scalar& v) { out.set(r, offset + c, v); });
    offset += b.cols();
  }
  return out;
}

/// Vertical concatenation.
inline Matrix vconcat(const std::vector<Matrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionError("vconcat column mismatch");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    b.for_each([&](std::size_t r, std::size_t c, const Scalar& v) { out.set(offset + r, c, v); });
    offset += b.rows();
  }
  return out;
}

namespace detail {

struct Echelon {
  std::vector<Matrix::Row> rows;       // reduced rows, one per pivot
  std::vector<std::size_t> pivot_cols;  // increasing
};

// Reduced row echelon form. Columns are processed left to right and the
// pivot is the first remaining row with a nonzero entry in that column.
inline Echelon reduce(const Matrix& m, std::size_t ncols) {
  std::vector<Matrix::Row> work;
  work.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m.row(r).empty()) work.push_back(m.row(r));
  }
  Echelon e;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < work.size(); ++col) {
    std::size_t pivot = work.size();
    for (std::size_t r = next; r < work.size(); ++r) {
      if (work[r].count(col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == work.size()) continue;
    std::swap(work[next], work[pivot]);
    Scalar inv = work[next].at(col).inverse();
    for (auto& [c, v] : work[next]) v *= inv;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == next) continue;
      auto it = work[r].find(col);
      if (it == work[r].end()) continue;
      Scalar factor = it->second;
      for (const auto& [c, v] : work[next]) {
        auto [jt, inserted] = work[r].try_emplace(c, -(factor * v));
        if (!inserted) {
          jt->second -= factor * v;
          if (jt->second.is_zero()) work[r].erase(jt);
        }
      }
    }
    e.pivot_cols.push_back(col);
    ++next;
  }
  work.resize(next);
  e.rows = std::move(work);
  return e;
}

}  // namespace detail

inline std::size_t rank(const Matrix& m) { return detail::reduce(m, m.cols()).pivot_cols.size(); }

/// Basis of the null space, returned as the columns of a cols(m) x nullity matrix.
inline Matrix kernel(const Matrix& m) {
  auto e = detail::reduce(m, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      auto it = e.rows[k].find(free);
      if (it != e.rows[k].end()) v[e.pivot_cols[k]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(basis, m.cols());
}

/// A solution of m x = b with free variables set to zero, or nullopt.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  m.for_each([&](std::size_t r, std::size_t c, const Scalar& v) { aug.set(r, c, v); });
  for (std::size_t r = 0; r < b.size(); ++r) aug.set(r, m.cols(), b[r]);
  auto e = detail::reduce(aug, aug.cols());
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    auto it = e.rows[k].find(m.cols());
    if (it != e.rows[k].end()) x[e.pivot_cols[k]] = it->second;
  }
  return x;
}

/// Solve m X = B column by column; nullopt if any column is inconsistent.
inline std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  std::vector<Vector> cols;
  for (const auto& col : b.columns()) {
    auto x = solve(m, col);
    if (!x) return std::nullopt;
    cols.push_back(std::move(*x));
  }
  return Matrix::from_columns(cols, m.cols());
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows()));
}

/// Sparse order-3 tensor, keyed (i, j, k) in lexicographic order.
class Tensor3 {
 public:
  using Index = std::array<std::size_t, 3>;

  Tensor3() = default;
  explicit Tensor3(Index dims) : dims_(dims) {}
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2) : dims_{d0, d1, d2} {}

  const Index& dims() const { return dims_; }

  Scalar at(std::size_t i, std::size_t j, std::size_t k) const {
    check({i, j, k});
    auto it = entries_.find({i, j, k});
    return it == entries_.end() ? Scalar() : it->second;
  }

  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    check({i, j, k});
    if (v.is_zero()) {
      entries_.erase({i, j, k});
    } else {
      entries_[{i, j, k}] = v;
    }
  }

  void add_to(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    check({i, j, k});
    if (v.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace({i, j, k}, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  const std::map<Index, Scalar>& entries() const { return entries_; }

  /// Entries whose first index is i, in (j, k) order.
  template <class F>
  void for_slice(std::size_t i, F&& f) const {
    for (auto it = entries_.lower_bound({i, 0, 0}); it != entries_.end() && it->first[0] == i;
         ++it) {
      f(it->first[1], it->first[2], it->second);
    }
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.dims_ == b.dims_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

 private:
  void check(const Index& idx) const {
    for (std::size_t a = 0; a < 3; ++a) {
      if (idx[a] >= dims_[a]) throw DimensionError("tensor index out of range");
    }
  }

  Index dims_{0, 0, 0};
  std::map<Index, Scalar> entries_;
};

/// Contract t with v along `axis`; the result is indexed by the remaining two
/// axes in their original order.
inline Matrix contract(const Tensor3& t, std::size_t axis, const Vector& v) {
  if (axis > 2) throw DimensionError("contract: axis out of range");
  if (v.size() != t.dims()[axis]) throw DimensionError("contract: vector length mismatch");
  std::array<std::size_t, 2> keep{};
  for (std::size_t a = 0, n = 0; a < 3; ++a) {
    if (a != axis) keep[n++] = a;
  }
  Matrix out(t.dims()[keep[0]], t.dims()[keep[1]]);
  for (const auto& [idx, x] : t.entries()) {
    const Scalar& w = v[idx[axis]];
    if (w.is_zero()) continue;
    out.add_to(idx[keep[0]], idx[keep[1]], x * w);
  }
  return out;
}

}  // namespace qcomb
