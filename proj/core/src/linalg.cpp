#include "grmod/linalg.hpp"

#include <algorithm>
#include <cstdint>

#include "grmod/error.hpp"

namespace grmod {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) raise(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) raise(ErrorCode::InvalidArgument, "dimension mismatch in matrix-vector product");
  Vector y = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!x[j].is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) raise(ErrorCode::InvalidArgument, "dimension mismatch in matrix product");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

// ---------------------------------------------------------------- elimination

namespace {

std::vector<std::size_t> row_reduce_prime(const Field& f, std::size_t cols, std::vector<Vector>& rows) {
  const std::uint64_t p = f.characteristic();
  std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = rows[i][j].residue();

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const std::uint64_t inv = modp::inv(m[r][c], p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = modp::mul(m[r][j], inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (m[r][j]) m[i][j] = modp::sub(m[i][j], modp::mul(factor, m[r][j], p), p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  rows.assign(r, Vector());
  for (std::size_t i = 0; i < r; ++i) {
    rows[i].reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) rows[i].push_back(f.from_int(static_cast<std::int64_t>(m[i][j])));
  }
  return pivots;
}

std::vector<std::size_t> row_reduce_generic(std::size_t cols, std::vector<Vector>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const FieldElement inv = m[r][c].inv();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const FieldElement factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= factor * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

}  // namespace

std::vector<std::size_t> row_reduce(const Field& f, std::size_t cols, std::vector<Vector>& rows) {
  for (const auto& r : rows)
    if (r.size() != cols) raise(ErrorCode::InvalidArgument, "row length does not match column count");
  if (f.kind() == Field::Kind::Prime) return row_reduce_prime(f, cols, rows);
  return row_reduce_generic(cols, rows);
}

std::size_t rank(const Field& f, std::size_t cols, std::vector<Vector> rows) {
  return row_reduce(f, cols, rows).size();
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  const Field& f = a.field();
  const std::size_t n = a.cols();
  std::vector<Vector> aug;
  aug.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector r = a.row(i);
    r.push_back(b.at(i));
    aug.push_back(std::move(r));
  }
  auto piv = row_reduce(f, n + 1, aug);
  Vector x = zero_vector(f, n);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == n) return std::nullopt;
    x[piv[i]] = aug[i][n];
  }
  return x;
}

std::vector<Vector> kernel(const Matrix& a) {
  const Field& f = a.field();
  const std::size_t n = a.cols();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  auto piv = row_reduce(f, n, rows);
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, n);
    v[free] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(Field f, std::size_t ambient_dim, std::vector<Vector> vectors) {
  Subspace s(f, ambient_dim);
  s.pivots_ = row_reduce(f, ambient_dim, vectors);
  s.rows_ = std::move(vectors);
  return s;
}

Subspace Subspace::whole(Field f, std::size_t ambient_dim) {
  Subspace s(f, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vector v = zero_vector(f, ambient_dim);
    v[i] = f.one();
    s.rows_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != n_) raise(ErrorCode::InvalidArgument, "vector outside the ambient space");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const FieldElement c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < n_; ++j) {
      if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
    }
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& v) { return contains(v); });
}

bool Subspace::insert(Vector v) {
  v = reduce(std::move(v));
  if (is_zero(v)) return false;
  rows_.push_back(std::move(v));
  pivots_ = row_reduce(field_, n_, rows_);
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> all = rows_;
  all.insert(all.end(), other.rows_.begin(), other.rows_.end());
  return span(field_, n_, std::move(all));
}

Subspace Subspace::intersect(const Subspace& other) const {
  // x in U ∩ W  <=>  x = sum a_i u_i = sum b_j w_j; solve on the stacked basis
  const std::size_t du = dim(), dw = other.dim();
  if (du == 0 || dw == 0) return Subspace(field_, n_);
  Matrix m(field_, n_, du + dw);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t r = 0; r < n_; ++r) m.at(r, i) = rows_[i][r];
  for (std::size_t j = 0; j < dw; ++j)
    for (std::size_t r = 0; r < n_; ++r) m.at(r, du + j) = other.rows_[j][r];
  std::vector<Vector> out;
  for (const auto& k : kernel(m)) {
    Vector x = zero_vector(field_, n_);
    for (std::size_t i = 0; i < du; ++i) {
      if (k[i].is_zero()) continue;
      for (std::size_t r = 0; r < n_; ++r) x[r] += k[i] * rows_[i][r];
    }
    out.push_back(std::move(x));
  }
  return span(field_, n_, std::move(out));
}

}  // namespace grmod
