#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grmod/field.hpp"

namespace grmod {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const Field& f, std::size_t n);
bool is_zero(const Vector& v);

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Vector apply(const Vector& x) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> data_;
};

/// Subspace of F^n held as a basis in reduced row echelon form, so equal
/// subspaces have equal bases.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient_dim) : field_(f), n_(ambient_dim) {}

  static Subspace span(Field f, std::size_t ambient_dim, std::vector<Vector> vectors);
  static Subspace whole(Field f, std::size_t ambient_dim);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot columns; zero iff v lies in the span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Returns true when the dimension grew.
  bool insert(Vector v);

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  Field field_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// In-place reduced row echelon form; drops zero rows and returns the pivot
/// columns. Prime fields take a word-sized arithmetic path.
std::vector<std::size_t> row_reduce(const Field& f, std::size_t cols, std::vector<Vector>& rows);
std::size_t rank(const Field& f, std::size_t cols, std::vector<Vector> rows);

/// One solution of A x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// Basis of {x : A x = 0}.
std::vector<Vector> kernel(const Matrix& a);

}  // namespace grmod
