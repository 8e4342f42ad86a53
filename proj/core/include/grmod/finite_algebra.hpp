#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grmod/linalg.hpp"
#include "grmod/polynomial.hpp"
#include "grmod/unipoly.hpp"

namespace grmod {

/// Commutative algebra of finite dimension over a field, given by structure
/// constants: table[i][j] holds the coordinates of e_i * e_j. Optional
/// distinguished images record where X_0, ..., X_n go under a presentation
/// map from a polynomial ring.
class FiniteAlgebra {
 public:
  FiniteAlgebra(Field f, std::vector<std::string> labels, std::vector<std::vector<Vector>> table, Vector unit,
                std::vector<Vector> images = {});

  /// F[t]/(f) on the basis 1, t, ..., t^(d-1).
  static FiniteAlgebra univariate(const UniPoly& f, const std::string& var = "t");
  /// S/J for a homogeneous J with S/J short, on the standard monomial basis.
  /// Images are the classes of the variables. Throws InvalidArgument if
  /// S/J is infinite-dimensional.
  static FiniteAlgebra from_quotient(const GradedRing& ring, const std::vector<Polynomial>& J);

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<Vector>>& table() const { return table_; }
  const Vector& unit() const { return unit_; }
  const std::vector<Vector>& images() const { return images_; }

  Vector basis_vector(std::size_t i) const;
  Vector zero() const { return zero_vector(field_, dim()); }
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector power(const Vector& a, std::uint64_t e) const;
  /// Column j is a * e_j.
  Matrix multiplication_matrix(const Vector& a) const;
  bool is_nilpotent(const Vector& a) const;

  /// First failure of commutativity, associativity, or the unit law on basis
  /// elements, as text; nullopt when all laws hold.
  std::optional<std::string> law_violation() const;

  /// Same algebra on the basis given by the columns of `T` (old
  /// coordinates). Throws InvalidArgument if T is singular.
  FiniteAlgebra change_basis(const Matrix& T) const;

  /// Coordinates as text, e.g. `[1, 0, 2]`.
  std::string format(const Vector& v) const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vector>> table_;
  Vector unit_;
  std::vector<Vector> images_;
};

/// Direct product A x B with block structure constants.
FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace grmod
