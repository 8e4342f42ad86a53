#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "grmod/linalg.hpp"
#include "grmod/module_element.hpp"

namespace grmod {

/// Gröbner basis of a homogeneous submodule of a graded free module
/// S(-shift_0) + ... + S(-shift_{r-1}); rank 1 with shift 0 is the ideal case.
class GroebnerBasis {
 public:
  GroebnerBasis(GradedRing ring, std::vector<int> shifts, std::vector<ModuleElement> generators, bool reduced);

  const GradedRing& ring() const { return ring_; }
  const std::vector<int>& shifts() const { return shifts_; }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<ModuleElement>& generators() const { return gens_; }
  bool is_reduced() const { return reduced_; }
  std::size_t size() const { return gens_.size(); }

  /// Index of a generator whose leading monomial divides m, if any.
  std::optional<std::size_t> find_divisor(const ModuleMonomial& m) const;
  bool is_standard(const ModuleMonomial& m) const { return !find_divisor(m); }

  /// Buchberger's criterion checked directly: every S-pair reduces to zero.
  bool spairs_reduce_to_zero() const;

 private:
  GradedRing ring_;
  std::vector<int> shifts_;
  std::vector<ModuleElement> gens_;
  bool reduced_;
};

/// Homogeneous Buchberger: S-pairs and inputs are processed in increasing
/// degree; the result is reduced, monic, and sorted by degree and then
/// leading monomial. Throws InhomogeneousInput.
GroebnerBasis buchberger(const GradedRing& ring, std::vector<int> shifts, std::vector<ModuleElement> generators);

/// Ideal convenience overload (rank 1, shift 0).
GroebnerBasis buchberger(const GradedRing& ring, const std::vector<Polynomial>& generators);

/// Full reduction; the result has no term divisible by a leading monomial.
ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb);

/// Standard monomials m*e_i of degree k, descending in position-over-term
/// order; an F-basis of the degree-k component of the quotient.
std::vector<ModuleMonomial> component_basis(const GroebnerBasis& gb, int k);

/// Normal-form coordinates for one degree: every monomial m*e_i of degree k
/// mapped to its normal form in the standard basis, filled bottom-up so each
/// entry costs one linear combination of smaller entries.
class DegreeTable {
 public:
  DegreeTable(const GroebnerBasis& gb, int k);

  int degree() const { return k_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ModuleMonomial>& basis() const { return basis_; }
  const Field& field() const { return field_; }

  /// Coordinates of a monomial of this degree.
  const Vector& coords(const ModuleMonomial& m) const;
  /// Coordinates of a homogeneous element of this degree (zero allowed).
  Vector coords(const ModuleElement& v) const;
  /// The element with these standard coordinates.
  ModuleElement element(const Vector& c, const GradedRing& ring, std::size_t rank) const;

 private:
  struct Key {
    std::size_t comp;
    Monomial mono;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return MonomialHash{}(k.mono) * 31 + k.comp; }
  };

  Field field_;
  int k_;
  std::vector<ModuleMonomial> basis_;
  std::unordered_map<Key, Vector, KeyHash> table_;
};

/// Span of {b*m : b in gens, m in component_basis(k)} inside degree k+1,
/// row-reduced in standard coordinates.
Subspace module_product_basis(std::span<const Polynomial> gens, const GroebnerBasis& gb, int k);

}  // namespace grmod
