#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grmod/cartier.hpp"
#include "grmod/finite_algebra.hpp"

namespace grmod {

/// Point (x_0 : ... : x_n) over `field`, an extension of `base`, with the
/// first nonzero coordinate equal to 1. `base_generator` is the image of
/// base's generator when base is itself an extension field.
struct ProjectivePoint {
  Field base;
  Field field;
  std::vector<FieldElement> coords;
  std::optional<FieldElement> base_generator;

  /// Throws InvalidArgument for the all-zero tuple.
  static ProjectivePoint normalized(Field base, std::vector<FieldElement> coords,
                                    std::optional<FieldElement> base_generator = std::nullopt);

  FieldElement embed(const FieldElement& a) const;
  std::vector<std::string> coordinate_strings() const;
  /// `(0 : 1)`
  std::string to_string() const;
};

/// P/(1 - x)P for a certificate of a cyclic M = S/J, with the induced
/// multiplication; images are the classes of the variables. Throws NotCyclic.
FiniteAlgebra algebra_from_certificate(const CartierTateCertificate& cert);

/// Common eigenvector of the multiplication operators of the images,
/// refining one shared eigenspace image by image and extending the field by
/// the first irreducible factor of each minimal polynomial. Throws
/// UnsupportedField over Q and AllNilpotent.
ProjectivePoint maximal_ideal_point(const FiniteAlgebra& alg, std::uint64_t seed = 0);

/// All generators vanish at the point. Throws FieldEmbeddingFailure.
bool verify_zero(const std::vector<Polynomial>& J, const ProjectivePoint& pt);

/// First zero in the listing of P^n(GF(q^e)) for e = 1..max_ext: tuples in
/// lexicographic order over the field listing, keeping those whose first
/// nonzero coordinate is 1.
std::optional<ProjectivePoint> brute_force_zero(const GradedRing& ring, const std::vector<Polynomial>& J, int max_ext);

struct NullstellensatzResult {
  enum class Status { Saturated, Zero, Algebra };
  Status status = Status::Saturated;
  /// Saturated: (X_0..X_n)^from lies in J.
  int saturated_from = 0;
  std::optional<ProjectivePoint> point;
  std::optional<CartierTateCertificate> certificate;
  std::optional<FiniteAlgebra> algebra;
  /// Over Q: the image of x, equal to the unit, so every power is nonzero.
  std::optional<Vector> non_nilpotent;
};
const char* to_string(NullstellensatzResult::Status s);

/// Saturated when S/J is short; otherwise certificate, algebra and (over a
/// finite field) a verified point. Throws InhomogeneousInput.
NullstellensatzResult nullstellensatz(const GradedRing& ring, const std::vector<Polynomial>& J, std::uint64_t seed = 0,
                                      int probe = 5);

}  // namespace grmod
