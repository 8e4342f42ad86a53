#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "grmod/graded_module.hpp"
#include "grmod/linalg.hpp"
#include "grmod/parse.hpp"
#include "grmod/unipoly.hpp"

namespace grmod::testing {

inline Polynomial poly(const GradedRing& ring, std::string_view text) { return parse_polynomial(ring, text); }

std::vector<Polynomial> polys(const GradedRing& ring, std::initializer_list<std::string_view> texts);

FieldElement random_element(const Field& F, Rng& rng);

/// Random homogeneous polynomial of degree `deg` with up to `terms` terms;
/// may be zero.
Polynomial random_homogeneous(const GradedRing& ring, int deg, Rng& rng, int terms = 4);
/// Random (possibly inhomogeneous) polynomial of degree <= max_deg.
Polynomial random_polynomial(const GradedRing& ring, int max_deg, Rng& rng, int terms = 5);

/// `count` nonzero homogeneous generators with degrees in [1, max_deg].
std::vector<Polynomial> random_ideal(const GradedRing& ring, int count, int max_deg, Rng& rng);

struct Presentation {
  GradedRing ring;
  std::vector<int> shifts;
  std::vector<ModuleElement> relations;

  GradedModule module() const { return GradedModule(ring, shifts, relations); }
};

/// Generator degrees <= max_shift, up to max_rels nonzero homogeneous
/// relations of degree <= max_rel_deg.
Presentation random_presentation(const GradedRing& ring, Rng& rng, std::size_t max_rank = 3, int max_shift = 3,
                                 std::size_t max_rels = 4, int max_rel_deg = 4);

/// Component dimensions computed straight from a presentation: free-module
/// monomials against the span of all monomial multiples of the relations.
/// No Groebner basis is involved.
class RawModule {
 public:
  RawModule(GradedRing ring, std::vector<int> shifts, std::vector<ModuleElement> relations);
  explicit RawModule(const Presentation& p) : RawModule(p.ring, p.shifts, p.relations) {}
  static RawModule cyclic(const GradedRing& ring, const std::vector<Polynomial>& ideal);

  std::size_t dim(int k);
  /// dim of (B M)_k = (B F_{k-1} + R_k) / R_k.
  std::size_t product_dim(const std::vector<Polynomial>& B, int k);
  /// dim of S_1 M_k inside M_{k+1}.
  std::size_t s1_dim(int k);

 private:
  struct Degree {
    std::vector<ModuleMonomial> monomials;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<Vector> relation_rows;
    std::size_t relation_rank = 0;
  };
  Degree& degree(int k);
  Vector coords(const Degree& d, const ModuleElement& v) const;

  GradedRing ring_;
  std::vector<int> shifts_;
  std::vector<ModuleElement> relations_;
  std::vector<int> rel_degrees_;
  std::map<int, Degree> cache_;
};

/// Number of monomials of degree k in n variables divisible by none of gens.
std::uint64_t brute_standard_count(std::size_t n, const std::vector<Monomial>& gens, int k);

}  // namespace grmod::testing
