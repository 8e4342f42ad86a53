#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "grmod/groebner.hpp"
#include "grmod/hilbert.hpp"

namespace grmod {

/// Finitely presented graded module: the quotient of the free module
/// S(-d_0) + ... + S(-d_{r-1}) by a homogeneous relation submodule. The
/// cyclic module S/J has shifts {0} and relations J. Hilbert data is built
/// eagerly; per-degree coordinate tables are cached and shared by copies.
class GradedModule {
 public:
  GradedModule(GradedRing ring, std::vector<int> shifts, std::vector<ModuleElement> relations);

  static GradedModule cyclic(const GradedRing& ring, const std::vector<Polynomial>& ideal);
  static GradedModule free(const GradedRing& ring, std::vector<int> shifts);

  const GradedRing& ring() const { return gb_->ring(); }
  const std::vector<int>& shifts() const { return gb_->shifts(); }
  std::size_t rank() const { return gb_->rank(); }
  const GroebnerBasis& relations() const { return *gb_; }
  const HilbertData& hilbert() const { return *hilbert_; }
  bool is_cyclic() const { return rank() == 1 && shifts()[0] == 0; }
  /// Largest generator degree; 0 for the zero-rank module.
  int max_generator_degree() const;

  std::size_t dim(int k) const { return k < 0 ? 0 : hilbert_->function(k); }
  /// Standard basis of M_k.
  std::vector<ModuleMonomial> component(int k) const;
  const DegreeTable& table(int k) const;

  /// Span of B*M_k inside M_{k+1}, in the coordinates of table(k+1).
  Subspace product_span(const std::vector<Polynomial>& B, int k) const;
  /// S_1 * M_k.
  Subspace s1_span(int k) const;

  ModuleElement zero_element() const { return ModuleElement(ring(), rank()); }
  ModuleElement unit(std::size_t i) const { return ModuleElement::unit(ring(), rank(), i); }
  ModuleElement normal_form(const ModuleElement& v) const { return grmod::normal_form(v, *gb_); }
  /// Coordinates of a homogeneous element of degree k in M_k.
  Vector coords(const ModuleElement& v, int k) const { return table(k).coords(v); }

 private:
  std::shared_ptr<const GroebnerBasis> gb_;
  std::shared_ptr<const HilbertData> hilbert_;
  struct Cache {
    std::mutex mu;
    std::map<int, std::shared_ptr<const DegreeTable>> tables;
  };
  std::shared_ptr<Cache> cache_;
};

/// Homogeneous generators of a graded submodule N of `parent`.
struct GradedSubmodule {
  GradedModule parent;
  std::vector<ModuleElement> generators;

  /// Throws InhomogeneousInput or RingMismatch.
  GradedSubmodule(GradedModule parent, std::vector<ModuleElement> generators);
};

struct SimpleGradingReport {
  int first_simple_degree = 0;
  int verified_through = 0;
};

/// Least k0 with S_1 M_k = M_{k+1} for every k >= k0. Equality is checked
/// exactly for all k up to max(generator degree, stabilization) + probe; a
/// failure at or beyond the generator bound throws InternalInconsistency.
SimpleGradingReport check_simple_grading(const GradedModule& M, int probe = 5);

/// Degrees of a minimal homogeneous generating set, with multiplicity.
std::vector<int> minimal_generator_degrees(const GradedModule& M);

struct GeneratorChoice {
  int degree;
  ModuleElement element;
};
/// A minimal generating set chosen by basis completion: in each degree,
/// standard monomials not already in S_1 M_{k-1}, taken lowest degree first
/// and then in descending monomial order.
std::vector<GeneratorChoice> minimal_generators(const GradedModule& M);

enum class Length { Short, Long };
const char* to_string(Length l);

struct LengthReport {
  Length length = Length::Short;
  /// Short: M_k = 0 for every k >= from. Long: M_k != 0 for every k >= from.
  int from = 0;
};
LengthReport classify_length(const GradedModule& M, int probe = 5);

struct SaturationReport {
  bool saturated = false;
  /// Saturated: M_j is contained in N for all j >= from.
  std::optional<int> from;
  /// Hilbert data of M/N; a nonzero polynomial witnesses non-saturation.
  HilbertData quotient_hilbert;
};
SaturationReport is_saturated(const GradedSubmodule& N);

/// The submodule (B)M, so N_0 = 0 and N_{k+1} = B M_k. Throws
/// InhomogeneousInput unless every b has degree 1.
GradedSubmodule product_submodule(const std::vector<Polynomial>& B, const GradedModule& M);

/// M/N over the same free generators.
GradedModule quotient_module(const GradedModule& M, const GradedSubmodule& N);

/// dim N_k for the submodule N, through degree `through`.
std::vector<std::size_t> submodule_dims(const GradedSubmodule& N, int through);

struct TechnicalLemmaReport {
  SimpleGradingReport simple;
  std::vector<int> generator_degrees;
  /// Submodule generated by the chosen minimal generators equals M.
  bool regenerates = false;
};
TechnicalLemmaReport technical_lemma_report(const GradedModule& M, int probe = 5);

}  // namespace grmod
