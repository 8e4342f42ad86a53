#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grmod/polynomial.hpp"

namespace grmod {

/// A monomial times a free-module basis vector e_comp.
struct ModuleMonomial {
  Monomial mono;
  std::size_t comp = 0;

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

struct ModuleTerm {
  FieldElement coef;
  Monomial mono;
  std::size_t comp = 0;

  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

/// Position-over-term comparison: e_0 > e_1 > ..., then the ring's order.
int compare(const GradedRing& ring, const ModuleMonomial& a, const ModuleMonomial& b);

/// Element of the free module S e_0 + ... + S e_{r-1}. Degree shifts of the
/// basis vectors are not stored here; they belong to the presentation and
/// are passed in where homogeneity matters. Terms are strictly descending
/// in position-over-term order with nonzero coefficients.
class ModuleElement {
 public:
  ModuleElement(GradedRing ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}
  ModuleElement(GradedRing ring, std::size_t rank, std::vector<ModuleTerm> terms);

  static ModuleElement unit(const GradedRing& ring, std::size_t rank, std::size_t i);
  static ModuleElement from_components(const GradedRing& ring, const std::vector<Polynomial>& comps);
  static ModuleElement from_polynomial(const Polynomial& f) { return from_components(f.ring(), {f}); }
  static ModuleElement monomial(const GradedRing& ring, std::size_t rank, const FieldElement& c,
                                const ModuleMonomial& m);

  const GradedRing& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModuleTerm& leading() const { return terms_.front(); }
  ModuleMonomial leading_monomial() const { return {terms_.front().mono, terms_.front().comp}; }
  /// Everything but the leading term.
  ModuleElement tail() const;

  Polynomial component(std::size_t i) const;

  ModuleElement operator-() const;
  ModuleElement& operator+=(const ModuleElement& b);
  ModuleElement& operator-=(const ModuleElement& b);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(const ModuleElement& a, const FieldElement& s);
  friend ModuleElement operator*(const Polynomial& f, const ModuleElement& a);
  ModuleElement mul_term(const FieldElement& c, const Monomial& m) const;
  /// Scales so the leading coefficient is 1.
  ModuleElement monic() const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    return a.ring_ == b.ring_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// Degree of a term is its monomial degree plus the shift of its position.
  Homogeneity homogeneity(std::span<const int> shifts) const;
  std::map<std::uint64_t, ModuleElement> homogeneous_components(std::span<const int> shifts) const;

  /// Rank 1 prints as the polynomial; otherwise `(c0, c1, ...)`.
  std::string to_string() const;

 private:
  void check(const ModuleElement& b) const;

  GradedRing ring_;
  std::size_t rank_;
  std::vector<ModuleTerm> terms_;
};

inline std::uint64_t shifted_degree(const ModuleMonomial& m, std::span<const int> shifts) {
  return m.mono.degree() + static_cast<std::uint64_t>(shifts[m.comp]);
}

}  // namespace grmod
