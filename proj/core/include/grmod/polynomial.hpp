#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grmod/field.hpp"
#include "grmod/monomial.hpp"

namespace grmod {

/// S = F[X0..Xn] with the standard grading; S is generated by S_0 = F and
/// S_1 = span{X0..Xn}, so every S_k is spanned by the degree-k monomials.
struct GradedRing {
  Field field;
  std::size_t num_vars = 1;
  MonomialOrder order = MonomialOrder::DegRevLex;

  GradedRing() = default;
  GradedRing(Field f, std::size_t n, MonomialOrder o = MonomialOrder::DegRevLex)
      : field(f), num_vars(n), order(o) {}

  int compare(const Monomial& a, const Monomial& b) const { return grmod::compare(a, b, order); }

  friend bool operator==(const GradedRing&, const GradedRing&) = default;
};

struct Term {
  FieldElement coef;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Result of a homogeneity test. The zero polynomial is homogeneous of every
/// degree and reports `degree == nullopt`.
struct Homogeneity {
  bool homogeneous = true;
  std::optional<std::uint64_t> degree;
};

/// Sparse polynomial, terms strictly descending in the ring's order with no
/// zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(GradedRing ring) : ring_(std::move(ring)) {}
  /// Sorts, merges duplicate monomials and drops zero terms.
  Polynomial(GradedRing ring, std::vector<Term> terms);

  static Polynomial constant(const GradedRing& ring, const FieldElement& c);
  static Polynomial variable(const GradedRing& ring, std::size_t i);
  static Polynomial monomial(const GradedRing& ring, const FieldElement& c, const Monomial& m);

  const GradedRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  /// Largest term degree; 0 for the zero polynomial.
  std::uint64_t total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const FieldElement& s);
  friend Polynomial operator*(const FieldElement& s, const Polynomial& a) { return a * s; }
  Polynomial mul_term(const FieldElement& c, const Monomial& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  Homogeneity homogeneity() const;
  bool is_homogeneous() const { return homogeneity().homogeneous; }
  /// degree -> component; components sum to *this, none is zero.
  std::map<std::uint64_t, Polynomial> homogeneous_components() const;

  /// Evaluates with coefficients mapped through `embed` into the field of
  /// `point`; with no map, coefficients must already live there.
  FieldElement evaluate(std::span<const FieldElement> point,
                        const std::function<FieldElement(const FieldElement&)>& embed = {}) const;

  /// `2*X0^2*X1 - 1/3*X2^3`
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& b) const;

  GradedRing ring_;
  std::vector<Term> terms_;
};

/// The C(k+n, n) monomials of degree k in n+1 variables, descending in the
/// ring's order.
std::vector<Monomial> monomials_of_degree(const GradedRing& ring, std::uint64_t k);

/// Coefficient text for a term, parenthesized when it contains a sum.
std::string coefficient_text(const FieldElement& c, bool& negative);

}  // namespace grmod
