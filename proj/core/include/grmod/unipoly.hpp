#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grmod/field.hpp"

namespace grmod {

using Rng = std::mt19937_64;

/// Dense univariate polynomial over a Field, constant term first. The
/// coefficient vector never carries a trailing zero.
class UniPoly {
 public:
  explicit UniPoly(Field f = Field()) : field_(f) {}
  UniPoly(Field f, std::vector<FieldElement> coeffs);

  static UniPoly constant(const FieldElement& c);
  /// c * X^d
  static UniPoly monomial(const FieldElement& c, std::size_t d);
  static UniPoly x(const Field& f) { return monomial(f.one(), 1); }
  /// Coefficients as integers, constant term first.
  static UniPoly from_ints(const Field& f, const std::vector<std::int64_t>& coeffs);

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  FieldElement coeff(std::size_t i) const;
  const std::vector<FieldElement>& coefficients() const { return c_; }
  FieldElement leading() const;
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  UniPoly monic() const;
  UniPoly derivative() const;

  FieldElement operator()(const FieldElement& x) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& b);
  UniPoly& operator-=(const UniPoly& b);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const FieldElement& s);

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  std::string to_string(std::string_view var = "X") const;

 private:
  void trim();

  Field field_;
  std::vector<FieldElement> c_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Throws DivisionByZero for a zero divisor.
DivMod divmod(const UniPoly& a, const UniPoly& b);
inline UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).quotient; }
inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly powmod(const UniPoly& base, const mpz_class& e, const UniPoly& mod);

/// Rabin's irreducibility test; finite fields only.
bool is_irreducible(const UniPoly& f);

using Factorization = std::vector<std::pair<UniPoly, unsigned>>;

/// Complete factorization of a nonzero polynomial over a finite field into
/// monic irreducibles with multiplicities. Runs squarefree decomposition,
/// distinct-degree and then equal-degree (Cantor-Zassenhaus) splitting; for
/// fields of order below 64 linear factors are stripped by root search
/// first. Factors are sorted by degree and then coefficients from the top.
/// Throws UnsupportedField over Q.
Factorization factor(const UniPoly& f, Rng& rng);

/// Distinct roots of f in its coefficient field, in the field's listing order.
std::vector<FieldElement> roots(const UniPoly& f, Rng& rng);

/// First monic irreducible polynomial of the given degree over a finite
/// field, in the order induced by the field's element listing.
UniPoly first_irreducible(const Field& f, std::size_t degree);

/// A finite field extension K -> K' = K[t]/(g), flattened to a single
/// modulus over GF(p). `root` is the image of t; `base_generator` is the
/// image of K's generator w when K is itself an extension field.
struct Extension {
  Field base;
  Field field;
  FieldElement root;
  std::optional<FieldElement> base_generator;

  /// Ring embedding K -> K'.
  FieldElement embed(const FieldElement& a) const;
  UniPoly embed(const UniPoly& f) const;
};

/// Builds K[t]/(modulus). Over a prime field the flattened modulus is the
/// given one; over GF(p^k) it is the first irreducible of degree k*d over
/// GF(p). Throws ReducibleModulus or UnsupportedField.
Extension extend_field(const Field& base, const UniPoly& modulus);

/// Image of an element of `from` under a chain of extensions ending at `to`:
/// a prime-field element embeds as a constant, otherwise `gen_image` (the
/// image of from's generator) must be supplied. Throws FieldEmbeddingFailure.
FieldElement embed_into(const FieldElement& a, const Field& to, const std::optional<FieldElement>& gen_image);

}  // namespace grmod
