#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace grmod {

namespace detail {
struct FieldData;
}

class FieldElement;

/// Handle to an exact coefficient field: Q, GF(p), or GF(p^k) = GF(p)[w]/(m).
///
/// Fields are interned for the lifetime of the process, so a handle is a
/// single pointer and equality is identity. Extension towers are always
/// flattened to one modulus over the prime field.
class Field {
 public:
  enum class Kind { Rationals, Prime, Extension };

  /// Q.
  Field();

  static Field rationals();
  /// GF(p). Throws NotPrime.
  static Field prime(std::uint64_t p);
  /// GF(p)[w]/(modulus); `modulus` lists coefficients from the constant term
  /// up and is normalized to monic. Throws ReducibleModulus.
  static Field extension(std::uint64_t p, std::span<const std::uint64_t> modulus);

  Kind kind() const;
  bool is_finite() const { return kind() != Kind::Rationals; }
  /// 0 for Q.
  std::uint64_t characteristic() const;
  /// [F : GF(p)]; 1 for prime fields and for Q.
  unsigned degree() const;
  /// Number of elements. Throws UnsupportedField for Q or when q overflows.
  std::uint64_t order() const;
  /// Monic modulus over GF(p), constant term first; empty unless Extension.
  const std::vector<std::uint64_t>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t n) const;
  /// Reduces into finite fields; a denominator divisible by p throws
  /// DivisionByZero.
  FieldElement from_rational(const mpq_class& q) const;
  /// Finite fields only: residues of 1, w, w^2, ... (missing entries are 0).
  FieldElement from_residues(std::span<const std::uint64_t> coeffs) const;
  /// The class of w in an extension field.
  FieldElement generator() const;

  /// Finite fields: the element with base-p digits `index` (constant term
  /// least significant), giving the fixed listing 0, 1, ..., w, w+1, ...
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& a) const;

  /// `Q`, `GF(7)`, `GF(2^2; w^2+w+1)`.
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }

  const detail::FieldData* data() const { return d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_;

  friend class FieldElement;
};

/// Element of a Field in canonical form: reduced fraction with positive
/// denominator, residue in [0, p), or a residue vector of exact length k.
class FieldElement {
 public:
  using Residues = boost::container::small_vector<std::uint64_t, 2>;

  /// Unbound element; only valid as an assignment target.
  FieldElement() = default;

  Field field() const { return Field(f_); }
  bool bound() const { return f_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Throws DivisionByZero.
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement pow(const mpz_class& e) const;

  /// Structural equality; elements of different fields compare unequal.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  const Residues& residues() const { return std::get<Residues>(v_); }
  /// Prime-field residue.
  std::uint64_t residue() const { return std::get<Residues>(v_)[0]; }

  /// Rationals as `a` or `a/b`; GF(p) as the residue; extensions as a
  /// polynomial in w such as `w^2+1`.
  std::string to_string() const;

 private:
  FieldElement(const detail::FieldData* f, mpq_class q) : f_(f), v_(std::move(q)) {}
  FieldElement(const detail::FieldData* f, Residues r) : f_(f), v_(std::move(r)) {}

  void check_same(const FieldElement& b) const;

  const detail::FieldData* f_ = nullptr;
  std::variant<Residues, mpq_class> v_;

  friend class Field;
};

namespace modp {
std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Throws DivisionByZero for a = 0.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
}  // namespace modp

/// Miller-Rabin with witness sets that are deterministic on 64-bit inputs.
bool is_prime(std::uint64_t n);

}  // namespace grmod
