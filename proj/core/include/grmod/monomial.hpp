#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace grmod {

/// Exponent vector over X0..Xn with a cached total degree. Products and
/// degrees are overflow-checked.
class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint32_t, 4>;

  Monomial() = default;
  /// The monomial 1 in `num_vars` variables.
  explicit Monomial(std::size_t num_vars);
  explicit Monomial(Exponents e);

  static Monomial variable(std::size_t num_vars, std::size_t i, std::uint32_t power = 1);

  std::size_t num_vars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const Exponents& exponents() const { return e_; }
  std::uint64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& b) const;
  /// Exact quotient; requires b.divides(*this).
  Monomial operator/(const Monomial& b) const;
  bool divides(const Monomial& m) const;
  bool coprime(const Monomial& m) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  /// `X0^2*X1`, or `1`.
  std::string to_string() const;

 private:
  Exponents e_;
  std::uint64_t deg_ = 0;
};

enum class MonomialOrder { DegRevLex, Lex, DegLex };

/// Negative, zero or positive as a < b, a == b, a > b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

std::string_view to_string(MonomialOrder order);
/// `degrevlex`, `lex`, `deglex`. Throws ParseError.
MonomialOrder parse_monomial_order(std::string_view s);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace grmod
