#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "grmod/groebner.hpp"

namespace grmod {

/// Exact Hilbert data of a graded quotient module.
///
/// The series is numerator(t) / (1 - t)^num_vars. The polynomial is exact
/// (rational coefficients in k, lowest power first), and
/// `stabilization_degree` is the least D with function(k) = polynomial(k)
/// for every k >= D.
struct HilbertData {
  std::size_t num_vars = 1;
  std::vector<std::int64_t> numerator;
  std::vector<mpq_class> polynomial;
  int stabilization_degree = 0;

  /// dim_F of the degree-k component, from the series expansion.
  std::uint64_t function(int k) const;
  std::vector<std::uint64_t> values(int through) const;
  mpq_class polynomial_at(int k) const;
  bool polynomial_is_zero() const { return polynomial.empty(); }
  /// Degree of the polynomial, -1 for the zero polynomial.
  int polynomial_degree() const { return static_cast<int>(polynomial.size()) - 1; }

  /// `k + 1`, `2`, `1/2*k^2 + 3/2*k + 1`.
  std::string polynomial_string() const;
  /// `1 - t^2`
  std::string numerator_string() const;

  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

/// Numerator of the Hilbert series of S/I for a monomial ideal I in
/// `num_vars` variables, over the denominator (1 - t)^num_vars. Uses the
/// pivot splitting H(S/I) = H(S/(I + p)) + t^deg(p) H(S/(I : p)) with
/// memoization on minimal generator sets.
std::vector<std::int64_t> monomial_ideal_numerator(std::size_t num_vars, std::vector<Monomial> gens);

/// Hilbert data of the quotient of the free module by the submodule whose
/// leading-term module is read off `gb`.
HilbertData hilbert_data(const GroebnerBasis& gb);

/// Assembles Hilbert data from a series numerator.
HilbertData hilbert_from_numerator(std::size_t num_vars, std::vector<std::int64_t> numerator);

}  // namespace grmod
