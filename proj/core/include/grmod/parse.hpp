#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grmod/finite_algebra.hpp"
#include "grmod/graded_module.hpp"

namespace grmod {

/// `Q`, `GF(7)`, `GF(2^2; w^2+w+1)`; `GF(p^k)` without a modulus picks the
/// first irreducible of degree k. Throws ParseError, NotPrime or
/// ReducibleModulus.
Field parse_field(std::string_view text);

/// Integer or `a/b` coefficients, `*`, `^`, parentheses and the variables in
/// `names` (default X0..Xn). Over GF(p^k) the identifier `w` is the field
/// generator. Throws ParseError with a column.
Polynomial parse_polynomial(const GradedRing& ring, std::string_view text, const std::vector<std::string>& names = {});

/// Splits on `sep` outside parentheses; each piece keeps its offset.
std::vector<std::pair<std::string, std::size_t>> split_top_level(std::string_view text, char sep);

/// A batch job: ring, one object and a command, validated before anything
/// is computed.
struct JobDescription {
  enum class Object { Ideal, Presented, StructureConstants, QuotientAlgebra };

  std::string command;
  Field field;
  std::vector<std::string> var_names;
  MonomialOrder order = MonomialOrder::DegRevLex;
  Object object = Object::Ideal;

  std::vector<Polynomial> ideal;
  std::vector<int> gens;
  std::vector<ModuleElement> relations;

  /// Structure-constant algebras: the algebra itself, and a ring whose
  /// variables are the basis labels for writing elements.
  std::optional<FiniteAlgebra> algebra;
  std::vector<std::string> labels;
  /// Krull inputs as polynomials in the labels (or in the ring variables
  /// for quotient algebras).
  std::vector<Polynomial> krull_ideal;
  std::vector<Polynomial> krull_module;

  /// Remaining `key: value` settings (seed, probe, max-ext, method,
  /// samples, threshold).
  std::map<std::string, std::string> options;

  GradedRing ring() const { return GradedRing(field, var_names.size(), order); }
  /// The graded module of an ideal or presented job.
  GradedModule module() const;
  /// The algebra of an algebra job (built from the quotient when needed).
  FiniteAlgebra build_algebra() const;
  /// Value of an algebra-job element written in labels or variables.
  Vector algebra_element(const FiniteAlgebra& A, const Polynomial& f) const;
};

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> c{"gb",           "hilbert",         "classify",   "simple-grading",
                                          "cartier-tate", "projective-zero", "krull-check"};
  return c;
}

/// Line-oriented `key: value` text; `#` starts a comment. Throws ParseError
/// (with line and column), InhomogeneousInput or UnknownCommand. A
/// non-empty `command` replaces the file's `command:` line, which then
/// becomes optional.
JobDescription parse_job(std::string_view text, std::string_view command = {});

}  // namespace grmod
