#pragma once

#include <cstddef>
#include <vector>

#include "grmod/graded_module.hpp"

namespace grmod {

struct DichotomyVerdict {
  enum class Kind { EventuallyEqual, EventuallyStrictlySmaller };
  Kind kind;
  /// EventuallyEqual: N_k = M_k for all k >= from.
  /// EventuallyStrictlySmaller: dim N_k < dim M_k for all k >= from.
  int from;
};
const char* to_string(DichotomyVerdict::Kind k);

/// Compares N = (B)M with M degreewise. B lists variable indices.
DichotomyVerdict dichotomy_check(const GradedModule& M, const std::vector<std::size_t>& B, int probe = 5);

struct MaximalSubset {
  std::vector<std::size_t> order;
  std::vector<std::size_t> B;
  std::size_t x;
};

/// Greedy scan over the variables in index order: a variable joins B when
/// M/(B)M stays long. x is the first variable left out. Throws
/// HypothesisViolated when M is short or has no variables.
MaximalSubset find_maximal_B(const GradedModule& M, int probe = 5);

/// Direct limit of P_0 -> P_1 -> ... under multiplication by a degree-one
/// element x, realized as P_D where x becomes bijective. The same space is
/// P/(1 - x)P; `class_of` sends an element to its image there by moving
/// every homogeneous component to degree D.
class Colimit {
 public:
  /// Throws PreconditionUnmet unless x P_k = P_{k+1} for all large k.
  Colimit(GradedModule P, Polynomial x, int probe = 5);

  const GradedModule& module() const { return P_; }
  const Polynomial& x() const { return x_; }
  /// Least s with x P_k = P_{k+1} for every k >= s.
  int simple_degree() const { return s_; }
  /// Least D >= s where dim P_k reaches its limit value.
  int degree() const { return D_; }
  std::size_t dim() const { return P_.dim(D_); }
  const std::vector<ModuleMonomial>& basis() const { return P_.table(D_).basis(); }
  /// Rank of x: P_D -> P_{D+1}; equals dim() when bijective.
  std::size_t bijectivity_rank() const { return bijective_rank_; }

  /// Image in P_D of a homogeneous element: x^(D-k) v for k <= D, the unique
  /// preimage under x^(k-D) otherwise.
  Vector transport(const ModuleElement& v) const;
  /// Sum of the transports of the homogeneous components.
  Vector class_of(const ModuleElement& f) const;
  /// Same map computed by scaling every component to a common degree first
  /// and reducing once.
  Vector class_by_scaling(const ModuleElement& f) const;
  /// The element of P_D with the given coordinates.
  ModuleElement representative(const Vector& c) const;

  /// Matrix of multiplication by x^e from P_k to P_{k+e}.
  Matrix x_power_matrix(int k, int e) const;

 private:
  Vector to_degree(const Vector& coords_k, int k) const;

  GradedModule P_;
  Polynomial x_;
  int s_ = 0;
  int D_ = 0;
  std::size_t bijective_rank_ = 0;
};

struct NonSaturationWitness {
  int threshold = 0;
  int degree = 0;
  /// Nonzero homogeneous element of P of the given degree.
  ModuleElement v;
  /// transport(v) in P_D, nonzero.
  Vector image;
  std::size_t bijective_rank = 0;
  std::size_t colimit_dim = 0;
};

/// A class v in P_j, j >= max(threshold, D), with nonzero image in the
/// colimit; no power of x kills it, so v is not in (1 - x)P. Throws PIsShort.
NonSaturationWitness nonsaturation_certificate(const Colimit& C, int threshold);

/// Independent check: is v (homogeneous of degree j) equal to (1 - x)u for
/// some u supported in degrees 0..top? Solves the block system
/// u_k - x u_{k-1} = [k = j] v directly.
bool in_one_minus_x_image(const GradedModule& P, const Polynomial& x, const ModuleElement& v, int j, int top);

struct CartierTateCertificate {
  std::vector<std::size_t> variable_order;
  std::vector<std::size_t> B;
  std::size_t x;
  GradedModule M;
  GradedModule P;
  Colimit colimit;
  NonSaturationWitness witness;
  /// L is generated by (B)M together with (1 - x) e_i.
  std::vector<ModuleElement> L_generators;

  int simple_degree_P() const { return colimit.simple_degree(); }
  int colimit_degree() const { return colimit.degree(); }
  std::size_t quotient_dim() const { return colimit.dim(); }
  /// Image of an element of M in M/L = P/(1 - x)P.
  Vector class_of(const ModuleElement& f) const { return colimit.class_of(P.normal_form(f)); }
};

/// Builds the certificate for a given split: requires M/(B)M long and
/// M/(B + x)M short. Throws PreconditionUnmet.
CartierTateCertificate certify(const GradedModule& M, std::vector<std::size_t> B, std::size_t x, int probe = 5);

/// Checks the hypotheses, picks (B, x) greedily and certifies.
/// Throws HypothesisViolated.
CartierTateCertificate run_theorem(const GradedModule& M, int probe = 5);

}  // namespace grmod
