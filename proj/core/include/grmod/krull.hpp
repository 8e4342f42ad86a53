#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grmod/finite_algebra.hpp"

namespace grmod {

/// Smallest subspace containing `gens` and closed under multiplication by
/// every basis element.
Subspace ideal_generate(const FiniteAlgebra& R, const std::vector<Vector>& gens);

/// R e_i * U is contained in U for every i.
bool is_submodule(const FiniteAlgebra& R, const Subspace& U);

/// Span of all products a_i u_j. Throws NotSubmodule unless both a and U are
/// closed under the R-action.
Subspace product(const FiniteAlgebra& R, const Subspace& a, const Subspace& U);

struct StableIntersection {
  Subspace N;
  /// Least i >= 1 with a^i M = a^(i+1) M.
  int stabilized_at = 1;
  /// a M, a^2 M, ..., through the first repeat.
  std::vector<Subspace> chain;
};
StableIntersection stable_intersection(const FiniteAlgebra& R, const Subspace& a, const Subspace& M);

struct KrullCase {
  Subspace N;
  Subspace aN;
  bool holds = false;
};

struct KrullReport {
  Subspace a;
  Subspace M;
  StableIntersection intersection;
  /// The full intersection first, then the sampled submodules of it.
  std::vector<KrullCase> cases;
  bool all_hold = false;
};

/// Checks a N = N for N the intersection of all a^i M and for
/// `sample_submodules` random R-submodules of it.
KrullReport krull_check(const FiniteAlgebra& R, const std::vector<Vector>& a_gens, const std::vector<Vector>& M_gens,
                        std::size_t sample_submodules, std::uint64_t seed);

/// Random commutative algebra of dimension <= max_dim built from F[t]/(f)
/// factors, truncated monomial algebras and direct products, presented in a
/// random basis. Always satisfies the algebra laws.
FiniteAlgebra random_algebra(const Field& F, std::size_t max_dim, Rng& rng);

/// Uniformly random vector with entries from the field (small integers over Q).
Vector random_vector(const Field& F, std::size_t n, Rng& rng);

}  // namespace grmod
