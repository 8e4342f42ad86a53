#include "grmod/krull.hpp"

#include <algorithm>

#include "grmod/error.hpp"

namespace grmod {

Subspace ideal_generate(const FiniteAlgebra& R, const std::vector<Vector>& gens) {
  Subspace U = Subspace::span(R.field(), R.dim(), gens);
  // breadth-first closure; each pass multiplies the newest vectors only
  std::vector<Vector> frontier = U.basis();
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& v : frontier) {
      for (std::size_t i = 0; i < R.dim(); ++i) {
        Vector w = R.multiply(R.basis_vector(i), v);
        if (U.insert(w)) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return U;
}

bool is_submodule(const FiniteAlgebra& R, const Subspace& U) {
  for (const auto& v : U.basis())
    for (std::size_t i = 0; i < R.dim(); ++i)
      if (!U.contains(R.multiply(R.basis_vector(i), v))) return false;
  return true;
}

Subspace product(const FiniteAlgebra& R, const Subspace& a, const Subspace& U) {
  if (!is_submodule(R, a)) raise(ErrorCode::NotSubmodule, "the ideal is not closed under multiplication");
  if (!is_submodule(R, U)) raise(ErrorCode::NotSubmodule, "the subspace is not an R-submodule");
  std::vector<Vector> rows;
  for (const auto& x : a.basis())
    for (const auto& u : U.basis()) rows.push_back(R.multiply(x, u));
  return Subspace::span(R.field(), R.dim(), std::move(rows));
}

StableIntersection stable_intersection(const FiniteAlgebra& R, const Subspace& a, const Subspace& M) {
  std::vector<Subspace> chain{product(R, a, M)};
  for (;;) {
    Subspace next = product(R, a, chain.back());
    if (next == chain.back()) break;
    if (!chain.back().contains(next)) raise(ErrorCode::InternalInconsistency, "ideal power chain is not descending");
    chain.push_back(std::move(next));
  }
  const int at = static_cast<int>(chain.size());
  Subspace N = chain.back();
  return StableIntersection{std::move(N), at, std::move(chain)};
}

KrullReport krull_check(const FiniteAlgebra& R, const std::vector<Vector>& a_gens, const std::vector<Vector>& M_gens,
                        std::size_t sample_submodules, std::uint64_t seed) {
  Subspace a = ideal_generate(R, a_gens);
  Subspace M = ideal_generate(R, M_gens);
  StableIntersection si = stable_intersection(R, a, M);
  std::vector<KrullCase> cases;
  auto test = [&](Subspace N) {
    Subspace aN = product(R, a, N);
    const bool holds = aN == N;
    cases.push_back(KrullCase{std::move(N), std::move(aN), holds});
  };
  test(si.N);
  Rng rng(seed);
  const auto& basis = si.N.basis();
  for (std::size_t s = 0; s < sample_submodules; ++s) {
    std::vector<Vector> pick;
    for (const auto& b : basis)
      if (rng() & 1) pick.push_back(b);
    // one random combination as well, so sampled submodules are not only coordinate ones
    if (!basis.empty()) {
      Vector v = zero_vector(R.field(), R.dim());
      for (const auto& b : basis) {
        const Vector c = random_vector(R.field(), 1, rng);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[0] * b[j];
      }
      if (rng() & 1) pick.push_back(std::move(v));
    }
    test(ideal_generate(R, pick).intersect(si.N));
  }
  const bool ok = std::all_of(cases.begin(), cases.end(), [](const KrullCase& c) { return c.holds; });
  return KrullReport{std::move(a), std::move(M), std::move(si), std::move(cases), ok};
}

Vector random_vector(const Field& F, std::size_t n, Rng& rng) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) {
    if (F.is_finite()) {
      v.push_back(F.element_at(rng() % F.order()));
    } else {
      v.push_back(F.from_int(static_cast<std::int64_t>(rng() % 7) - 3));
    }
  }
  return v;
}

namespace {

/// F[x_1..x_m]/(all monomials of degree top): a local algebra with a
/// nilpotent maximal ideal.
FiniteAlgebra truncated_monomial(const Field& F, std::size_t vars, std::size_t top) {
  GradedRing ring(F, vars);
  std::vector<Polynomial> gens;
  for (const auto& m : monomials_of_degree(ring, top)) gens.push_back(Polynomial::monomial(ring, F.one(), m));
  return FiniteAlgebra::from_quotient(ring, gens);
}

FiniteAlgebra random_piece(const Field& F, std::size_t max_dim, Rng& rng) {
  const std::size_t kind = rng() % 3;
  if (kind == 0 || max_dim < 3) {
    const std::size_t d = 1 + rng() % std::min<std::size_t>(max_dim, 3);
    Vector c = random_vector(F, d, rng);
    c.push_back(F.one());
    return FiniteAlgebra::univariate(UniPoly(F, std::move(c)));
  }
  if (kind == 1) {
    // F[t]/(t^d) or F[e]/(e^2 - e)
    if (rng() & 1) return FiniteAlgebra::univariate(UniPoly::monomial(F.one(), 2 + rng() % std::min<std::size_t>(max_dim - 1, 3)));
    return FiniteAlgebra::univariate(UniPoly::monomial(F.one(), 2) - UniPoly::x(F));
  }
  return truncated_monomial(F, 2, 2);
}

}  // namespace

FiniteAlgebra random_algebra(const Field& F, std::size_t max_dim, Rng& rng) {
  if (max_dim == 0) raise(ErrorCode::InvalidArgument, "dimension bound must be positive");
  FiniteAlgebra A = random_piece(F, max_dim, rng);
  while (A.dim() < max_dim && (rng() % 3) != 0) {
    FiniteAlgebra B = random_piece(F, max_dim - A.dim(), rng);
    if (A.dim() + B.dim() > max_dim) break;
    A = product_algebra(A, B);
  }
  // random invertible change of basis
  const std::size_t n = A.dim();
  for (;;) {
    Matrix T(F, n, n);
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n; ++j) {
      Vector c = random_vector(F, n, rng);
      for (std::size_t i = 0; i < n; ++i) T.at(i, j) = c[i];
      cols.push_back(std::move(c));
    }
    if (rank(F, n, cols) == n) return A.change_basis(T);
  }
}

}  // namespace grmod
