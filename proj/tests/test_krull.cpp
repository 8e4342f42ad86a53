#include <doctest.h>

#include "grmod/error.hpp"
#include "grmod/krull.hpp"
#include "support.hpp"

using namespace grmod;
using namespace grmod::testing;

namespace {

FiniteAlgebra idempotent(const Field& F) {
  return FiniteAlgebra::univariate(UniPoly::monomial(F.one(), 2) - UniPoly::x(F), "e");
}

}  // namespace

TEST_CASE("ideal generation") {
  const Field F = Field::prime(5);
  const FiniteAlgebra R = idempotent(F);
  const Subspace a = ideal_generate(R, {R.basis_vector(1)});
  CHECK(a.dim() == 1);
  CHECK(a.contains(R.basis_vector(1)));
  CHECK(ideal_generate(R, {R.unit()}).dim() == 2);
  CHECK(ideal_generate(R, {}).dim() == 0);
}

TEST_CASE("ideal products") {
  const Field F = Field::prime(5);
  const FiniteAlgebra E = idempotent(F);
  const Subspace e = ideal_generate(E, {E.basis_vector(1)});
  CHECK(product(E, e, e) == e);
  const FiniteAlgebra T = FiniteAlgebra::univariate(UniPoly::monomial(F.one(), 3));
  const Subspace t = ideal_generate(T, {T.basis_vector(1)});
  const Subspace t2 = ideal_generate(T, {T.basis_vector(2)});
  CHECK(product(T, t, t2).dim() == 0);
  const Subspace whole = Subspace::whole(F, 3);
  CHECK(product(T, whole, t2) == t2);
  CHECK_THROWS_AS(product(T, Subspace::span(F, 3, {T.basis_vector(1)}), whole), Error);
}

TEST_CASE("stable intersections") {
  const Field F = Field::prime(5);
  const FiniteAlgebra T = FiniteAlgebra::univariate(UniPoly::monomial(F.one(), 3));
  const StableIntersection a =
      stable_intersection(T, ideal_generate(T, {T.basis_vector(1)}), Subspace::whole(F, 3));
  CHECK(a.N.dim() == 0);
  CHECK(a.stabilized_at == 3);
  const FiniteAlgebra E = idempotent(F);
  const StableIntersection b = stable_intersection(E, ideal_generate(E, {E.basis_vector(1)}), Subspace::whole(F, 2));
  CHECK(b.N.dim() == 1);
  CHECK(b.stabilized_at == 1);
  const StableIntersection c = stable_intersection(E, Subspace(F, 2), Subspace::whole(F, 2));
  CHECK(c.N.dim() == 0);
  CHECK(c.stabilized_at == 1);
}

TEST_CASE("Krull intersection examples") {
  const Field F = Field::prime(5);
  const FiniteAlgebra E = idempotent(F);
  const KrullReport a = krull_check(E, {E.basis_vector(1)}, {E.unit()}, 5, 1);
  CHECK(a.all_hold);
  CHECK(a.intersection.N.dim() == 1);
  const FiniteAlgebra T = FiniteAlgebra::univariate(UniPoly::monomial(F.one(), 3));
  const KrullReport b = krull_check(T, {T.basis_vector(1)}, {T.unit()}, 5, 1);
  CHECK(b.all_hold);
  CHECK(b.intersection.N.dim() == 0);
  const GradedRing R(F, 2);
  const FiniteAlgebra L = FiniteAlgebra::from_quotient(R, polys(R, {"X0^2", "X0*X1", "X1^2"}));
  CHECK(L.dim() == 3);
  const KrullReport c = krull_check(L, L.images(), {L.unit()}, 5, 1);
  CHECK(c.all_hold);
  CHECK(c.intersection.N.dim() == 0);
}

TEST_CASE("random algebras satisfy the laws and the intersection theorem") {
  Rng rng(111);
  for (const Field& F : {Field::prime(5), Field()}) {
    for (int trial = 0; trial < 20; ++trial) {
      const FiniteAlgebra A = random_algebra(F, 6, rng);
      REQUIRE(A.dim() <= 6);
      REQUIRE_FALSE(A.law_violation());
      std::vector<Vector> a{random_vector(F, A.dim(), rng)}, M{random_vector(F, A.dim(), rng)};
      const KrullReport r = krull_check(A, a, M, 4, trial);
      REQUIRE(r.all_hold);
      REQUIRE(r.intersection.stabilized_at <= static_cast<int>(A.dim()) + 1);
      for (const auto& c : r.cases) REQUIRE(is_submodule(A, c.N));
    }
  }
}

TEST_CASE("algebra validation") {
  const Field F = Field::prime(5);
  const FiniteAlgebra E = idempotent(F);
  auto table = E.table();
  table[1][1] = E.unit();  // F[e]/(e^2 - 1)
  const FiniteAlgebra twisted(F, E.labels(), table, E.unit());
  CHECK_FALSE(twisted.law_violation());
  auto bad = E.table();
  bad[0][1] = E.unit();  // 1*e != e
  bool rejected = false;
  try {
    rejected = FiniteAlgebra(F, E.labels(), bad, E.unit()).law_violation().has_value();
  } catch (const Error&) {
    rejected = true;
  }
  CHECK(rejected);
}
