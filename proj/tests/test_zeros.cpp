#include <doctest.h>

#include "grmod/cartier.hpp"
#include "grmod/error.hpp"
#include "grmod/zeros.hpp"
#include "support.hpp"

using namespace grmod;
using namespace grmod::testing;

TEST_CASE("algebras from certificates") {
  const GradedRing R(Field::prime(5), 2);
  const FiniteAlgebra a = algebra_from_certificate(run_theorem(GradedModule::cyclic(R, polys(R, {"X0"}))));
  CHECK(a.dim() == 1);
  CHECK(a.images() == std::vector<Vector>{{R.field.zero()}, {R.field.one()}});
  const FiniteAlgebra b = algebra_from_certificate(run_theorem(GradedModule::cyclic(R, polys(R, {"X0*X1"}))));
  CHECK(b.dim() == 1);
  CHECK(b.images() == std::vector<Vector>{{R.field.zero()}, {R.field.one()}});
  const FiniteAlgebra c = algebra_from_certificate(certify(GradedModule::cyclic(R, polys(R, {"X0^2"})), {}, 1));
  CHECK(c.dim() == 2);
  CHECK_FALSE(c.law_violation());
  const Vector eps = c.images()[0];
  CHECK_FALSE(is_zero(eps));
  CHECK(is_zero(c.multiply(eps, eps)));
  CHECK(c.images()[1] == c.unit());

  const ModuleElement syz = ModuleElement::from_components(R, polys(R, {"X1", "-X0"}));
  CHECK_THROWS_AS(algebra_from_certificate(run_theorem(GradedModule(R, {0, 0}, {syz}))), Error);
}

TEST_CASE("points from maximal ideals") {
  const GradedRing R(Field::prime(5), 2);
  const FiniteAlgebra a = algebra_from_certificate(run_theorem(GradedModule::cyclic(R, polys(R, {"X0"}))));
  CHECK(maximal_ideal_point(a).to_string() == "(0 : 1)");
  const FiniteAlgebra c = algebra_from_certificate(certify(GradedModule::cyclic(R, polys(R, {"X0^2"})), {}, 1));
  CHECK(maximal_ideal_point(c).to_string() == "(0 : 1)");

  const Field F2 = Field::prime(2);
  const FiniteAlgebra u = FiniteAlgebra::univariate(UniPoly::from_ints(F2, {1, 1, 1}), "u");
  const FiniteAlgebra uu(F2, u.labels(), u.table(), u.unit(), {u.basis_vector(1), u.unit()});
  const ProjectivePoint p = maximal_ideal_point(uu);
  CHECK(p.field.order() == 4);
  REQUIRE(p.coords.size() == 2);
  // projectively (u : 1) with u^2 + u + 1 = 0
  REQUIRE_FALSE(p.coords[1].is_zero());
  const FieldElement r = p.coords[0] / p.coords[1];
  CHECK((r * r + r + p.field.one()).is_zero());
}

TEST_CASE("verify_zero") {
  const GradedRing R(Field::prime(5), 2);
  const Field F = R.field;
  CHECK(verify_zero(polys(R, {"X0"}), ProjectivePoint::normalized(F, {F.zero(), F.one()})));
  CHECK_FALSE(verify_zero(polys(R, {"X0"}), ProjectivePoint::normalized(F, {F.one(), F.one()})));
  const GradedRing R2(Field::prime(2), 2);
  const std::uint64_t m[] = {1, 1, 1};
  const Field F4 = Field::extension(2, m);
  const ProjectivePoint p =
      ProjectivePoint::normalized(R2.field, {F4.one(), F4.generator()}, std::nullopt);
  CHECK(verify_zero(polys(R2, {"X0^2 + X0*X1 + X1^2"}), p));
  CHECK_THROWS_AS(ProjectivePoint::normalized(F, {F.zero(), F.zero()}), Error);
}

TEST_CASE("brute-force enumeration") {
  const GradedRing R3(Field::prime(3), 2);
  const auto a = brute_force_zero(R3, polys(R3, {"X0*X1"}), 1);
  REQUIRE(a);
  CHECK(a->to_string() == "(0 : 1)");
  const GradedRing R2(Field::prime(2), 2);
  CHECK_FALSE(brute_force_zero(R2, polys(R2, {"X0^2 + X0*X1 + X1^2"}), 1));
  const auto b = brute_force_zero(R2, polys(R2, {"X0^2 + X0*X1 + X1^2"}), 2);
  REQUIRE(b);
  CHECK(b->field.order() == 4);
  CHECK(verify_zero(polys(R2, {"X0^2 + X0*X1 + X1^2"}), *b));
  CHECK_FALSE(brute_force_zero(R2, polys(R2, {"X0", "X1"}), 3));
}

TEST_CASE("homogeneous Nullstellensatz") {
  const GradedRing R(Field::prime(5), 2);
  const NullstellensatzResult a = nullstellensatz(R, polys(R, {"X0", "X1"}));
  CHECK(a.status == NullstellensatzResult::Status::Saturated);
  CHECK(a.saturated_from == 1);
  const NullstellensatzResult b = nullstellensatz(R, polys(R, {"X0"}));
  CHECK(b.status == NullstellensatzResult::Status::Zero);
  REQUIRE(b.point);
  CHECK(b.point->to_string() == "(0 : 1)");
  CHECK(b.certificate.has_value());

  const GradedRing R2(Field::prime(2), 2);
  const NullstellensatzResult c = nullstellensatz(R2, polys(R2, {"X0^2 + X0*X1 + X1^2"}));
  CHECK(c.status == NullstellensatzResult::Status::Zero);
  REQUIRE(c.point);
  CHECK(c.point->field.order() == 4);
  CHECK(verify_zero(polys(R2, {"X0^2 + X0*X1 + X1^2"}), *c.point));

  const GradedRing Q(Field(), 3);
  const NullstellensatzResult d = nullstellensatz(Q, polys(Q, {"X0*X1 - X2^2"}));
  CHECK(d.status == NullstellensatzResult::Status::Algebra);
  REQUIRE(d.algebra);
  REQUIRE(d.non_nilpotent);
  CHECK_FALSE(d.algebra->is_nilpotent(*d.non_nilpotent));
  CHECK_THROWS_AS(nullstellensatz(R, polys(R, {"X0 + 1"})), Error);
}

TEST_CASE("certificate algebras satisfy the laws and kill J") {
  Rng rng(101);
  for (const Field& F : {Field::prime(3), Field::prime(5), Field()}) {
    const GradedRing R(F, 3);
    for (int trial = 0; trial < 12; ++trial) {
      const auto J = random_ideal(R, 1 + static_cast<int>(rng() % 2), 2, rng);
      const NullstellensatzResult r = nullstellensatz(R, J, trial);
      if (r.status == NullstellensatzResult::Status::Saturated) continue;
      const FiniteAlgebra& A = *r.algebra;
      REQUIRE_FALSE(A.law_violation());
      // each generator of J maps to zero under X_i -> image_i
      for (const auto& f : J) {
        Vector value = A.zero();
        for (const auto& t : f.terms()) {
          Vector m = A.unit();
          for (std::size_t i = 0; i < R.num_vars; ++i) m = A.multiply(m, A.power(A.images()[i], t.mono[i]));
          for (std::size_t j = 0; j < value.size(); ++j) value[j] += t.coef * m[j];
        }
        REQUIRE(is_zero(value));
      }
      if (r.point) REQUIRE(verify_zero(J, *r.point));
    }
  }
}
