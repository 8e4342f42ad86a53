#include <doctest.h>

#include <set>

#include "grmod/hilbert.hpp"
#include "grmod/error.hpp"
#include "support.hpp"

using namespace grmod;
using namespace grmod::testing;

namespace {

std::set<std::string> as_strings(const GroebnerBasis& gb) {
  std::set<std::string> s;
  for (const auto& g : gb.generators()) s.insert(g.to_string());
  return s;
}

}  // namespace

TEST_CASE("Buchberger examples") {
  const GradedRing R(Field::prime(7), 2);
  const GroebnerBasis gb = buchberger(R, polys(R, {"X0^2 - X1^2", "X0*X1"}));
  REQUIRE(gb.size() == 3);
  std::set<std::string> expected;
  for (const auto& f : polys(R, {"X0*X1", "X0^2 - X1^2", "X1^3"})) expected.insert(f.to_string());
  CHECK(as_strings(gb) == expected);
  CHECK(gb.is_reduced());
  CHECK(gb.spairs_reduce_to_zero());
  CHECK(as_strings(buchberger(R, polys(R, {"X0"}))) == std::set<std::string>{"X0"});
  CHECK(buchberger(R, std::vector<Polynomial>{Polynomial(R)}).size() == 0);
  CHECK(buchberger(R, std::vector<Polynomial>{}).size() == 0);
  CHECK_THROWS_AS(buchberger(R, polys(R, {"X0 + 1"})), Error);
}

TEST_CASE("normal form examples") {
  const GradedRing R(Field::prime(7), 2);
  const GroebnerBasis gb = buchberger(R, polys(R, {"X0^2 - X1^2", "X0*X1"}));
  auto nf = [&](std::string_view t) { return normal_form(ModuleElement::from_polynomial(poly(R, t)), gb); };
  CHECK(nf("X0^3").is_zero());
  CHECK(nf("X0^2*X1 + 3*X1^3").is_zero());
  CHECK(nf("X0^2") == nf("X1^2"));
  const ModuleElement r = nf("X1^2 + X0");
  CHECK(normal_form(r, gb) == r);
}

TEST_CASE("normal form is idempotent, linear, and detects membership") {
  Rng rng(21);
  for (const Field& F : {Field::prime(7), Field()}) {
    const GradedRing R(F, 3);
    for (int trial = 0; trial < 50; ++trial) {
      const auto J = random_ideal(R, 1 + static_cast<int>(rng() % 3), 3, rng);
      const GroebnerBasis gb = buchberger(R, J);
      REQUIRE(gb.spairs_reduce_to_zero());
      const ModuleElement f = ModuleElement::from_polynomial(random_homogeneous(R, 3, rng));
      const ModuleElement g = ModuleElement::from_polynomial(random_homogeneous(R, 3, rng));
      const FieldElement c = random_element(F, rng);
      REQUIRE(normal_form(normal_form(f, gb), gb) == normal_form(f, gb));
      REQUIRE(normal_form(f + g * c, gb) == normal_form(f, gb) + normal_form(g, gb) * c);
      // explicit combinations of the generators reduce to zero
      Polynomial combo(R);
      for (const auto& j : J) {
        const int d = 4 - static_cast<int>(j.total_degree());
        if (d >= 0) combo += random_homogeneous(R, d, rng) * j;
      }
      REQUIRE(normal_form(ModuleElement::from_polynomial(combo), gb).is_zero());
      // and a nonzero standard element is not a member
      const ModuleElement r = normal_form(f, gb);
      if (!r.is_zero()) REQUIRE_FALSE(normal_form(r, gb).is_zero());
    }
  }
}

TEST_CASE("component bases") {
  const GradedRing R(Field::prime(5), 2);
  const GroebnerBasis a = buchberger(R, polys(R, {"X0*X1"}));
  const auto c = component_basis(a, 3);
  REQUIRE(c.size() == 2);
  CHECK(c[0].mono.to_string() == "X0^3");
  CHECK(c[1].mono.to_string() == "X1^3");
  CHECK(component_basis(buchberger(R, std::vector<Polynomial>{}), 2).size() == 3);
  CHECK(component_basis(buchberger(R, polys(R, {"X0", "X1"})), 1).empty());
}

TEST_CASE("Hilbert examples") {
  const GradedRing R(Field::prime(7), 2);
  const HilbertData s = GradedModule::cyclic(R, {}).hilbert();
  CHECK(s.values(5) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
  CHECK(s.polynomial_string() == "k + 1");
  CHECK(s.stabilization_degree == 0);

  const HilbertData a = GradedModule::cyclic(R, polys(R, {"X0^2"})).hilbert();
  CHECK(a.values(4) == std::vector<std::uint64_t>{1, 2, 2, 2, 2});
  CHECK(a.polynomial_string() == "2");
  CHECK(a.stabilization_degree == 1);

  const HilbertData b = GradedModule::cyclic(R, polys(R, {"X0^2", "X0*X1", "X1^2"})).hilbert();
  CHECK(b.values(4) == std::vector<std::uint64_t>{1, 2, 0, 0, 0});
  CHECK(b.polynomial_is_zero());
  CHECK(b.stabilization_degree == 2);

  const GradedRing R3(Field(), 3);
  const HilbertData c = GradedModule::cyclic(R3, {}).hilbert();
  CHECK(c.polynomial_string() == "1/2*k^2 + 3/2*k + 1");
  CHECK(GradedModule::cyclic(R, polys(R, {"X0*X1"})).hilbert().numerator_string() == "1 - t^2");
}

TEST_CASE("module product basis examples") {
  const GradedRing R(Field::prime(7), 2);
  const GradedModule M = GradedModule::cyclic(R, polys(R, {"X0"}));
  CHECK(M.product_span(polys(R, {"X1"}), 2).dim() == M.dim(3));
  CHECK(M.dim(3) == 1);
  CHECK(M.product_span({}, 2).dim() == 0);
  const GradedModule S = GradedModule::cyclic(R, {});
  CHECK(S.product_span(polys(R, {"X0", "X1"}), 1).dim() == S.dim(2));
}

TEST_CASE("Hilbert function matches brute force on monomial ideals") {
  Rng rng(31);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Monomial> gens;
      const std::size_t count = 1 + rng() % 4;
      for (std::size_t i = 0; i < count; ++i) {
        Monomial::Exponents e;
        for (std::size_t v = 0; v < n; ++v) e.push_back(static_cast<std::uint32_t>(rng() % 4));
        Monomial m(e);
        if (!m.is_one()) gens.push_back(m);
      }
      const HilbertData h = hilbert_from_numerator(n, monomial_ideal_numerator(n, gens));
      for (int k = 0; k <= 12; ++k) REQUIRE(h.function(k) == brute_standard_count(n, gens, k));
      for (int k = h.stabilization_degree; k <= h.stabilization_degree + 8; ++k) {
        REQUIRE(mpq_class(h.function(k)) == h.polynomial_at(k));
      }
      if (h.stabilization_degree > 0) {
        const int d = h.stabilization_degree - 1;
        REQUIRE(mpq_class(h.function(d)) != h.polynomial_at(d));
      }
    }
  }
}

TEST_CASE("Hilbert data does not depend on the degree-refining order") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const GradedRing a(Field::prime(7), 3, MonomialOrder::DegRevLex), b(Field::prime(7), 3, MonomialOrder::DegLex);
    const auto J = random_ideal(a, 1 + static_cast<int>(rng() % 4), 3, rng);
    std::vector<Polynomial> Jb;
    for (const auto& f : J) Jb.push_back(Polynomial(b, f.terms()));
    const GradedModule Ma = GradedModule::cyclic(a, J), Mb = GradedModule::cyclic(b, Jb);
    REQUIRE(Ma.relations().spairs_reduce_to_zero());
    REQUIRE(Mb.relations().spairs_reduce_to_zero());
    REQUIRE(Ma.hilbert() == Mb.hilbert());
  }
}

TEST_CASE("component dimensions agree with Hilbert data and the raw oracle") {
  Rng rng(51);
  const GradedRing R(Field::prime(7), 3);
  for (int trial = 0; trial < 20; ++trial) {
    const Presentation p = random_presentation(R, rng);
    const GradedModule M = p.module();
    RawModule raw(p);
    REQUIRE(M.relations().spairs_reduce_to_zero());
    for (int k = 0; k <= 8; ++k) {
      REQUIRE(M.component(k).size() == M.dim(k));
      REQUIRE(M.dim(k) == raw.dim(k));
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto J = random_ideal(R, 1 + static_cast<int>(rng() % 3), 3, rng);
    const GradedModule M = GradedModule::cyclic(R, J);
    RawModule raw = RawModule::cyclic(R, J);
    for (int k = 0; k <= 8; ++k) REQUIRE(M.dim(k) == raw.dim(k));
  }
}

TEST_CASE("module Groebner bases over Q") {
  const GradedRing R(Field(), 2);
  const ModuleElement r1 = ModuleElement::from_components(R, polys(R, {"X1", "-X0"}));
  const ModuleElement r2 = ModuleElement::from_components(R, polys(R, {"X0^2", "0"}));
  const GroebnerBasis gb = buchberger(R, {0, 0}, {r1, r2});
  CHECK(gb.spairs_reduce_to_zero());
  RawModule raw(R, {0, 0}, {r1, r2});
  const GradedModule M(R, {0, 0}, {r1, r2});
  for (int k = 0; k <= 6; ++k) CHECK(M.dim(k) == raw.dim(k));
}

TEST_CASE("degree tables give consistent coordinates") {
  const GradedRing R(Field::prime(5), 3);
  const GradedModule M = GradedModule::cyclic(R, polys(R, {"X0*X1 - X2^2", "X0^3"}));
  const DegreeTable& t = M.table(4);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const ModuleElement v = ModuleElement::from_polynomial(random_homogeneous(R, 4, rng));
    const Vector c = t.coords(v);
    REQUIRE(t.element(c, R, 1) == M.normal_form(v));
  }
}
