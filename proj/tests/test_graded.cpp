#include <doctest.h>

#include "grmod/error.hpp"
#include "support.hpp"

using namespace grmod;
using namespace grmod::testing;

namespace {

GradedModule ideal_as_module(const GradedRing& R) {
  // the ideal (X0^2, X1^3): generators of degree 2 and 3, one syzygy
  const ModuleElement syz = ModuleElement::from_components(R, polys(R, {"X1^3", "-X0^2"}));
  return GradedModule(R, {2, 3}, {syz});
}

}  // namespace

TEST_CASE("components of cyclic modules") {
  const GradedRing R(Field::prime(5), 2);
  const auto c = GradedModule::cyclic(R, polys(R, {"X0*X1"})).component(2);
  REQUIRE(c.size() == 2);
  CHECK(c[0].mono.to_string() == "X0^2");
  CHECK(c[1].mono.to_string() == "X1^2");
  const auto one = GradedModule::cyclic(R, {}).component(0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].mono.is_one());
  CHECK(GradedModule::cyclic(R, polys(R, {"X0", "X1"})).component(5).empty());
}

TEST_CASE("simple grading examples") {
  const GradedRing R(Field::prime(7), 2);
  CHECK(check_simple_grading(GradedModule::cyclic(R, polys(R, {"X0*X1"}))).first_simple_degree == 0);
  CHECK(check_simple_grading(GradedModule::cyclic(R, polys(R, {"X0^2", "X1^3"}))).first_simple_degree == 0);
  CHECK(check_simple_grading(GradedModule(R, {2}, {})).first_simple_degree == 2);
  // short beyond degree 2: simple trivially there
  const GradedModule shortm = GradedModule::cyclic(R, polys(R, {"X0^2", "X0*X1", "X1^2"}));
  CHECK(check_simple_grading(shortm).first_simple_degree == 0);
  CHECK(check_simple_grading(ideal_as_module(R)).first_simple_degree == 3);
}

TEST_CASE("minimal generator degrees") {
  const GradedRing R(Field::prime(7), 2);
  CHECK(minimal_generator_degrees(GradedModule::cyclic(R, polys(R, {"X0*X1"}))) == std::vector<int>{0});
  CHECK(minimal_generator_degrees(ideal_as_module(R)) == std::vector<int>{2, 3});
  CHECK(minimal_generator_degrees(GradedModule::cyclic(R, polys(R, {"1"}))).empty());
  // a redundant generator: e1 = X0 e0
  const ModuleElement rel = ModuleElement::from_components(R, polys(R, {"X0", "-1"}));
  CHECK(minimal_generator_degrees(GradedModule(R, {0, 1}, {rel})) == std::vector<int>{0});
}

TEST_CASE("length classification") {
  const GradedRing R(Field::prime(7), 2);
  const LengthReport a = classify_length(GradedModule::cyclic(R, polys(R, {"X0^2", "X0*X1", "X1^2"})));
  CHECK(a.length == Length::Short);
  CHECK(a.from == 2);
  const LengthReport b = classify_length(GradedModule::cyclic(R, polys(R, {"X0*X1"})));
  CHECK(b.length == Length::Long);
  CHECK(b.from == 0);
  CHECK(classify_length(GradedModule::cyclic(R, {})).length == Length::Long);
  // a Long module with an initial gap
  const LengthReport c = classify_length(GradedModule(R, {3}, {}));
  CHECK(c.length == Length::Long);
  CHECK(c.from == 3);
}

TEST_CASE("saturation") {
  const GradedRing R(Field::prime(7), 2);
  const GradedModule S = GradedModule::cyclic(R, {});
  auto sub = [&](std::initializer_list<std::string_view> g) {
    std::vector<ModuleElement> gens;
    for (const auto& f : polys(R, g)) gens.push_back(ModuleElement::from_polynomial(f));
    return GradedSubmodule(S, gens);
  };
  const SaturationReport a = is_saturated(sub({"X0", "X1"}));
  CHECK(a.saturated);
  CHECK(a.from == 1);
  const SaturationReport b = is_saturated(sub({"X0"}));
  CHECK_FALSE(b.saturated);
  CHECK(b.quotient_hilbert.polynomial_string() == "1");
  const SaturationReport c = is_saturated(sub({"1"}));
  CHECK(c.saturated);
  CHECK(c.from == 0);
  CHECK_THROWS_AS(sub({"X0 + X1^2"}), Error);
}

TEST_CASE("product submodules") {
  const GradedRing R(Field::prime(7), 2);
  const GradedModule M = GradedModule::cyclic(R, polys(R, {"X0*X1"}));
  const GradedSubmodule none = product_submodule({}, M);
  CHECK(quotient_module(M, none).hilbert() == M.hilbert());
  const GradedSubmodule x0 = product_submodule(polys(R, {"X0"}), M);
  CHECK(submodule_dims(x0, 4) == std::vector<std::size_t>{0, 1, 1, 1, 1});
  const GradedSubmodule all = product_submodule(polys(R, {"X0", "X1"}), M);
  const auto d = submodule_dims(all, 6);
  for (int k = 1; k <= 6; ++k) CHECK(d[k] == M.dim(k));
  CHECK_THROWS_AS(product_submodule(polys(R, {"X0^2"}), M), Error);
}

TEST_CASE("quotients") {
  const GradedRing R(Field::prime(7), 2);
  const GradedModule S = GradedModule::cyclic(R, {});
  const GradedModule a = quotient_module(S, GradedSubmodule(S, {}));
  CHECK(a.hilbert() == S.hilbert());
  const GradedModule b = quotient_module(S, GradedSubmodule(S, {ModuleElement::from_polynomial(poly(R, "X0"))}));
  CHECK(b.hilbert().values(5) == std::vector<std::uint64_t>{1, 1, 1, 1, 1, 1});
  const GradedModule c = quotient_module(S, GradedSubmodule(S, {S.unit(0)}));
  CHECK(c.hilbert().values(3) == std::vector<std::uint64_t>{0, 0, 0, 0});
}

TEST_CASE("product submodule agrees with the per-degree definition") {
  Rng rng(61);
  const GradedRing R(Field::prime(5), 3);
  for (int trial = 0; trial < 15; ++trial) {
    const Presentation p = random_presentation(R, rng);
    const GradedModule M = p.module();
    RawModule raw(p);
    std::vector<Polynomial> B;
    for (std::size_t i = 0; i < 3; ++i)
      if (rng() & 1) B.push_back(Polynomial::variable(R, i));
    if (rng() & 1) B.push_back(random_homogeneous(R, 1, rng));
    const auto dims = submodule_dims(product_submodule(B, M), 7);
    REQUIRE(dims[0] == 0);
    for (int k = 1; k <= 7; ++k) {
      REQUIRE(dims[k] == M.product_span(B, k - 1).dim());
      REQUIRE(dims[k] == raw.product_dim(B, k));
    }
  }
}

TEST_CASE("technical lemma on random presentations") {
  Rng rng(71);
  const GradedRing R(Field::prime(7), 3);
  for (int trial = 0; trial < 15; ++trial) {
    const Presentation p = random_presentation(R, rng);
    const GradedModule M = p.module();
    RawModule raw(p);
    const TechnicalLemmaReport r = technical_lemma_report(M);
    CAPTURE(trial);
    REQUIRE(r.regenerates);
    REQUIRE(r.simple.first_simple_degree <= M.max_generator_degree());
    for (int k = r.simple.first_simple_degree; k <= r.simple.verified_through; ++k) {
      REQUIRE(raw.s1_dim(k) == raw.dim(k + 1));
    }
    if (r.simple.first_simple_degree > 0) {
      const int k = r.simple.first_simple_degree - 1;
      REQUIRE(raw.s1_dim(k) < raw.dim(k + 1));
    }
    // minimal generators: their count in degree d is dim M_d - dim S_1 M_{d-1}
    std::map<int, std::size_t> count;
    for (int d : r.generator_degrees) ++count[d];
    for (int d = 0; d <= M.max_generator_degree() + 1; ++d) {
      const std::size_t expected = raw.dim(d) - (d > 0 ? raw.s1_dim(d - 1) : 0);
      REQUIRE(count[d] == expected);
    }
  }
}
