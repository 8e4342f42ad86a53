#include <doctest.h>

#include "grmod/error.hpp"
#include "support.hpp"

using namespace grmod;
using namespace grmod::testing;

TEST_CASE("products and homogeneity") {
  const GradedRing R(Field::prime(7), 3);
  CHECK(poly(R, "(X0 + X1)*(X0 - X1)") == poly(R, "X0^2 - X1^2"));
  const Polynomial f = poly(R, "X0*X1 + X2^2"), g = poly(R, "X0^3 - 2*X1*X2^2");
  const Homogeneity h = (f * g).homogeneity();
  CHECK(h.homogeneous);
  CHECK(h.degree == 5u);
  CHECK((f + (-f)).is_zero());
}

TEST_CASE("homogeneous components") {
  const GradedRing R(Field::prime(7), 2);
  const auto c = poly(R, "X0^2 + X1 + 3").homogeneous_components();
  REQUIRE(c.size() == 3);
  CHECK(c.at(0) == poly(R, "3"));
  CHECK(c.at(1) == poly(R, "X1"));
  CHECK(c.at(2) == poly(R, "X0^2"));
  CHECK(Polynomial(R).homogeneous_components().empty());
  const Polynomial h = poly(R, "X0*X1 - X1^2");
  CHECK(h.homogeneous_components() == std::map<std::uint64_t, Polynomial>{{2, h}});
}

TEST_CASE("homogeneity test") {
  const GradedRing R(Field::prime(7), 3);
  const Homogeneity a = poly(R, "X0*X1 + X2^2").homogeneity();
  CHECK(a.homogeneous);
  CHECK(a.degree == 2u);
  CHECK_FALSE(poly(R, "X0 + 1").is_homogeneous());
  const Homogeneity z = Polynomial(R).homogeneity();
  CHECK(z.homogeneous);
  CHECK_FALSE(z.degree.has_value());
}

TEST_CASE("monomials of degree") {
  const GradedRing R2(Field::prime(7), 2), R3(Field::prime(7), 3);
  CHECK(monomials_of_degree(R2, 3).size() == 4);
  CHECK(monomials_of_degree(R3, 2).size() == 6);
  const auto one = monomials_of_degree(R3, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_one());
  for (auto order : {MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::DegLex}) {
    const GradedRing R(Field::prime(7), 3, order);
    const auto ms = monomials_of_degree(R, 4);
    CHECK(ms.size() == 15);
    for (std::size_t i = 1; i < ms.size(); ++i) CHECK(R.compare(ms[i - 1], ms[i]) > 0);
  }
}

TEST_CASE("degrevlex and deglex differ where expected") {
  const GradedRing R(Field::prime(7), 3);
  const Monomial a = poly(R, "X0*X2").leading().mono, b = poly(R, "X1^2").leading().mono;
  CHECK(compare(a, b, MonomialOrder::DegLex) > 0);
  CHECK(compare(a, b, MonomialOrder::DegRevLex) < 0);
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(3);
  for (const Field& F : {Field::prime(7), Field()}) {
    const GradedRing R(F, 3);
    for (int i = 0; i < 500; ++i) {
      const Polynomial a = random_polynomial(R, 3, rng), b = random_polynomial(R, 3, rng),
                       c = random_polynomial(R, 3, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a - a == Polynomial(R));
    }
  }
}

TEST_CASE("monomial orders are compatible with multiplication") {
  Rng rng(4);
  const GradedRing R(Field::prime(7), 3);
  auto random_mono = [&] {
    Monomial::Exponents e;
    for (int i = 0; i < 3; ++i) e.push_back(static_cast<std::uint32_t>(rng() % 4));
    return Monomial(e);
  };
  for (auto order : {MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::DegLex}) {
    for (int i = 0; i < 500; ++i) {
      const Monomial u = random_mono(), v = random_mono(), w = random_mono();
      if (compare(u, v, order) < 0) REQUIRE(compare(u * w, v * w, order) < 0);
      REQUIRE(compare(u, v, order) == -compare(v, u, order));
    }
  }
  (void)R;
}

TEST_CASE("degree additivity and component roundtrip") {
  Rng rng(9);
  const GradedRing R(Field::prime(7), 3);
  for (int i = 0; i < 200; ++i) {
    const int d1 = static_cast<int>(rng() % 4), d2 = static_cast<int>(rng() % 4);
    const Polynomial f = random_homogeneous(R, d1, rng), g = random_homogeneous(R, d2, rng);
    if (!f.is_zero() && !g.is_zero()) REQUIRE((f * g).homogeneity().degree == static_cast<std::uint64_t>(d1 + d2));
    const Polynomial h = random_polynomial(R, 4, rng);
    Polynomial sum(R);
    for (const auto& [d, c] : h.homogeneous_components()) {
      REQUIRE(c.homogeneity().degree == d);
      sum += c;
    }
    REQUIRE(sum == h);
  }
}

TEST_CASE("text roundtrip") {
  Rng rng(10);
  for (const Field& F : {Field::prime(7), Field()}) {
    const GradedRing R(F, 3);
    for (int i = 0; i < 100; ++i) {
      const Polynomial f = random_polynomial(R, 4, rng);
      REQUIRE(poly(R, f.to_string()) == f);
    }
  }
  const GradedRing R(Field(), 3);
  CHECK(poly(R, "2*X0^2*X1 - 1/3*X2^3").to_string() == "2*X0^2*X1 - 1/3*X2^3");
}

TEST_CASE("evaluation") {
  const GradedRing R(Field::prime(5), 2);
  const FieldElement pt[] = {R.field.from_int(2), R.field.from_int(3)};
  CHECK(poly(R, "X0^2 + X0*X1").evaluate(pt) == R.field.from_int(0));
  CHECK(poly(R, "X1^2").evaluate(pt) == R.field.from_int(4));
}

TEST_CASE("exponent overflow is an error") {
  Monomial::Exponents e{0xffffffffu, 0};
  const Monomial big(e);
  CHECK_THROWS_AS((void)(big * big), Error);
}
