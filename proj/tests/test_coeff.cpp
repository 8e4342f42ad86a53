#include <doctest.h>

#include "grmod/error.hpp"
#include "support.hpp"

using namespace grmod;
using grmod::testing::random_element;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInconsistency;
}

UniPoly random_unipoly(const Field& F, std::size_t max_deg, Rng& rng) {
  std::vector<FieldElement> c;
  const std::size_t d = rng() % (max_deg + 1);
  for (std::size_t i = 0; i <= d; ++i) c.push_back(random_element(F, rng));
  c.back() = F.one();
  return UniPoly(F, std::move(c));
}

}  // namespace

TEST_CASE("rational and prime field arithmetic") {
  const Field Q;
  CHECK(Q.from_rational(mpq_class(1, 3)) + Q.from_rational(mpq_class(1, 6)) == Q.from_rational(mpq_class(1, 2)));
  const Field F7 = Field::prime(7);
  CHECK(F7.from_int(3).inv() == F7.from_int(5));
  CHECK(F7.from_int(-1).residue() == 6);
  CHECK(F7.from_rational(mpq_class(1, 2)) == F7.from_int(4));
}

TEST_CASE("GF(4) reduces by its modulus") {
  const std::uint64_t m[] = {1, 1, 1};
  const Field F4 = Field::extension(2, m);
  const FieldElement w = F4.generator();
  CHECK(w * w == w + F4.one());
  CHECK(F4.order() == 4);
  CHECK(F4.to_string() == "GF(2^2; w^2+w+1)");
  CHECK((w * w).to_string() == "w+1");
}

TEST_CASE("errors: division by zero, field mismatch, non-primes, reducible moduli") {
  const Field F7 = Field::prime(7);
  CHECK(code_of([&] { (void)F7.zero().inv(); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { (void)(F7.one() / F7.zero()); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { (void)(F7.one() + Field::prime(5).one()); }) == ErrorCode::FieldMismatch);
  CHECK(code_of([] { (void)Field::prime(9); }) == ErrorCode::NotPrime);
  const std::uint64_t sq[] = {0, 0, 1};
  CHECK(code_of([&] { (void)Field::extension(2, sq); }) == ErrorCode::ReducibleModulus);
  CHECK(code_of([] { (void)Field().order(); }) == ErrorCode::UnsupportedField);
  CHECK(code_of([&] { (void)F7.from_rational(mpq_class(1, 7)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(7919));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(3215031751ULL));
}

TEST_CASE("field axioms on random triples") {
  const std::uint64_t m8[] = {1, 1, 0, 1};
  const std::uint64_t m9[] = {1, 0, 1};
  const Field fields[] = {Field(), Field::prime(7), Field::extension(2, m8), Field::extension(3, m9)};
  Rng rng(11);
  for (const Field& F : fields) {
    CAPTURE(F.to_string());
    for (int i = 0; i < 1000; ++i) {
      const FieldElement a = random_element(F, rng), b = random_element(F, rng), c = random_element(F, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a - a == F.zero());
      if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
  }
}

TEST_CASE("Fermat: a^(q-1) = 1 for every nonzero element") {
  const std::uint64_t m8[] = {1, 1, 0, 1};
  const std::uint64_t m9[] = {1, 0, 1};
  const std::uint64_t m25[] = {2, 0, 1};
  const Field fields[] = {Field::prime(7), Field::prime(13), Field::extension(2, m8), Field::extension(3, m9),
                          Field::extension(5, m25)};
  for (const Field& F : fields) {
    const std::uint64_t q = F.order();
    for (std::uint64_t i = 1; i < q; ++i) REQUIRE(F.element_at(i).pow(q - 1) == F.one());
  }
}

TEST_CASE("element listing is a bijection") {
  const std::uint64_t m9[] = {1, 0, 1};
  const Field F9 = Field::extension(3, m9);
  for (std::uint64_t i = 0; i < 9; ++i) CHECK(F9.index_of(F9.element_at(i)) == i);
  CHECK(F9.element_at(3) == F9.generator());
  CHECK(F9.element_at(1) == F9.one());
}

TEST_CASE("factorization examples") {
  Rng rng(1);
  const Field F2 = Field::prime(2), F3 = Field::prime(3);
  const Factorization a = factor(UniPoly::from_ints(F2, {1, 0, 1}), rng);
  REQUIRE(a.size() == 1);
  CHECK(a[0].first == UniPoly::from_ints(F2, {1, 1}));
  CHECK(a[0].second == 2);

  const Factorization b = factor(UniPoly::from_ints(F2, {1, 1, 1}), rng);
  REQUIRE(b.size() == 1);
  CHECK(b[0].first == UniPoly::from_ints(F2, {1, 1, 1}));
  CHECK(b[0].second == 1);

  const Factorization c = factor(UniPoly::from_ints(F3, {0, -1, 0, 1}), rng);
  REQUIRE(c.size() == 3);
  CHECK(c[0].first == UniPoly::from_ints(F3, {0, 1}));
  CHECK(c[1].first == UniPoly::from_ints(F3, {1, 1}));
  CHECK(c[2].first == UniPoly::from_ints(F3, {2, 1}));
  for (const auto& [f, e] : c) CHECK(e == 1);

  CHECK_THROWS_AS(factor(UniPoly::from_ints(Field(), {1, 1}), rng), Error);
}

TEST_CASE("factor product reconstructs the monic input") {
  Rng rng(5);
  for (std::uint64_t p : {2, 3, 5}) {
    const Field F = Field::prime(p);
    for (int i = 0; i < 200; ++i) {
      UniPoly f = random_unipoly(F, 8, rng);
      if (f.is_zero()) continue;
      CAPTURE(f.to_string());
      UniPoly prod = UniPoly::constant(F.one());
      for (const auto& [g, e] : factor(f, rng)) {
        REQUIRE(g.is_monic());
        REQUIRE(is_irreducible(g));
        for (unsigned k = 0; k < e; ++k) prod = prod * g;
      }
      REQUIRE(prod == f.monic());
    }
  }
}

TEST_CASE("roots agree with evaluation") {
  Rng rng(8);
  const Field F = Field::prime(7);
  for (int i = 0; i < 50; ++i) {
    const UniPoly f = random_unipoly(F, 5, rng);
    if (f.is_zero()) continue;
    const auto r = roots(f, rng);
    std::size_t count = 0;
    for (std::uint64_t a = 0; a < 7; ++a) count += f(F.element_at(a)).is_zero() ? 1 : 0;
    CHECK(r.size() == count);
    for (const auto& a : r) CHECK(f(a).is_zero());
  }
}

TEST_CASE("extend_field examples") {
  const Field F2 = Field::prime(2), F3 = Field::prime(3);
  const Extension e4 = extend_field(F2, UniPoly::from_ints(F2, {1, 1, 1}));
  CHECK(e4.field.order() == 4);
  CHECK(UniPoly::from_ints(F2, {1, 1, 1}).coefficients().size() == 3);
  const Extension e9 = extend_field(F3, UniPoly::from_ints(F3, {1, 0, 1}));
  CHECK(e9.field.order() == 9);
  CHECK((e9.root * e9.root + e9.field.one()).is_zero());
  for (std::uint64_t a = 0; a < 3; ++a) CHECK_FALSE(UniPoly::from_ints(F3, {1, 0, 1})(F3.element_at(a)).is_zero());
  try {
    (void)extend_field(F2, UniPoly::from_ints(F2, {0, 0, 1}));
    FAIL("expected ReducibleModulus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleModulus);
  }
}

TEST_CASE("embedding into a tower is a ring homomorphism") {
  const std::uint64_t m4[] = {1, 1, 1};
  const Field F4 = Field::extension(2, m4);
  const Extension e = extend_field(F4, first_irreducible(F4, 3));
  CHECK(e.field.order() == 64);
  REQUIRE(e.base_generator);
  for (std::uint64_t i = 0; i < 4; ++i) {
    for (std::uint64_t j = 0; j < 4; ++j) {
      const FieldElement a = F4.element_at(i), b = F4.element_at(j);
      CHECK(e.embed(a + b) == e.embed(a) + e.embed(b));
      CHECK(e.embed(a * b) == e.embed(a) * e.embed(b));
    }
  }
  CHECK(e.embed(F4.one()) == e.field.one());
  // the root satisfies the modulus after embedding its coefficients
  CHECK(e.embed(first_irreducible(F4, 3))(e.root).is_zero());
}

TEST_CASE("unipoly basics") {
  const Field F5 = Field::prime(5);
  const UniPoly z(F5);
  CHECK_FALSE(z.degree().has_value());
  const UniPoly f = UniPoly::from_ints(F5, {1, 2, 3});
  const UniPoly g = UniPoly::from_ints(F5, {4, 1});
  const DivMod qr = divmod(f, g);
  CHECK(qr.quotient * g + qr.remainder == f);
  CHECK(gcd(f * g, g * g) == g.monic());
  CHECK(f.derivative() == UniPoly::from_ints(F5, {2, 6}));
}
