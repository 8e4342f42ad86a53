#include "grmod/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "grmod/error.hpp"

namespace grmod {

namespace detail {
struct FieldData {
  Field::Kind kind;
  std::uint64_t p = 0;
  unsigned k = 1;
  std::vector<std::uint64_t> modulus;  // monic, size k + 1, only for extensions
};
}  // namespace detail

namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) raise(ErrorCode::DivisionByZero, "inverse of zero in GF(" + std::to_string(p) + ")");
  // extended Euclid on signed 128-bit to stay clear of overflow
  __int128 t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    __int128 q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace modp

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t s : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % s == 0) return n == s;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  auto witness = [&](std::uint64_t a) {
    std::uint64_t x = modp::pow(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
      x = modp::mul(x, x, n);
      if (x == n - 1) return false;
    }
    return true;
  };
  // {2, 7, 61} is exact below 2^32; the first twelve primes are exact below 2^64.
  if (n < (1ULL << 32)) {
    for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
      if (witness(a)) return false;
    }
    return true;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (witness(a)) return false;
  }
  return true;
}

namespace {

using Raw = std::vector<std::uint64_t>;

void trim(Raw& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Raw raw_mod(Raw a, const Raw& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = modp::inv(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = modp::mul(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = modp::sub(a[shift + i], modp::mul(c, m[i], p), p);
    trim(a);
  }
  return a;
}

Raw raw_mulmod(const Raw& a, const Raw& b, const Raw& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Raw c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = modp::add(c[i + j], modp::mul(a[i], b[j], p), p);
  }
  return raw_mod(std::move(c), m, p);
}

Raw raw_powmod(Raw base, std::uint64_t e, const Raw& m, std::uint64_t p) {
  Raw r{1};
  base = raw_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = raw_mulmod(r, base, m, p);
    base = raw_mulmod(base, base, m, p);
    e >>= 1;
  }
  return raw_mod(std::move(r), m, p);
}

Raw raw_gcd(Raw a, Raw b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Raw r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Raw raw_sub(Raw a, const Raw& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = modp::sub(a[i], b[i], p);
  trim(a);
  return a;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's test for a monic polynomial over GF(p).
bool raw_is_irreducible(const Raw& m, std::uint64_t p) {
  const unsigned n = static_cast<unsigned>(m.size() - 1);
  if (n == 0) return false;
  if (n == 1) return true;
  const Raw x{0, 1};
  std::vector<Raw> frob(n + 1);  // frob[i] = x^(p^i) mod m
  frob[0] = raw_mod(x, m, p);
  for (unsigned i = 1; i <= n; ++i) frob[i] = raw_powmod(frob[i - 1], p, m, p);
  if (raw_sub(frob[n], raw_mod(x, m, p), p).size() != 0) return false;
  for (unsigned r : prime_divisors(n)) {
    Raw g = raw_gcd(m, raw_sub(frob[n / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Raw raw_inv(const Raw& a, const Raw& m, std::uint64_t p) {
  // extended Euclid: track s with s*a = r (mod m)
  Raw r0 = m, r1 = a, s0{}, s1{1};
  trim(r1);
  if (r1.empty()) raise(ErrorCode::DivisionByZero, "inverse of zero in extension field");
  while (!r1.empty()) {
    Raw q;
    Raw rem = r0;
    const std::uint64_t lead_inv = modp::inv(r1.back(), p);
    if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size() && !rem.empty()) {
      std::uint64_t c = modp::mul(rem.back(), lead_inv, p);
      std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = modp::sub(rem[shift + i], modp::mul(c, r1[i], p), p);
      trim(rem);
    }
    // s2 = s0 - q*s1
    Raw qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = modp::add(qs[i + j], modp::mul(q[i], s1[j], p), p);
    trim(qs);
    Raw s2 = raw_sub(s0, qs, p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because m is irreducible
  if (r0.size() != 1) raise(ErrorCode::InternalInconsistency, "extension modulus is not irreducible");
  const std::uint64_t c = modp::inv(r0[0], p);
  for (auto& v : s0) v = modp::mul(v, c, p);
  return raw_mod(std::move(s0), m, p);
}

const detail::FieldData kRationals{Field::Kind::Rationals, 0, 1, {}};

std::mutex g_registry_mutex;
std::map<std::pair<std::uint64_t, Raw>, std::unique_ptr<detail::FieldData>>& registry() {
  static std::map<std::pair<std::uint64_t, Raw>, std::unique_ptr<detail::FieldData>> r;
  return r;
}

const detail::FieldData* intern(std::uint64_t p, Raw modulus) {
  std::lock_guard lock(g_registry_mutex);
  auto key = std::make_pair(p, modulus);
  auto& reg = registry();
  auto it = reg.find(key);
  if (it != reg.end()) return it->second.get();
  auto d = std::make_unique<detail::FieldData>();
  d->p = p;
  if (modulus.empty()) {
    d->kind = Field::Kind::Prime;
    d->k = 1;
  } else {
    d->kind = Field::Kind::Extension;
    d->k = static_cast<unsigned>(modulus.size() - 1);
    d->modulus = std::move(modulus);
  }
  auto* raw = d.get();
  reg.emplace(std::move(key), std::move(d));
  return raw;
}

std::string residues_to_string(const FieldElement::Residues& r) {
  if (r.size() == 1) return std::to_string(r[0]);
  std::string out;
  for (std::size_t i = r.size(); i-- > 0;) {
    if (r[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(r[i]);
      continue;
    }
    if (r[i] != 1) out += std::to_string(r[i]) + "*";
    out += "w";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field::Field() : d_(&kRationals) {}

Field Field::rationals() { return Field(&kRationals); }

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (1ULL << 62)) raise(ErrorCode::UnsupportedField, "characteristic too large");
  return Field(intern(p, {}));
}

Field Field::extension(std::uint64_t p, std::span<const std::uint64_t> modulus) {
  if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  Raw m(modulus.begin(), modulus.end());
  for (auto& c : m) c %= p;
  trim(m);
  if (m.size() < 2) raise(ErrorCode::ReducibleModulus, "extension modulus must have degree >= 1");
  const std::uint64_t li = modp::inv(m.back(), p);
  for (auto& c : m) c = modp::mul(c, li, p);
  if (!raw_is_irreducible(m, p)) raise(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
  if (m.size() == 2) return prime(p);
  return Field(intern(p, std::move(m)));
}

Field::Kind Field::kind() const { return d_->kind; }
std::uint64_t Field::characteristic() const { return d_->p; }
unsigned Field::degree() const { return d_->k; }
const std::vector<std::uint64_t>& Field::modulus() const { return d_->modulus; }

std::uint64_t Field::order() const {
  if (!is_finite()) raise(ErrorCode::UnsupportedField, "Q has no finite order");
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < d_->k; ++i) {
    q *= d_->p;
    if (q >> 63) raise(ErrorCode::UnsupportedField, "field order exceeds 2^63");
  }
  return static_cast<std::uint64_t>(q);
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t n) const {
  if (!is_finite()) return FieldElement(d_, mpq_class(static_cast<long>(n)));
  const std::uint64_t p = d_->p;
  __int128 v = static_cast<__int128>(n) % static_cast<__int128>(p);
  if (v < 0) v += p;
  const auto r = static_cast<std::uint64_t>(v);
  FieldElement::Residues res(d_->k, 0);
  res[0] = r;
  return FieldElement(d_, std::move(res));
}

FieldElement Field::from_rational(const mpq_class& q) const {
  if (!is_finite()) {
    mpq_class c = q;
    c.canonicalize();
    return FieldElement(d_, std::move(c));
  }
  const mpz_class p(static_cast<unsigned long>(d_->p));
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) raise(ErrorCode::DivisionByZero, "denominator divisible by the characteristic");
  std::uint64_t n = num.get_ui(), d = den.get_ui();
  FieldElement::Residues res(d_->k, 0);
  res[0] = modp::mul(n, modp::inv(d, d_->p), d_->p);
  return FieldElement(d_, std::move(res));
}

FieldElement Field::from_residues(std::span<const std::uint64_t> coeffs) const {
  if (!is_finite()) raise(ErrorCode::UnsupportedField, "residue vector for Q");
  Raw a(coeffs.begin(), coeffs.end());
  for (auto& c : a) c %= d_->p;
  if (d_->kind == Kind::Extension) {
    a = raw_mod(std::move(a), d_->modulus, d_->p);
  } else {
    std::uint64_t s = 0;
    // constant field: w would be undefined, only the constant is meaningful
    if (a.size() > 1) {
      for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) raise(ErrorCode::InvalidArgument, "prime field element with nonzero w-coefficients");
    }
    if (!a.empty()) s = a[0];
    a = {s};
  }
  FieldElement::Residues res(d_->k, 0);
  for (std::size_t i = 0; i < a.size() && i < d_->k; ++i) res[i] = a[i];
  return FieldElement(d_, std::move(res));
}

FieldElement Field::generator() const {
  if (d_->kind != Kind::Extension) raise(ErrorCode::UnsupportedField, "field has no generator w");
  const std::uint64_t w[2] = {0, 1};
  return from_residues(w);
}

FieldElement Field::element_at(std::uint64_t index) const {
  if (!is_finite()) raise(ErrorCode::UnsupportedField, "Q is not enumerable");
  FieldElement::Residues res(d_->k, 0);
  for (unsigned i = 0; i < d_->k; ++i) {
    res[i] = index % d_->p;
    index /= d_->p;
  }
  return FieldElement(d_, std::move(res));
}

std::uint64_t Field::index_of(const FieldElement& a) const {
  if (!is_finite() || a.field() != *this) raise(ErrorCode::FieldMismatch, "index_of on foreign element");
  std::uint64_t idx = 0;
  const auto& r = a.residues();
  for (std::size_t i = r.size(); i-- > 0;) idx = idx * d_->p + r[i];
  return idx;
}

std::string Field::to_string() const {
  switch (d_->kind) {
    case Kind::Rationals: return "Q";
    case Kind::Prime: return "GF(" + std::to_string(d_->p) + ")";
    case Kind::Extension: {
      FieldElement::Residues m(d_->modulus.begin(), d_->modulus.end());
      std::string poly;
      for (std::size_t i = m.size(); i-- > 0;) {
        if (m[i] == 0) continue;
        if (!poly.empty()) poly += "+";
        if (i == 0) {
          poly += std::to_string(m[i]);
          continue;
        }
        if (m[i] != 1) poly += std::to_string(m[i]) + "*";
        poly += "w";
        if (i > 1) poly += "^" + std::to_string(i);
      }
      return "GF(" + std::to_string(d_->p) + "^" + std::to_string(d_->k) + "; " + poly + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------- FieldElement

void FieldElement::check_same(const FieldElement& b) const {
  if (f_ != b.f_ || f_ == nullptr) {
    raise(ErrorCode::FieldMismatch, "operands belong to different fields");
  }
}

bool FieldElement::is_zero() const {
  if (f_->kind == Field::Kind::Rationals) return sgn(rational()) == 0;
  for (auto c : residues())
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (f_->kind == Field::Kind::Rationals) return rational() == 1;
  const auto& r = residues();
  if (r[0] != 1) return false;
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

FieldElement FieldElement::operator-() const {
  if (f_->kind == Field::Kind::Rationals) return FieldElement(f_, mpq_class(-rational()));
  Residues r = residues();
  for (auto& c : r) c = modp::sub(0, c, f_->p);
  return FieldElement(f_, std::move(r));
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  check_same(b);
  if (f_->kind == Field::Kind::Rationals) {
    std::get<mpq_class>(v_) += b.rational();
    return *this;
  }
  auto& r = std::get<Residues>(v_);
  const auto& s = b.residues();
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = modp::add(r[i], s[i], f_->p);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  check_same(b);
  if (f_->kind == Field::Kind::Rationals) {
    std::get<mpq_class>(v_) -= b.rational();
    return *this;
  }
  auto& r = std::get<Residues>(v_);
  const auto& s = b.residues();
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = modp::sub(r[i], s[i], f_->p);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  check_same(b);
  switch (f_->kind) {
    case Field::Kind::Rationals:
      std::get<mpq_class>(v_) *= b.rational();
      break;
    case Field::Kind::Prime: {
      auto& r = std::get<Residues>(v_);
      r[0] = modp::mul(r[0], b.residues()[0], f_->p);
      break;
    }
    case Field::Kind::Extension: {
      const auto& a = residues();
      const auto& c = b.residues();
      Raw prod = raw_mulmod(Raw(a.begin(), a.end()), Raw(c.begin(), c.end()), f_->modulus, f_->p);
      Residues r(f_->k, 0);
      std::copy(prod.begin(), prod.end(), r.begin());
      v_ = std::move(r);
      break;
    }
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  check_same(b);
  return *this *= b.inv();
}

FieldElement FieldElement::inv() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "division by zero");
  switch (f_->kind) {
    case Field::Kind::Rationals: return FieldElement(f_, mpq_class(1 / rational()));
    case Field::Kind::Prime: {
      Residues r{modp::inv(residue(), f_->p)};
      return FieldElement(f_, std::move(r));
    }
    case Field::Kind::Extension: {
      const auto& a = residues();
      Raw inv = raw_inv(Raw(a.begin(), a.end()), f_->modulus, f_->p);
      Residues r(f_->k, 0);
      std::copy(inv.begin(), inv.end(), r.begin());
      return FieldElement(f_, std::move(r));
    }
  }
  return *this;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement r = Field(f_).one();
  FieldElement b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

FieldElement FieldElement::pow(const mpz_class& e) const {
  if (e < 0) return inv().pow(mpz_class(-e));
  FieldElement r = Field(f_).one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r *= r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r *= *this;
  }
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.f_ != b.f_) return false;
  if (a.f_ == nullptr) return true;
  if (a.f_->kind == Field::Kind::Rationals) return a.rational() == b.rational();
  return a.residues() == b.residues();
}

std::string FieldElement::to_string() const {
  if (f_ == nullptr) return "<unbound>";
  if (f_->kind == Field::Kind::Rationals) return rational().get_str();
  return residues_to_string(residues());
}

}  // namespace grmod
