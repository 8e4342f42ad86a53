#include "grmod/unipoly.hpp"

#include <algorithm>
#include <map>

#include "grmod/error.hpp"

namespace grmod {

UniPoly::UniPoly(Field f, std::vector<FieldElement> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (c.field() != field_) raise(ErrorCode::FieldMismatch, "coefficient from a different field");
  }
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const FieldElement& c, std::size_t d) {
  std::vector<FieldElement> v(d + 1, c.field().zero());
  v[d] = c;
  return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::from_ints(const Field& f, const std::vector<std::int64_t>& coeffs) {
  std::vector<FieldElement> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(f.from_int(c));
  return UniPoly(f, std::move(v));
}

std::optional<std::size_t> UniPoly::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

FieldElement UniPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

FieldElement UniPoly::leading() const { return c_.empty() ? field_.zero() : c_.back(); }

UniPoly UniPoly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return *this * c_.back().inv();
}

UniPoly UniPoly::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i)));
  return UniPoly(field_, std::move(d));
}

FieldElement UniPoly::operator()(const FieldElement& x) const {
  FieldElement acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& b) {
  if (field_ != b.field_) raise(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), field_.zero());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& b) {
  if (field_ != b.field_) raise(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), field_.zero());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.field_ != b.field_) raise(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(a.field_, std::move(c));
}

UniPoly operator*(UniPoly a, const FieldElement& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string coef = c_[i].to_string();
    bool neg = !coef.empty() && coef[0] == '-';
    if (neg) coef.erase(0, 1);
    if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (i == 0) {
      out += coef;
      continue;
    }
    if (coef != "1") out += coef + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  if (f != b.field()) raise(ErrorCode::FieldMismatch, "polynomials over different fields");
  std::vector<FieldElement> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (rem.size() <= db) return {UniPoly(f), a};
  std::vector<FieldElement> quo(rem.size() - db, f.zero());
  const FieldElement lead_inv = bc.back().inv();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    FieldElement c = rem[i] * lead_inv;
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * bc[j];
  }
  rem.resize(db);
  return {UniPoly(f, std::move(quo)), UniPoly(f, std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly powmod(const UniPoly& base, const mpz_class& e, const UniPoly& mod) {
  UniPoly r = UniPoly::constant(base.field().one()) % mod;
  UniPoly b = base % mod;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % mod;
  }
  return r;
}

namespace {

void require_finite(const Field& f) {
  if (!f.is_finite()) raise(ErrorCode::UnsupportedField, "operation requires a finite field");
}

std::vector<unsigned> prime_divisors(std::size_t n) {
  std::vector<unsigned> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<unsigned>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

mpz_class field_order(const Field& f) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), f.characteristic(), f.degree());
  return q;
}

// f(X) = sum a_i X^(ip)  ->  sum a_i^(1/p) X^i
UniPoly pth_root(const UniPoly& f) {
  const Field& F = f.field();
  const std::uint64_t p = F.characteristic();
  mpz_class e;  // a^(1/p) = a^(p^(k-1))
  mpz_ui_pow_ui(e.get_mpz_t(), p, F.degree() - 1);
  const auto& c = f.coefficients();
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < c.size(); i += p) out.push_back(c[i].pow(e));
  return UniPoly(F, std::move(out));
}

void squarefree(const UniPoly& f, unsigned mult, Factorization& out) {
  const std::uint64_t p = f.field().characteristic();
  if (f.degree().value_or(0) == 0) return;
  UniPoly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree(pth_root(f), mult * static_cast<unsigned>(p), out);
    return;
  }
  UniPoly c = gcd(f, fp);
  UniPoly w = f / c;
  unsigned i = 1;
  while (w.degree().value_or(0) > 0) {
    UniPoly y = gcd(w, c);
    UniPoly z = w / y;
    if (z.degree().value_or(0) > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree().value_or(0) > 0) squarefree(pth_root(c.monic()), mult * static_cast<unsigned>(p), out);
}

std::vector<std::pair<UniPoly, std::size_t>> distinct_degree(UniPoly f) {
  std::vector<std::pair<UniPoly, std::size_t>> out;
  const Field& F = f.field();
  const mpz_class q = field_order(F);
  const UniPoly X = UniPoly::x(F);
  UniPoly h = X % f;
  for (std::size_t i = 1; f.degree().value_or(0) >= 2 * i; ++i) {
    h = powmod(h, q, f);
    UniPoly g = gcd(f, h - X);
    if (g.degree().value_or(0) > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree().value_or(0) > 0) out.emplace_back(f.monic(), *f.degree());
  return out;
}

UniPoly random_poly(const Field& F, std::size_t below_degree, Rng& rng) {
  const std::uint64_t q = F.order();
  std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < below_degree; ++i) c.push_back(F.element_at(dist(rng)));
  return UniPoly(F, std::move(c));
}

void equal_degree(const UniPoly& g, std::size_t d, Rng& rng, std::vector<UniPoly>& out) {
  const std::size_t n = *g.degree();
  if (n == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& F = g.field();
  const std::uint64_t p = F.characteristic();
  mpz_class qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), p, static_cast<unsigned long>(F.degree() * d));
  const mpz_class half = (qd - 1) / 2;
  for (;;) {
    UniPoly a = random_poly(F, n, rng);
    if (a.degree().value_or(0) == 0) continue;
    UniPoly b(F);
    if (p == 2) {
      // absolute trace to GF(2): a + a^2 + a^4 + ... + a^(2^(kd-1))
      UniPoly t = a % g;
      b = t;
      for (std::size_t i = 1; i < F.degree() * d; ++i) {
        t = (t * t) % g;
        b += t;
      }
    } else {
      b = powmod(a, half, g) - UniPoly::constant(F.one());
    }
    UniPoly u = gcd(g, b);
    const std::size_t du = u.degree().value_or(0);
    if (du > 0 && du < n) {
      equal_degree(u, d, rng, out);
      equal_degree(g / u, d, rng, out);
      return;
    }
  }
}

bool factor_less(const UniPoly& a, const UniPoly& b) {
  const std::size_t da = *a.degree(), db = *b.degree();
  if (da != db) return da < db;
  const Field& F = a.field();
  for (std::size_t i = da + 1; i-- > 0;) {
    auto ia = F.index_of(a.coeff(i)), ib = F.index_of(b.coeff(i));
    if (ia != ib) return ia < ib;
  }
  return false;
}

}  // namespace

bool is_irreducible(const UniPoly& f) {
  require_finite(f.field());
  if (!f.degree() || *f.degree() == 0) return false;
  const std::size_t n = *f.degree();
  if (n == 1) return true;
  const UniPoly g = f.monic();
  const mpz_class q = field_order(f.field());
  const UniPoly X = UniPoly::x(f.field());
  std::vector<UniPoly> frob(n + 1, UniPoly(f.field()));
  frob[0] = X % g;
  for (std::size_t i = 1; i <= n; ++i) frob[i] = powmod(frob[i - 1], q, g);
  if (frob[n] != X % g) return false;
  for (unsigned r : prime_divisors(n)) {
    if (gcd(g, frob[n / r] - X).degree().value_or(0) != 0) return false;
  }
  return true;
}

Factorization factor(const UniPoly& f, Rng& rng) {
  const Field& F = f.field();
  require_finite(F);
  if (f.is_zero()) raise(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  UniPoly g = f.monic();
  Factorization raw;

  if (F.order() < 64) {
    for (std::uint64_t i = 0; i < F.order() && g.degree().value_or(0) > 0; ++i) {
      const FieldElement r = F.element_at(i);
      const UniPoly lin(F, {-r, F.one()});
      unsigned m = 0;
      while (g.degree().value_or(0) > 0 && g(r).is_zero()) {
        g = g / lin;
        ++m;
      }
      if (m) raw.emplace_back(lin, m);
    }
  }

  Factorization sqf;
  squarefree(g, 1, sqf);
  for (auto& [h, m] : sqf) {
    for (auto& [part, d] : distinct_degree(h)) {
      std::vector<UniPoly> irr;
      equal_degree(part, d, rng, irr);
      for (auto& u : irr) raw.emplace_back(std::move(u), m);
    }
  }

  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
  Factorization out;
  for (auto& [u, m] : raw) {
    if (!out.empty() && out.back().first == u) out.back().second += m;
    else out.emplace_back(std::move(u), m);
  }
  return out;
}

std::vector<FieldElement> roots(const UniPoly& f, Rng& rng) {
  std::vector<FieldElement> out;
  for (const auto& [u, m] : factor(f, rng)) {
    if (*u.degree() == 1) out.push_back(-u.coeff(0));
  }
  const Field& F = f.field();
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return F.index_of(a) < F.index_of(b); });
  return out;
}

UniPoly first_irreducible(const Field& F, std::size_t degree) {
  require_finite(F);
  if (degree == 0) raise(ErrorCode::InvalidArgument, "irreducible of degree 0");
  const std::uint64_t q = F.order();
  for (std::uint64_t idx = 0;; ++idx) {
    std::vector<FieldElement> c(degree + 1, F.zero());
    c[degree] = F.one();
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < degree; ++i) {
      c[i] = F.element_at(rest % q);
      rest /= q;
    }
    if (rest != 0) raise(ErrorCode::InternalInconsistency, "no irreducible polynomial found");
    UniPoly u(F, std::move(c));
    if (is_irreducible(u)) return u;
  }
}

FieldElement embed_into(const FieldElement& a, const Field& to, const std::optional<FieldElement>& gen_image) {
  const Field from = a.field();
  if (from == to) return a;
  if (!from.is_finite() || !to.is_finite() || from.characteristic() != to.characteristic()) {
    raise(ErrorCode::FieldEmbeddingFailure, "no embedding from " + from.to_string() + " into " + to.to_string());
  }
  if (from.kind() == Field::Kind::Prime) return to.from_int(static_cast<std::int64_t>(a.residue()));
  if (!gen_image || gen_image->field() != to) {
    raise(ErrorCode::FieldEmbeddingFailure, "no generator image for " + from.to_string() + " in " + to.to_string());
  }
  FieldElement acc = to.zero();
  const auto& r = a.residues();
  for (std::size_t i = r.size(); i-- > 0;) acc = acc * *gen_image + to.from_int(static_cast<std::int64_t>(r[i]));
  return acc;
}

FieldElement Extension::embed(const FieldElement& a) const {
  if (a.field() != base) raise(ErrorCode::FieldMismatch, "element not in the extension's base field");
  return embed_into(a, field, base_generator);
}

UniPoly Extension::embed(const UniPoly& f) const {
  std::vector<FieldElement> c;
  for (const auto& x : f.coefficients()) c.push_back(embed(x));
  return UniPoly(field, std::move(c));
}

Extension extend_field(const Field& base, const UniPoly& modulus) {
  require_finite(base);
  if (modulus.field() != base) raise(ErrorCode::FieldMismatch, "modulus not over the base field");
  if (!is_irreducible(modulus)) raise(ErrorCode::ReducibleModulus, modulus.to_string() + " is reducible over " + base.to_string());
  const UniPoly g = modulus.monic();
  const std::size_t d = *g.degree();
  const std::uint64_t p = base.characteristic();
  std::optional<FieldElement> base_gen;
  if (base.kind() == Field::Kind::Extension) base_gen = base.generator();

  if (d == 1) return Extension{base, base, -g.coeff(0), base_gen};

  if (base.kind() == Field::Kind::Prime) {
    std::vector<std::uint64_t> m;
    for (const auto& c : g.coefficients()) m.push_back(c.residue());
    Field K = Field::extension(p, m);
    return Extension{base, K, K.generator(), std::nullopt};
  }

  const Field prime = Field::prime(p);
  const UniPoly h = first_irreducible(prime, base.degree() * d);
  std::vector<std::uint64_t> hm;
  for (const auto& c : h.coefficients()) hm.push_back(c.residue());
  const Field K = Field::extension(p, hm);

  // image of w: a root of base's modulus in K
  std::vector<FieldElement> bm;
  for (auto c : base.modulus()) bm.push_back(K.from_int(static_cast<std::int64_t>(c)));
  Rng rng(0x5eedULL);
  auto w_roots = roots(UniPoly(K, std::move(bm)), rng);
  if (w_roots.empty()) raise(ErrorCode::InternalInconsistency, "base modulus does not split in the extension");
  Extension ext{base, K, K.zero(), w_roots.front()};
  auto t_roots = roots(ext.embed(g), rng);
  if (t_roots.empty()) raise(ErrorCode::InternalInconsistency, "modulus does not split in the extension");
  ext.root = t_roots.front();
  return ext;
}

}  // namespace grmod
