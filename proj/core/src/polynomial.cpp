#include "grmod/polynomial.hpp"

#include <algorithm>

#include "grmod/error.hpp"

namespace grmod {

namespace {

// Merge two descending term lists, combining equal monomials.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                        const GradedRing& ring) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{-b[j].coef, b[j].mono} : b[j]);
      ++j;
    } else {
      FieldElement s = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!s.is_zero()) out.push_back(Term{std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(GradedRing ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  for (const auto& t : terms) {
    if (t.coef.field() != ring_.field) raise(ErrorCode::FieldMismatch, "coefficient outside the ring's field");
    if (t.mono.num_vars() != ring_.num_vars) raise(ErrorCode::RingMismatch, "monomial has the wrong number of variables");
  }
  std::sort(terms.begin(), terms.end(),
            [this](const Term& a, const Term& b) { return ring_.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef += t.coef;
    } else {
      if (!terms_.empty() && terms_.back().coef.is_zero()) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coef.is_zero()) terms_.pop_back();
}

Polynomial Polynomial::constant(const GradedRing& ring, const FieldElement& c) {
  return monomial(ring, c, Monomial(ring.num_vars));
}

Polynomial Polynomial::variable(const GradedRing& ring, std::size_t i) {
  return monomial(ring, ring.field.one(), Monomial::variable(ring.num_vars, i));
}

Polynomial Polynomial::monomial(const GradedRing& ring, const FieldElement& c, const Monomial& m) {
  return Polynomial(ring, {Term{c, m}});
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::check_ring(const Polynomial& b) const {
  if (!(ring_ == b.ring_)) raise(ErrorCode::RingMismatch, "polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  check_ring(b);
  terms_ = merge(terms_, b.terms_, false, ring_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  check_ring(b);
  terms_ = merge(terms_, b.terms_, true, ring_);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back(Term{s.coef * t.coef, s.mono * t.mono});
  return Polynomial(a.ring_, std::move(prod));
}

Polynomial operator*(const Polynomial& a, const FieldElement& s) {
  if (s.is_zero()) return Polynomial(a.ring_);
  Polynomial r = a;
  for (auto& t : r.terms_) t.coef *= s;
  return r;
}

Polynomial Polynomial::mul_term(const FieldElement& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.coef *= c;
    t.mono = t.mono * m;
  }
  return r;
}

Homogeneity Polynomial::homogeneity() const {
  if (terms_.empty()) return {true, std::nullopt};
  const std::uint64_t d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return {false, std::nullopt};
  return {true, d};
}

std::map<std::uint64_t, Polynomial> Polynomial::homogeneous_components() const {
  std::map<std::uint64_t, std::vector<Term>> parts;
  for (const auto& t : terms_) parts[t.mono.degree()].push_back(t);
  std::map<std::uint64_t, Polynomial> out;
  for (auto& [d, ts] : parts) out.emplace(d, Polynomial(ring_, std::move(ts)));
  return out;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point,
                                  const std::function<FieldElement(const FieldElement&)>& embed) const {
  if (point.size() != ring_.num_vars) raise(ErrorCode::InvalidArgument, "point has the wrong number of coordinates");
  if (point.empty()) raise(ErrorCode::InvalidArgument, "empty point");
  const Field target = point[0].field();
  FieldElement acc = target.zero();
  for (const auto& t : terms_) {
    FieldElement v = embed ? embed(t.coef) : t.coef;
    for (std::size_t i = 0; i < ring_.num_vars; ++i) {
      if (t.mono[i]) v *= point[i].pow(static_cast<std::uint64_t>(t.mono[i]));
    }
    acc += v;
  }
  return acc;
}

std::string coefficient_text(const FieldElement& c, bool& negative) {
  std::string s = c.to_string();
  negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);
  if (s.find('+') != std::string::npos) s = "(" + s + ")";
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    bool neg = false;
    std::string coef = coefficient_text(t.coef, neg);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (t.mono.is_one()) {
      out += coef;
    } else {
      if (coef != "1") out += coef + "*";
      out += t.mono.to_string();
    }
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(const GradedRing& ring, std::uint64_t k) {
  std::vector<Monomial> out;
  const std::size_t n = ring.num_vars;
  Monomial::Exponents e(n, 0);
  // enumerate compositions of k into n parts
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i + 1 == n) {
      e[i] = static_cast<std::uint32_t>(left);
      out.emplace_back(e);
      return;
    }
    for (std::uint64_t a = 0; a <= left; ++a) {
      e[i] = static_cast<std::uint32_t>(a);
      self(self, i + 1, left - a);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

}  // namespace grmod
