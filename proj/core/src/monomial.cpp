#include "grmod/monomial.hpp"

#include <algorithm>
#include <limits>

#include "grmod/error.hpp"

namespace grmod {

namespace {
std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r;
  if (__builtin_add_overflow(a, b, &r)) raise(ErrorCode::InvalidArgument, "exponent overflow");
  return r;
}
}  // namespace

Monomial::Monomial(std::size_t num_vars) : e_(num_vars, 0) {}

Monomial::Monomial(Exponents e) : e_(std::move(e)) {
  for (auto x : e_) deg_ += x;
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t i, std::uint32_t power) {
  Monomial m(num_vars);
  m.e_.at(i) = power;
  m.deg_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& b) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = checked_add(r.e_[i], b.e_[i]);
  if (__builtin_add_overflow(deg_, b.deg_, &r.deg_)) raise(ErrorCode::InvalidArgument, "degree overflow");
  return r;
}

Monomial Monomial::operator/(const Monomial& b) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= b.e_[i];
  r.deg_ -= b.deg_;
  return r;
}

bool Monomial::divides(const Monomial& m) const {
  if (deg_ > m.deg_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& m) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] && m.e_[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial::Exponents e(a.e_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial::Exponents e(a.e_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.e_[i], b.e_[i]);
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "X" + std::to_string(i);
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const std::size_t n = a.num_vars();
  if (order != MonomialOrder::Lex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  if (order == MonomialOrder::DegRevLex) {
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::string_view to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::DegRevLex: return "degrevlex";
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::DegLex: return "deglex";
  }
  return "?";
}

MonomialOrder parse_monomial_order(std::string_view s) {
  if (s == "degrevlex" || s == "grevlex") return MonomialOrder::DegRevLex;
  if (s == "lex") return MonomialOrder::Lex;
  if (s == "deglex" || s == "degree-then-lex") return MonomialOrder::DegLex;
  raise(ErrorCode::ParseError, "unknown monomial order '" + std::string(s) + "'");
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : m.exponents()) h = (h ^ x) * 0x100000001b3ULL;
  return h;
}

}  // namespace grmod
