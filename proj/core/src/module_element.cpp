#include "grmod/module_element.hpp"

#include <algorithm>

#include "grmod/error.hpp"

namespace grmod {

int compare(const GradedRing& ring, const ModuleMonomial& a, const ModuleMonomial& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return ring.compare(a.mono, b.mono);
}

namespace {

int compare_terms(const GradedRing& ring, const ModuleTerm& a, const ModuleTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return ring.compare(a.mono, b.mono);
}

std::vector<ModuleTerm> merge(const std::vector<ModuleTerm>& a, const std::vector<ModuleTerm>& b, bool subtract,
                              const GradedRing& ring) {
  std::vector<ModuleTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : compare_terms(ring, a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (subtract) out.back().coef = -out.back().coef;
      ++j;
    } else {
      FieldElement s = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!s.is_zero()) out.push_back(ModuleTerm{std::move(s), a[i].mono, a[i].comp});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ModuleElement::ModuleElement(GradedRing ring, std::size_t rank, std::vector<ModuleTerm> terms)
    : ring_(std::move(ring)), rank_(rank) {
  for (const auto& t : terms) {
    if (t.comp >= rank_) raise(ErrorCode::InvalidArgument, "module term outside the free module");
    if (t.coef.field() != ring_.field) raise(ErrorCode::FieldMismatch, "coefficient outside the ring's field");
    if (t.mono.num_vars() != ring_.num_vars) raise(ErrorCode::RingMismatch, "monomial has the wrong number of variables");
  }
  std::sort(terms.begin(), terms.end(),
            [this](const ModuleTerm& a, const ModuleTerm& b) { return compare_terms(ring_, a, b) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono && terms_.back().comp == t.comp) {
      terms_.back().coef += t.coef;
    } else {
      if (!terms_.empty() && terms_.back().coef.is_zero()) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coef.is_zero()) terms_.pop_back();
}

ModuleElement ModuleElement::unit(const GradedRing& ring, std::size_t rank, std::size_t i) {
  return monomial(ring, rank, ring.field.one(), {Monomial(ring.num_vars), i});
}

ModuleElement ModuleElement::monomial(const GradedRing& ring, std::size_t rank, const FieldElement& c,
                                      const ModuleMonomial& m) {
  return ModuleElement(ring, rank, {ModuleTerm{c, m.mono, m.comp}});
}

ModuleElement ModuleElement::from_components(const GradedRing& ring, const std::vector<Polynomial>& comps) {
  std::vector<ModuleTerm> terms;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!(comps[i].ring() == ring)) raise(ErrorCode::RingMismatch, "component from a different ring");
    for (const auto& t : comps[i].terms()) terms.push_back(ModuleTerm{t.coef, t.mono, i});
  }
  return ModuleElement(ring, comps.size(), std::move(terms));
}

Polynomial ModuleElement::component(std::size_t i) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.comp == i) ts.push_back(Term{t.coef, t.mono});
  return Polynomial(ring_, std::move(ts));
}

void ModuleElement::check(const ModuleElement& b) const {
  if (!(ring_ == b.ring_) || rank_ != b.rank_) raise(ErrorCode::RingMismatch, "module elements from different free modules");
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& b) {
  check(b);
  terms_ = merge(terms_, b.terms_, false, ring_);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& b) {
  check(b);
  terms_ = merge(terms_, b.terms_, true, ring_);
  return *this;
}

ModuleElement operator*(const ModuleElement& a, const FieldElement& s) {
  if (s.is_zero()) return ModuleElement(a.ring_, a.rank_);
  ModuleElement r = a;
  for (auto& t : r.terms_) t.coef *= s;
  return r;
}

ModuleElement operator*(const Polynomial& f, const ModuleElement& a) {
  if (!(f.ring() == a.ring_)) raise(ErrorCode::RingMismatch, "polynomial from a different ring");
  std::vector<ModuleTerm> terms;
  terms.reserve(f.size() * a.terms_.size());
  for (const auto& s : f.terms())
    for (const auto& t : a.terms_) terms.push_back(ModuleTerm{s.coef * t.coef, s.mono * t.mono, t.comp});
  return ModuleElement(a.ring_, a.rank_, std::move(terms));
}

ModuleElement ModuleElement::mul_term(const FieldElement& c, const Monomial& m) const {
  if (c.is_zero()) return ModuleElement(ring_, rank_);
  ModuleElement r = *this;
  for (auto& t : r.terms_) {
    t.coef *= c;
    t.mono = t.mono * m;
  }
  return r;
}

ModuleElement ModuleElement::tail() const {
  ModuleElement r(ring_, rank_);
  if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

ModuleElement ModuleElement::monic() const {
  if (terms_.empty() || terms_.front().coef.is_one()) return *this;
  return *this * terms_.front().coef.inv();
}

Homogeneity ModuleElement::homogeneity(std::span<const int> shifts) const {
  if (shifts.size() != rank_) raise(ErrorCode::InvalidArgument, "shift list does not match the rank");
  if (terms_.empty()) return {true, std::nullopt};
  const std::uint64_t d = shifted_degree({terms_.front().mono, terms_.front().comp}, shifts);
  for (const auto& t : terms_)
    if (shifted_degree({t.mono, t.comp}, shifts) != d) return {false, std::nullopt};
  return {true, d};
}

std::map<std::uint64_t, ModuleElement> ModuleElement::homogeneous_components(std::span<const int> shifts) const {
  std::map<std::uint64_t, std::vector<ModuleTerm>> parts;
  for (const auto& t : terms_) parts[shifted_degree({t.mono, t.comp}, shifts)].push_back(t);
  std::map<std::uint64_t, ModuleElement> out;
  for (auto& [d, ts] : parts) out.emplace(d, ModuleElement(ring_, rank_, std::move(ts)));
  return out;
}

std::string ModuleElement::to_string() const {
  if (rank_ == 1) return component(0).to_string();
  std::string out = "(";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) out += ", ";
    out += component(i).to_string();
  }
  return out + ")";
}

}  // namespace grmod
