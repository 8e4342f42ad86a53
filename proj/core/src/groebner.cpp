#include "grmod/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "grmod/error.hpp"

namespace grmod {

namespace {

std::optional<std::size_t> find_divisor_in(const std::vector<ModuleElement>& gens, const ModuleMonomial& m) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& lt = gens[i].leading();
    if (lt.comp == m.comp && lt.mono.divides(m.mono)) return i;
  }
  return std::nullopt;
}

ModuleElement reduce_by(const ModuleElement& v, const std::vector<ModuleElement>& gens) {
  ModuleElement work = v;
  std::vector<ModuleTerm> rest;
  while (!work.is_zero()) {
    const ModuleTerm& lt = work.leading();
    if (auto idx = find_divisor_in(gens, {lt.mono, lt.comp})) {
      const ModuleElement& g = gens[*idx];
      const FieldElement c = lt.coef / g.leading().coef;
      work -= g.mul_term(c, lt.mono / g.leading().mono);
    } else {
      rest.push_back(lt);
      work = work.tail();
    }
  }
  return ModuleElement(v.ring(), v.rank(), std::move(rest));
}

ModuleElement spoly(const ModuleElement& f, const ModuleElement& g) {
  const Monomial l = lcm(f.leading().mono, g.leading().mono);
  ModuleElement a = f.mul_term(f.leading().coef.inv(), l / f.leading().mono);
  ModuleElement b = g.mul_term(g.leading().coef.inv(), l / g.leading().mono);
  return a - b;
}

std::uint64_t element_degree(const ModuleElement& v, std::span<const int> shifts) {
  return shifted_degree(v.leading_monomial(), shifts);
}

}  // namespace

// ---------------------------------------------------------------- GroebnerBasis

GroebnerBasis::GroebnerBasis(GradedRing ring, std::vector<int> shifts, std::vector<ModuleElement> generators,
                             bool reduced)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), gens_(std::move(generators)), reduced_(reduced) {}

std::optional<std::size_t> GroebnerBasis::find_divisor(const ModuleMonomial& m) const {
  return find_divisor_in(gens_, m);
}

bool GroebnerBasis::spairs_reduce_to_zero() const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (gens_[i].leading().comp != gens_[j].leading().comp) continue;
      if (!reduce_by(spoly(gens_[i], gens_[j]), gens_).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- Buchberger

GroebnerBasis buchberger(const GradedRing& ring, std::vector<int> shifts, std::vector<ModuleElement> generators) {
  const std::size_t rank = shifts.size();
  std::vector<ModuleElement> inputs;
  for (auto& g : generators) {
    if (g.rank() != rank || !(g.ring() == ring)) raise(ErrorCode::RingMismatch, "generator outside the free module");
    if (!g.homogeneity(shifts).homogeneous) {
      raise(ErrorCode::InhomogeneousInput, "generator " + g.to_string() + " is not homogeneous");
    }
    if (!g.is_zero()) inputs.push_back(std::move(g));
  }
  std::stable_sort(inputs.begin(), inputs.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    return element_degree(a, shifts) < element_degree(b, shifts);
  });

  struct Pair {
    std::size_t i, j;
    std::uint64_t degree;
    ModuleMonomial lcm;
  };
  std::vector<ModuleElement> G;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> done;

  auto add = [&](ModuleElement h) {
    h = h.monic();
    const std::size_t idx = G.size();
    for (std::size_t i = 0; i < idx; ++i) {
      if (G[i].leading().comp != h.leading().comp) continue;
      const Monomial l = lcm(G[i].leading().mono, h.leading().mono);
      if (rank == 1 && G[i].leading().mono.coprime(h.leading().mono)) {
        done.emplace(i, idx);
        continue;
      }
      ModuleMonomial lm{l, h.leading().comp};
      pending.push_back(Pair{i, idx, shifted_degree(lm, shifts), lm});
    }
    G.push_back(std::move(h));
  };

  auto is_done = [&](std::size_t a, std::size_t b) { return done.count({std::min(a, b), std::max(a, b)}) > 0; };

  std::size_t next_input = 0;
  while (next_input < inputs.size() || !pending.empty()) {
    std::uint64_t d = UINT64_MAX;
    if (next_input < inputs.size()) d = element_degree(inputs[next_input], shifts);
    for (const auto& p : pending) d = std::min(d, p.degree);

    while (next_input < inputs.size() && element_degree(inputs[next_input], shifts) == d) {
      ModuleElement h = reduce_by(inputs[next_input++], G);
      if (!h.is_zero()) add(std::move(h));
    }
    for (;;) {
      auto best = pending.end();
      for (auto it = pending.begin(); it != pending.end(); ++it) {
        if (it->degree != d) continue;
        if (best == pending.end()) {
          best = it;
          continue;
        }
        int c = compare(ring, it->lcm, best->lcm);
        if (c < 0 || (c == 0 && std::make_pair(it->i, it->j) < std::make_pair(best->i, best->j))) best = it;
      }
      if (best == pending.end()) break;
      Pair pr = *best;
      pending.erase(best);
      done.emplace(pr.i, pr.j);
      bool chain = false;
      for (std::size_t k = 0; k < G.size() && !chain; ++k) {
        if (k == pr.i || k == pr.j) continue;
        const auto& lk = G[k].leading();
        if (lk.comp == pr.lcm.comp && lk.mono.divides(pr.lcm.mono) && is_done(pr.i, k) && is_done(pr.j, k)) chain = true;
      }
      if (chain) continue;
      ModuleElement h = reduce_by(spoly(G[pr.i], G[pr.j]), G);
      if (!h.is_zero()) add(std::move(h));
    }
  }

  // minimalize, then interreduce
  std::vector<ModuleElement> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = G[j].leading();
      const auto& b = G[i].leading();
      if (a.comp == b.comp && a.mono.divides(b.mono) && (!(a.mono == b.mono) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<ModuleElement> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModuleElement> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce_by(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    auto da = element_degree(a, shifts), db = element_degree(b, shifts);
    if (da != db) return da < db;
    return compare(ring, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return GroebnerBasis(ring, std::move(shifts), std::move(reduced), true);
}

GroebnerBasis buchberger(const GradedRing& ring, const std::vector<Polynomial>& generators) {
  std::vector<ModuleElement> gens;
  for (const auto& f : generators) {
    if (!(f.ring() == ring)) raise(ErrorCode::RingMismatch, "generator from a different ring");
    gens.push_back(ModuleElement::from_polynomial(f));
  }
  return buchberger(ring, {0}, std::move(gens));
}

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb) {
  if (!(v.ring() == gb.ring()) || v.rank() != gb.rank()) raise(ErrorCode::RingMismatch, "element outside the free module");
  return reduce_by(v, gb.generators());
}

std::vector<ModuleMonomial> component_basis(const GroebnerBasis& gb, int k) {
  std::vector<ModuleMonomial> out;
  for (std::size_t i = 0; i < gb.rank(); ++i) {
    const int md = k - gb.shifts()[i];
    if (md < 0) continue;
    for (auto& m : monomials_of_degree(gb.ring(), static_cast<std::uint64_t>(md))) {
      ModuleMonomial mm{std::move(m), i};
      if (gb.is_standard(mm)) out.push_back(std::move(mm));
    }
  }
  return out;
}

// ---------------------------------------------------------------- DegreeTable

DegreeTable::DegreeTable(const GroebnerBasis& gb, int k) : field_(gb.ring().field), k_(k) {
  std::vector<ModuleMonomial> all;
  for (std::size_t i = 0; i < gb.rank(); ++i) {
    const int md = k - gb.shifts()[i];
    if (md < 0) continue;
    for (auto& m : monomials_of_degree(gb.ring(), static_cast<std::uint64_t>(md))) all.push_back({std::move(m), i});
  }
  std::vector<std::optional<std::size_t>> divisor(all.size());
  for (std::size_t a = 0; a < all.size(); ++a) {
    divisor[a] = gb.find_divisor(all[a]);
    if (!divisor[a]) basis_.push_back(all[a]);
  }
  const std::size_t n = basis_.size();
  std::size_t next_std = n;
  // ascending sweep: everything a tail term refers to is already tabulated
  for (std::size_t a = all.size(); a-- > 0;) {
    const ModuleMonomial& m = all[a];
    Vector v = zero_vector(field_, n);
    if (!divisor[a]) {
      v[--next_std] = field_.one();
    } else {
      const ModuleElement& g = gb.generators()[*divisor[a]];
      const Monomial u = m.mono / g.leading().mono;
      const FieldElement lc_inv = g.leading().coef.inv();
      for (std::size_t t = 1; t < g.terms().size(); ++t) {
        const auto& term = g.terms()[t];
        const Vector& w = table_.at(Key{term.comp, u * term.mono});
        const FieldElement c = -(term.coef * lc_inv);
        for (std::size_t j = 0; j < n; ++j)
          if (!w[j].is_zero()) v[j] += c * w[j];
      }
    }
    table_.emplace(Key{m.comp, m.mono}, std::move(v));
  }
}

const Vector& DegreeTable::coords(const ModuleMonomial& m) const {
  auto it = table_.find(Key{m.comp, m.mono});
  if (it == table_.end()) raise(ErrorCode::InvalidArgument, "monomial " + m.mono.to_string() + " is not of degree " + std::to_string(k_));
  return it->second;
}

Vector DegreeTable::coords(const ModuleElement& v) const {
  Vector out = zero_vector(field_, basis_.size());
  for (const auto& t : v.terms()) {
    const Vector& w = coords(ModuleMonomial{t.mono, t.comp});
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!w[j].is_zero()) out[j] += t.coef * w[j];
  }
  return out;
}

ModuleElement DegreeTable::element(const Vector& c, const GradedRing& ring, std::size_t rank) const {
  std::vector<ModuleTerm> terms;
  for (std::size_t j = 0; j < basis_.size(); ++j)
    if (!c.at(j).is_zero()) terms.push_back(ModuleTerm{c[j], basis_[j].mono, basis_[j].comp});
  return ModuleElement(ring, rank, std::move(terms));
}

Subspace module_product_basis(std::span<const Polynomial> gens, const GroebnerBasis& gb, int k) {
  DegreeTable next(gb, k + 1);
  std::vector<Vector> rows;
  const auto basis = component_basis(gb, k);
  for (const auto& b : gens) {
    auto h = b.homogeneity();
    if (!h.homogeneous || (h.degree && *h.degree != 1)) {
      raise(ErrorCode::InhomogeneousInput, "product generator " + b.to_string() + " is not of degree 1");
    }
    for (const auto& m : basis) {
      ModuleElement v = b * ModuleElement::monomial(gb.ring(), gb.rank(), gb.ring().field.one(), m);
      rows.push_back(next.coords(v));
    }
  }
  return Subspace::span(gb.ring().field, next.dim(), std::move(rows));
}

}  // namespace grmod
