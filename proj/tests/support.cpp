#include "support.hpp"

#include <algorithm>

namespace grmod::testing {

std::vector<Polynomial> polys(const GradedRing& ring, std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(poly(ring, t));
  return out;
}

FieldElement random_element(const Field& F, Rng& rng) {
  if (F.is_finite()) return F.element_at(rng() % F.order());
  const std::int64_t num = static_cast<std::int64_t>(rng() % 19) - 9;
  const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 5);
  return F.from_rational(mpq_class(num, den));
}

Polynomial random_homogeneous(const GradedRing& ring, int deg, Rng& rng, int terms) {
  const auto monos = monomials_of_degree(ring, static_cast<std::uint64_t>(deg));
  std::vector<Term> ts;
  const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(terms));
  for (int i = 0; i < count; ++i) ts.push_back(Term{random_element(ring.field, rng), monos[rng() % monos.size()]});
  return Polynomial(ring, std::move(ts));
}

Polynomial random_polynomial(const GradedRing& ring, int max_deg, Rng& rng, int terms) {
  Polynomial f(ring);
  const int count = static_cast<int>(rng() % static_cast<std::uint64_t>(terms + 1));
  for (int i = 0; i < count; ++i) {
    f += random_homogeneous(ring, static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1)), rng, 1);
  }
  return f;
}

std::vector<Polynomial> random_ideal(const GradedRing& ring, int count, int max_deg, Rng& rng) {
  std::vector<Polynomial> gens;
  while (static_cast<int>(gens.size()) < count) {
    Polynomial f = random_homogeneous(ring, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg)), rng);
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return gens;
}

Presentation random_presentation(const GradedRing& ring, Rng& rng, std::size_t max_rank, int max_shift,
                                 std::size_t max_rels, int max_rel_deg) {
  Presentation p{ring, {}, {}};
  const std::size_t rank = 1 + rng() % max_rank;
  for (std::size_t i = 0; i < rank; ++i) p.shifts.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(max_shift + 1)));
  const int lo = *std::min_element(p.shifts.begin(), p.shifts.end());
  const std::size_t rels = rng() % (max_rels + 1);
  for (std::size_t r = 0; r < rels; ++r) {
    for (int attempt = 0; attempt < 10; ++attempt) {
      const int d = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_rel_deg - lo + 1)));
      if (d > max_rel_deg) continue;
      std::vector<Polynomial> comps;
      for (int s : p.shifts) {
        if (d < s || rng() % 3 == 0) {
          comps.emplace_back(ring);
        } else {
          comps.push_back(random_homogeneous(ring, d - s, rng, 3));
        }
      }
      ModuleElement e = ModuleElement::from_components(ring, comps);
      if (!e.is_zero()) {
        p.relations.push_back(std::move(e));
        break;
      }
    }
  }
  return p;
}

namespace {

std::string key(const ModuleMonomial& m) { return std::to_string(m.comp) + ":" + m.mono.to_string(); }

}  // namespace

RawModule::RawModule(GradedRing ring, std::vector<int> shifts, std::vector<ModuleElement> relations)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    const Homogeneity h = r.homogeneity(shifts_);
    rel_degrees_.push_back(h.degree ? static_cast<int>(*h.degree) : -1);
  }
}

RawModule RawModule::cyclic(const GradedRing& ring, const std::vector<Polynomial>& ideal) {
  std::vector<ModuleElement> rels;
  for (const auto& f : ideal) rels.push_back(ModuleElement::from_polynomial(f));
  return RawModule(ring, {0}, std::move(rels));
}

Vector RawModule::coords(const Degree& d, const ModuleElement& v) const {
  Vector out = zero_vector(ring_.field, d.monomials.size());
  for (const auto& t : v.terms()) out[d.index.at(key({t.mono, t.comp}))] += t.coef;
  return out;
}

RawModule::Degree& RawModule::degree(int k) {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  Degree d;
  for (std::size_t i = 0; i < shifts_.size(); ++i) {
    if (k < shifts_[i]) continue;
    for (const auto& m : monomials_of_degree(ring_, static_cast<std::uint64_t>(k - shifts_[i]))) {
      d.index.emplace(key({m, i}), d.monomials.size());
      d.monomials.push_back({m, i});
    }
  }
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    if (rel_degrees_[r] < 0 || rel_degrees_[r] > k) continue;
    for (const auto& m : monomials_of_degree(ring_, static_cast<std::uint64_t>(k - rel_degrees_[r]))) {
      d.relation_rows.push_back(coords(d, relations_[r].mul_term(ring_.field.one(), m)));
    }
  }
  d.relation_rank = rank(ring_.field, d.monomials.size(), d.relation_rows);
  return cache_.emplace(k, std::move(d)).first->second;
}

std::size_t RawModule::dim(int k) {
  if (k < 0) return 0;
  const Degree& d = degree(k);
  return d.monomials.size() - d.relation_rank;
}

std::size_t RawModule::product_dim(const std::vector<Polynomial>& B, int k) {
  if (k <= 0) return 0;
  const Degree& lower = degree(k - 1);
  const Degree& d = degree(k);
  std::vector<Vector> rows = d.relation_rows;
  for (const auto& b : B) {
    for (const auto& m : lower.monomials) {
      ModuleElement e = ModuleElement::monomial(ring_, shifts_.size(), ring_.field.one(), m);
      rows.push_back(coords(d, b * e));
    }
  }
  return rank(ring_.field, d.monomials.size(), std::move(rows)) - d.relation_rank;
}

std::size_t RawModule::s1_dim(int k) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring_.num_vars; ++i) vars.push_back(Polynomial::variable(ring_, i));
  return product_dim(vars, k + 1);
}

std::uint64_t brute_standard_count(std::size_t n, const std::vector<Monomial>& gens, int k) {
  GradedRing ring(Field::prime(2), n);
  std::uint64_t count = 0;
  for (const auto& m : monomials_of_degree(ring, static_cast<std::uint64_t>(k))) {
    bool divisible = false;
    for (const auto& g : gens) divisible = divisible || g.divides(m);
    if (!divisible) ++count;
  }
  return count;
}

}  // namespace grmod::testing
