#include "grmod/graded_module.hpp"

#include <algorithm>

#include "grmod/error.hpp"

namespace grmod {

GradedModule::GradedModule(GradedRing ring, std::vector<int> shifts, std::vector<ModuleElement> relations)
    : cache_(std::make_shared<Cache>()) {
  for (int s : shifts)
    if (s < 0) raise(ErrorCode::InvalidArgument, "generator degrees must be non-negative");
  gb_ = std::make_shared<const GroebnerBasis>(buchberger(ring, std::move(shifts), std::move(relations)));
  hilbert_ = std::make_shared<const HilbertData>(hilbert_data(*gb_));
}

GradedModule GradedModule::cyclic(const GradedRing& ring, const std::vector<Polynomial>& ideal) {
  std::vector<ModuleElement> rel;
  for (const auto& f : ideal) {
    if (!(f.ring() == ring)) raise(ErrorCode::RingMismatch, "ideal generator from a different ring");
    rel.push_back(ModuleElement::from_polynomial(f));
  }
  return GradedModule(ring, {0}, std::move(rel));
}

GradedModule GradedModule::free(const GradedRing& ring, std::vector<int> shifts) {
  return GradedModule(ring, std::move(shifts), {});
}

int GradedModule::max_generator_degree() const {
  const auto& s = shifts();
  return s.empty() ? 0 : *std::max_element(s.begin(), s.end());
}

std::vector<ModuleMonomial> GradedModule::component(int k) const {
  if (k < 0) return {};
  return table(k).basis();
}

const DegreeTable& GradedModule::table(int k) const {
  if (k < 0) raise(ErrorCode::InvalidArgument, "negative degree");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& slot = cache_->tables[k];
  if (!slot) slot = std::make_shared<const DegreeTable>(*gb_, k);
  return *slot;
}

Subspace GradedModule::product_span(const std::vector<Polynomial>& B, int k) const {
  const DegreeTable& next = table(k + 1);
  const Field& F = ring().field;
  if (k < 0) return Subspace(F, next.dim());
  const DegreeTable& cur = table(k);
  std::vector<Vector> rows;
  for (const auto& b : B) {
    if (!(b.ring() == ring())) raise(ErrorCode::RingMismatch, "product generator from a different ring");
    auto h = b.homogeneity();
    if (!h.homogeneous || (h.degree && *h.degree != 1)) {
      raise(ErrorCode::InhomogeneousInput, "product generator " + b.to_string() + " is not of degree 1");
    }
    for (const auto& m : cur.basis()) {
      Vector v = zero_vector(F, next.dim());
      for (const auto& t : b.terms()) {
        const Vector& w = next.coords(ModuleMonomial{t.mono * m.mono, m.comp});
        for (std::size_t j = 0; j < v.size(); ++j)
          if (!w[j].is_zero()) v[j] += t.coef * w[j];
      }
      rows.push_back(std::move(v));
    }
  }
  return Subspace::span(F, next.dim(), std::move(rows));
}

Subspace GradedModule::s1_span(int k) const {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring().num_vars; ++i) vars.push_back(Polynomial::variable(ring(), i));
  return product_span(vars, k);
}

GradedSubmodule::GradedSubmodule(GradedModule p, std::vector<ModuleElement> gens)
    : parent(std::move(p)), generators(std::move(gens)) {
  for (const auto& g : generators) {
    if (!(g.ring() == parent.ring()) || g.rank() != parent.rank()) {
      raise(ErrorCode::RingMismatch, "submodule generator outside the parent's free module");
    }
    if (!g.homogeneity(parent.shifts()).homogeneous) {
      raise(ErrorCode::InhomogeneousInput, "submodule generator " + g.to_string() + " is not homogeneous");
    }
  }
}

SimpleGradingReport check_simple_grading(const GradedModule& M, int probe) {
  if (probe < 1) raise(ErrorCode::InvalidArgument, "probe window must be at least 1");
  const int g = M.max_generator_degree();
  const int top = std::max(g, M.hilbert().stabilization_degree) + probe;
  int last_fail = -1;
  for (int k = 0; k <= top; ++k) {
    if (M.s1_span(k).dim() == M.dim(k + 1)) continue;
    if (k >= g) {
      raise(ErrorCode::InternalInconsistency,
            "S_1 M_" + std::to_string(k) + " != M_" + std::to_string(k + 1) + " beyond the generator bound");
    }
    last_fail = k;
  }
  return {last_fail + 1, top};
}

std::vector<int> minimal_generator_degrees(const GradedModule& M) {
  std::vector<int> out;
  for (int k = 0; k <= M.max_generator_degree(); ++k) {
    const std::size_t below = k == 0 ? 0 : M.s1_span(k - 1).dim();
    for (std::size_t i = below; i < M.dim(k); ++i) out.push_back(k);
  }
  return out;
}

std::vector<GeneratorChoice> minimal_generators(const GradedModule& M) {
  std::vector<GeneratorChoice> out;
  const Field& F = M.ring().field;
  for (int k = 0; k <= M.max_generator_degree(); ++k) {
    Subspace W = k == 0 ? Subspace(F, M.dim(0)) : M.s1_span(k - 1);
    const auto& basis = M.table(k).basis();
    for (std::size_t j = 0; j < basis.size() && W.dim() < basis.size(); ++j) {
      Vector e = zero_vector(F, basis.size());
      e[j] = F.one();
      if (W.insert(std::move(e))) {
        out.push_back({k, ModuleElement::monomial(M.ring(), M.rank(), F.one(), basis[j])});
      }
    }
  }
  return out;
}

const char* to_string(Length l) { return l == Length::Short ? "short" : "long"; }

LengthReport classify_length(const GradedModule& M, int probe) {
  const HilbertData& h = M.hilbert();
  if (h.polynomial_is_zero()) {
    int d = h.stabilization_degree;
    while (d > 0 && h.function(d - 1) == 0) --d;
    return {Length::Short, d};
  }
  // a zero component at or past the simple degree would force all later ones to vanish
  int d = check_simple_grading(M, probe).first_simple_degree;
  while (d > 0 && h.function(d - 1) != 0) --d;
  return {Length::Long, d};
}

SaturationReport is_saturated(const GradedSubmodule& N) {
  const GradedModule Q = quotient_module(N.parent, N);
  const LengthReport len = classify_length(Q);
  SaturationReport r;
  r.saturated = len.length == Length::Short;
  if (r.saturated) r.from = len.from;
  r.quotient_hilbert = Q.hilbert();
  return r;
}

GradedSubmodule product_submodule(const std::vector<Polynomial>& B, const GradedModule& M) {
  std::vector<ModuleElement> gens;
  for (const auto& b : B) {
    if (!(b.ring() == M.ring())) raise(ErrorCode::RingMismatch, "product generator from a different ring");
    auto h = b.homogeneity();
    if (!h.homogeneous || (h.degree && *h.degree != 1)) {
      raise(ErrorCode::InhomogeneousInput, "product generator " + b.to_string() + " is not of degree 1");
    }
    if (b.is_zero()) continue;
    for (std::size_t i = 0; i < M.rank(); ++i) gens.push_back(b * M.unit(i));
  }
  return GradedSubmodule(M, std::move(gens));
}

GradedModule quotient_module(const GradedModule& M, const GradedSubmodule& N) {
  std::vector<ModuleElement> rel = M.relations().generators();
  rel.insert(rel.end(), N.generators.begin(), N.generators.end());
  return GradedModule(M.ring(), M.shifts(), std::move(rel));
}

std::vector<std::size_t> submodule_dims(const GradedSubmodule& N, int through) {
  const GradedModule Q = quotient_module(N.parent, N);
  std::vector<std::size_t> out;
  for (int k = 0; k <= through; ++k) out.push_back(N.parent.dim(k) - Q.dim(k));
  return out;
}

TechnicalLemmaReport technical_lemma_report(const GradedModule& M, int probe) {
  TechnicalLemmaReport r;
  r.simple = check_simple_grading(M, probe);
  r.generator_degrees = minimal_generator_degrees(M);
  std::vector<ModuleElement> chosen;
  for (auto& g : minimal_generators(M)) chosen.push_back(std::move(g.element));
  const GradedModule Q = quotient_module(M, GradedSubmodule(M, std::move(chosen)));
  r.regenerates = Q.hilbert().numerator.empty();
  return r;
}

}  // namespace grmod
