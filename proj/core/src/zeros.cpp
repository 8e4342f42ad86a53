#include "grmod/zeros.hpp"

#include "grmod/error.hpp"

namespace grmod {

// ---------------------------------------------------------------- points

ProjectivePoint ProjectivePoint::normalized(Field base, std::vector<FieldElement> coords,
                                            std::optional<FieldElement> base_generator) {
  if (coords.empty()) raise(ErrorCode::InvalidArgument, "empty coordinate tuple");
  const Field field = coords.front().field();
  std::optional<FieldElement> lead;
  for (const auto& c : coords) {
    if (c.field() != field) raise(ErrorCode::FieldMismatch, "coordinates from different fields");
    if (!lead && !c.is_zero()) lead = c.inv();
  }
  if (!lead) raise(ErrorCode::InvalidArgument, "all coordinates are zero");
  for (auto& c : coords) c *= *lead;
  return ProjectivePoint{base, field, std::move(coords), std::move(base_generator)};
}

FieldElement ProjectivePoint::embed(const FieldElement& a) const {
  if (a.field() != base && a.field() != field) {
    raise(ErrorCode::FieldEmbeddingFailure, a.field().to_string() + " is not the point's base field " + base.to_string());
  }
  return embed_into(a, field, base_generator);
}

std::vector<std::string> ProjectivePoint::coordinate_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coords) out.push_back(c.to_string());
  return out;
}

std::string ProjectivePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += " : ";
    out += coords[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------- algebra

FiniteAlgebra algebra_from_certificate(const CartierTateCertificate& cert) {
  if (!cert.M.is_cyclic()) raise(ErrorCode::NotCyclic, "the certificate's module is not of the form S/J");
  const Colimit& C = cert.colimit;
  const GradedRing& ring = cert.M.ring();
  const Field& F = ring.field;
  const auto& basis = C.basis();
  const std::size_t n = basis.size();
  auto mono = [&](const Monomial& m) { return ModuleElement::monomial(ring, 1, F.one(), ModuleMonomial{m, 0}); };

  std::vector<std::string> labels;
  for (const auto& b : basis) labels.push_back(b.mono.to_string());
  std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) table[i][j] = table[j][i] = C.transport(mono(basis[i].mono * basis[j].mono));
  const Vector unit = C.transport(mono(Monomial(ring.num_vars)));
  std::vector<Vector> images;
  for (std::size_t l = 0; l < ring.num_vars; ++l) images.push_back(C.transport(mono(Monomial::variable(ring.num_vars, l))));

  FiniteAlgebra alg(F, std::move(labels), std::move(table), unit, std::move(images));
  if (auto bad = alg.law_violation()) raise(ErrorCode::InternalInconsistency, "certificate algebra: " + *bad);
  if (alg.images()[cert.x] != alg.unit()) raise(ErrorCode::InternalInconsistency, "the image of x is not the unit");
  return alg;
}

// ---------------------------------------------------------------- eigenvectors

namespace {

Matrix embed_matrix(const Matrix& m, const Extension& ext) {
  Matrix out(ext.field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = ext.embed(m.at(i, j));
  return out;
}

Vector embed_vector(const Vector& v, const Extension& ext) {
  Vector out;
  for (const auto& c : v) out.push_back(ext.embed(c));
  return out;
}

/// Minimal polynomial of a square matrix via the first linear dependence
/// among I, R, R^2, ...
UniPoly minimal_polynomial(const Matrix& R) {
  const Field& F = R.field();
  const std::size_t r = R.rows();
  std::vector<Vector> powers;
  Matrix P(F, r, r);
  for (std::size_t i = 0; i < r; ++i) P.at(i, i) = F.one();
  auto flat = [&](const Matrix& m) {
    Vector v;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) v.push_back(m.at(i, j));
    return v;
  };
  for (std::size_t d = 0; d <= r; ++d) {
    const Vector cur = flat(P);
    if (!powers.empty()) {
      Matrix A(F, r * r, powers.size());
      for (std::size_t c = 0; c < powers.size(); ++c)
        for (std::size_t i = 0; i < r * r; ++i) A.at(i, c) = powers[c][i];
      if (auto a = solve(A, cur)) {
        std::vector<FieldElement> coeffs;
        for (const auto& x : *a) coeffs.push_back(-x);
        coeffs.push_back(F.one());
        return UniPoly(F, std::move(coeffs));
      }
    } else if (is_zero(cur)) {
      return UniPoly::constant(F.one());
    }
    powers.push_back(cur);
    P = P * R;
  }
  raise(ErrorCode::InternalInconsistency, "no minimal polynomial within the Cayley-Hamilton bound");
}

}  // namespace

ProjectivePoint maximal_ideal_point(const FiniteAlgebra& alg, std::uint64_t seed) {
  const Field base = alg.field();
  if (!base.is_finite()) raise(ErrorCode::UnsupportedField, "point extraction needs a finite field");
  if (alg.images().empty()) raise(ErrorCode::InvalidArgument, "the algebra has no distinguished images");
  bool any = false;
  for (const auto& a : alg.images()) any = any || !alg.is_nilpotent(a);
  if (!any) raise(ErrorCode::AllNilpotent, "every distinguished image is nilpotent");

  Rng rng(seed);
  Field K = base;
  std::optional<FieldElement> gen;
  if (base.kind() == Field::Kind::Extension) gen = base.generator();
  std::vector<Matrix> ops;
  for (const auto& a : alg.images()) ops.push_back(alg.multiplication_matrix(a));
  Subspace W = Subspace::whole(K, alg.dim());
  std::vector<FieldElement> eigen;

  for (std::size_t l = 0; l < ops.size(); ++l) {
    const auto& wb = W.basis();
    const auto& piv = W.pivots();
    const std::size_t r = wb.size();
    // restriction to W in the echelon basis: coordinates sit in the pivot columns
    Matrix R(K, r, r);
    for (std::size_t c = 0; c < r; ++c) {
      const Vector img = ops[l].apply(wb[c]);
      for (std::size_t i = 0; i < r; ++i) R.at(i, c) = img[piv[i]];
    }
    const Factorization fac = factor(minimal_polynomial(R), rng);
    const UniPoly& g = fac.front().first;
    FieldElement lambda = -g.coeff(0);
    if (*g.degree() > 1) {
      const Extension ext = extend_field(K, g);
      for (auto& m : ops) m = embed_matrix(m, ext);
      for (auto& e : eigen) e = ext.embed(e);
      if (gen) gen = ext.embed(*gen);
      std::vector<Vector> nb;
      for (const auto& v : wb) nb.push_back(embed_vector(v, ext));
      R = embed_matrix(R, ext);
      W = Subspace::span(ext.field, alg.dim(), std::move(nb));
      K = ext.field;
      lambda = ext.root;
    }
    for (std::size_t i = 0; i < r; ++i) R.at(i, i) -= lambda;
    std::vector<Vector> refined;
    for (const auto& y : kernel(R)) {
      Vector v = zero_vector(K, alg.dim());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
          if (!y[i].is_zero()) v[j] += y[i] * W.basis()[i][j];
      refined.push_back(std::move(v));
    }
    W = Subspace::span(K, alg.dim(), std::move(refined));
    if (W.dim() == 0) raise(ErrorCode::InternalInconsistency, "empty eigenspace");
    eigen.push_back(lambda);
  }
  bool nonzero = false;
  for (const auto& e : eigen) nonzero = nonzero || !e.is_zero();
  if (!nonzero) raise(ErrorCode::AllNilpotent, "all eigenvalues vanish");
  return ProjectivePoint::normalized(base, std::move(eigen), gen);
}

bool verify_zero(const std::vector<Polynomial>& J, const ProjectivePoint& pt) {
  auto embed = [&](const FieldElement& a) { return pt.embed(a); };
  for (const auto& f : J) {
    if (f.ring().num_vars != pt.coords.size()) raise(ErrorCode::InvalidArgument, "point has the wrong number of coordinates");
    if (!f.evaluate(pt.coords, embed).is_zero()) return false;
  }
  return true;
}

std::optional<ProjectivePoint> brute_force_zero(const GradedRing& ring, const std::vector<Polynomial>& J, int max_ext) {
  const Field base = ring.field;
  if (!base.is_finite()) raise(ErrorCode::UnsupportedField, "enumeration needs a finite field");
  const std::size_t n = ring.num_vars;
  if (n == 0) return std::nullopt;
  for (int e = 1; e <= max_ext; ++e) {
    Field K = base;
    std::optional<FieldElement> gen;
    if (base.kind() == Field::Kind::Extension) gen = base.generator();
    if (e > 1) {
      const Extension ext = extend_field(base, first_irreducible(base, static_cast<std::size_t>(e)));
      K = ext.field;
      gen = ext.base_generator;
    }
    const std::uint64_t q = K.order();
    std::vector<FieldElement> elems;
    for (std::uint64_t i = 0; i < q; ++i) elems.push_back(K.element_at(i));
    // lexicographic order: the leading 1 moves from the last coordinate to the first
    for (std::size_t lead = n; lead-- > 0;) {
      const std::size_t free = n - lead - 1;
      std::vector<std::uint64_t> idx(free, 0);
      for (;;) {
        std::vector<FieldElement> c(n, K.zero());
        c[lead] = K.one();
        for (std::size_t i = 0; i < free; ++i) c[lead + 1 + i] = elems[idx[i]];
        ProjectivePoint pt{base, K, std::move(c), gen};
        if (verify_zero(J, pt)) return pt;
        std::size_t pos = free;
        while (pos > 0 && ++idx[pos - 1] == q) idx[--pos] = 0;
        if (pos == 0) break;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- driver

const char* to_string(NullstellensatzResult::Status s) {
  switch (s) {
    case NullstellensatzResult::Status::Saturated: return "saturated";
    case NullstellensatzResult::Status::Zero: return "zero";
    case NullstellensatzResult::Status::Algebra: return "algebra";
  }
  return "?";
}

NullstellensatzResult nullstellensatz(const GradedRing& ring, const std::vector<Polynomial>& J, std::uint64_t seed, int probe) {
  for (const auto& f : J)
    if (!f.is_homogeneous()) raise(ErrorCode::InhomogeneousInput, "generator " + f.to_string() + " is not homogeneous");
  const GradedModule M = GradedModule::cyclic(ring, J);
  NullstellensatzResult r;
  const LengthReport len = classify_length(M, probe);
  if (len.length == Length::Short) {
    r.status = NullstellensatzResult::Status::Saturated;
    r.saturated_from = len.from;
    return r;
  }
  r.certificate = run_theorem(M, probe);
  r.algebra = algebra_from_certificate(*r.certificate);
  if (!ring.field.is_finite()) {
    r.status = NullstellensatzResult::Status::Algebra;
    r.non_nilpotent = r.algebra->images()[r.certificate->x];
    return r;
  }
  r.point = maximal_ideal_point(*r.algebra, seed);
  if (!verify_zero(J, *r.point)) raise(ErrorCode::InternalInconsistency, "extracted point " + r.point->to_string() + " is not a zero");
  r.status = NullstellensatzResult::Status::Zero;
  return r;
}

}  // namespace grmod
