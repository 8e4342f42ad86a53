#include "grmod/cartier.hpp"

#include <algorithm>

#include "grmod/error.hpp"

namespace grmod {

namespace {

std::vector<Polynomial> variables(const GradedRing& ring, const std::vector<std::size_t>& idx) {
  std::vector<Polynomial> out;
  for (std::size_t i : idx) {
    if (i >= ring.num_vars) raise(ErrorCode::InvalidArgument, "variable index " + std::to_string(i) + " out of range");
    out.push_back(Polynomial::variable(ring, i));
  }
  return out;
}

Polynomial power(const Polynomial& x, int e) {
  Polynomial r = Polynomial::constant(x.ring(), x.ring().field.one());
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

int degree_of(const ModuleElement& v, const GradedModule& P) {
  auto h = v.homogeneity(P.shifts());
  if (!h.homogeneous) raise(ErrorCode::InhomogeneousInput, "element " + v.to_string() + " is not homogeneous");
  return h.degree ? static_cast<int>(*h.degree) : -1;
}

}  // namespace

const char* to_string(DichotomyVerdict::Kind k) {
  return k == DichotomyVerdict::Kind::EventuallyEqual ? "eventually-equal" : "eventually-strictly-smaller";
}

DichotomyVerdict dichotomy_check(const GradedModule& M, const std::vector<std::size_t>& B, int probe) {
  const GradedModule Q = quotient_module(M, product_submodule(variables(M.ring(), B), M));
  const LengthReport len = classify_length(Q, probe);
  if (len.length == Length::Short) return {DichotomyVerdict::Kind::EventuallyEqual, len.from};
  return {DichotomyVerdict::Kind::EventuallyStrictlySmaller, len.from};
}

namespace {

void require_theorem_hypotheses(const GradedModule& M, int probe) {
  if (M.ring().num_vars == 0) raise(ErrorCode::HypothesisViolated, "S_1 = 0: there are no variables");
  if (classify_length(M, probe).length == Length::Short) raise(ErrorCode::HypothesisViolated, "M is short");
}

}  // namespace

MaximalSubset find_maximal_B(const GradedModule& M, int probe) {
  require_theorem_hypotheses(M, probe);
  const std::size_t n = M.ring().num_vars;
  MaximalSubset r;
  for (std::size_t i = 0; i < n; ++i) {
    r.order.push_back(i);
    std::vector<std::size_t> trial = r.B;
    trial.push_back(i);
    const GradedModule Q = quotient_module(M, product_submodule(variables(M.ring(), trial), M));
    if (classify_length(Q, probe).length == Length::Long) r.B = std::move(trial);
  }
  if (r.B.size() == n) raise(ErrorCode::InternalInconsistency, "M/S_1 M is long for a finitely generated M");
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(r.B.begin(), r.B.end(), i) == r.B.end()) {
      r.x = i;
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------- Colimit

Colimit::Colimit(GradedModule P, Polynomial x, int probe) : P_(std::move(P)), x_(std::move(x)) {
  if (!(x_.ring() == P_.ring())) raise(ErrorCode::RingMismatch, "x from a different ring");
  auto h = x_.homogeneity();
  if (x_.is_zero() || !h.homogeneous || *h.degree != 1) {
    raise(ErrorCode::InhomogeneousInput, "x = " + x_.to_string() + " is not a nonzero linear form");
  }
  const GradedModule Q = quotient_module(P_, product_submodule({x_}, P_));
  const LengthReport q = classify_length(Q, probe);
  if (q.length == Length::Long) {
    raise(ErrorCode::PreconditionUnmet, "x P_k != P_{k+1} for arbitrarily large k");
  }
  s_ = std::max(0, q.from - 1);
  for (int k = s_; k <= s_ + probe; ++k) {
    if (P_.product_span({x_}, k).dim() != P_.dim(k + 1)) {
      raise(ErrorCode::InternalInconsistency, "x P_" + std::to_string(k) + " != P_" + std::to_string(k + 1));
    }
  }

  const HilbertData& hp = P_.hilbert();
  if (hp.polynomial_degree() > 0) raise(ErrorCode::InternalInconsistency, "Hilbert polynomial of P is not constant");
  std::size_t c = 0;
  if (!hp.polynomial_is_zero()) {
    const mpq_class& v = hp.polynomial[0];
    if (v.get_den() != 1 || v < 0) raise(ErrorCode::InternalInconsistency, "non-integral Hilbert polynomial");
    c = v.get_num().get_ui();
  }
  // dims are non-increasing from s on, so the first hit is permanent
  D_ = s_;
  while (P_.dim(D_) != c) {
    if (D_ > hp.stabilization_degree + s_ + 1) raise(ErrorCode::InternalInconsistency, "dimensions never reach the limit");
    ++D_;
  }
  const Matrix X = x_power_matrix(D_, 1);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < X.rows(); ++i) rows.push_back(X.row(i));
  bijective_rank_ = rank(P_.ring().field, X.cols(), std::move(rows));
  if (bijective_rank_ != c) raise(ErrorCode::InternalInconsistency, "x is not bijective at the colimit degree");
}

Matrix Colimit::x_power_matrix(int k, int e) const {
  const DegreeTable& src = P_.table(k);
  const DegreeTable& dst = P_.table(k + e);
  const Polynomial xe = power(x_, e);
  const Field& F = P_.ring().field;
  Matrix m(F, dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    const Vector col = dst.coords(xe * ModuleElement::monomial(P_.ring(), P_.rank(), F.one(), src.basis()[j]));
    for (std::size_t i = 0; i < dst.dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

Vector Colimit::to_degree(const Vector& c, int k) const {
  if (k <= D_) return x_power_matrix(k, D_ - k).apply(c);
  auto u = solve(x_power_matrix(D_, k - D_), c);
  if (!u) raise(ErrorCode::InternalInconsistency, "x^" + std::to_string(k - D_) + " is not onto P_" + std::to_string(k));
  return *u;
}

Vector Colimit::transport(const ModuleElement& v) const {
  const int k = degree_of(v, P_);
  if (k < 0) return zero_vector(P_.ring().field, dim());
  return to_degree(P_.coords(v, k), k);
}

Vector Colimit::class_of(const ModuleElement& f) const {
  Vector acc = zero_vector(P_.ring().field, dim());
  for (const auto& [k, part] : f.homogeneous_components(P_.shifts())) {
    const Vector t = transport(part);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += t[i];
  }
  return acc;
}

Vector Colimit::class_by_scaling(const ModuleElement& f) const {
  const auto parts = f.homogeneous_components(P_.shifts());
  if (parts.empty()) return zero_vector(P_.ring().field, dim());
  const int E = std::max(D_, static_cast<int>(parts.rbegin()->first));
  ModuleElement acc = P_.zero_element();
  for (const auto& [k, part] : parts) acc += power(x_, E - static_cast<int>(k)) * part;
  return to_degree(P_.coords(P_.normal_form(acc), E), E);
}

ModuleElement Colimit::representative(const Vector& c) const {
  return P_.table(D_).element(c, P_.ring(), P_.rank());
}

// ---------------------------------------------------------------- witnesses

NonSaturationWitness nonsaturation_certificate(const Colimit& C, int threshold) {
  if (C.dim() == 0) raise(ErrorCode::PIsShort, "P is short; (1 - x)P is saturated");
  const GradedModule& P = C.module();
  const int j = std::max(threshold, C.degree());
  auto make = [&](ModuleElement v) -> std::optional<NonSaturationWitness> {
    Vector img = C.transport(v);
    if (is_zero(img)) return std::nullopt;
    return NonSaturationWitness{threshold, j, std::move(v), std::move(img), C.bijectivity_rank(), C.dim()};
  };
  for (std::size_t i = 0; i < P.rank(); ++i) {
    const int s = P.shifts()[i];
    if (s > j) continue;
    if (auto w = make(power(C.x(), j - s) * P.unit(i))) return *w;
  }
  Vector e = zero_vector(P.ring().field, C.dim());
  e[0] = P.ring().field.one();
  auto w = make(power(C.x(), j - C.degree()) * C.representative(e));
  if (!w) raise(ErrorCode::InternalInconsistency, "x-power of a colimit basis vector vanished");
  return *w;
}

bool in_one_minus_x_image(const GradedModule& P, const Polynomial& x, const ModuleElement& v, int j, int top) {
  if (top < j) raise(ErrorCode::InvalidArgument, "truncation below the witness degree");
  const Field& F = P.ring().field;
  std::vector<std::size_t> off(top + 3, 0);
  for (int k = 0; k <= top + 1; ++k) off[k + 1] = off[k] + P.dim(k);
  const std::size_t rows = off[top + 2], cols = off[top + 1];
  Matrix A(F, rows, cols);
  for (int k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < P.dim(k); ++i) A.at(off[k] + i, off[k] + i) = F.one();
  for (int k = 0; k <= top; ++k) {
    const DegreeTable& src = P.table(k);
    const DegreeTable& dst = P.table(k + 1);
    for (std::size_t c = 0; c < src.dim(); ++c) {
      const Vector col = dst.coords(x * ModuleElement::monomial(P.ring(), P.rank(), F.one(), src.basis()[c]));
      for (std::size_t r = 0; r < col.size(); ++r)
        if (!col[r].is_zero()) A.at(off[k + 1] + r, off[k] + c) = -col[r];
    }
  }
  Vector b = zero_vector(F, rows);
  const Vector vc = P.coords(v, j);
  for (std::size_t i = 0; i < vc.size(); ++i) b[off[j] + i] = vc[i];
  return solve(A, b).has_value();
}

// ---------------------------------------------------------------- theorem

CartierTateCertificate certify(const GradedModule& M, std::vector<std::size_t> B, std::size_t x, int probe) {
  const GradedRing& ring = M.ring();
  const std::size_t n = ring.num_vars;
  if (x >= n) raise(ErrorCode::InvalidArgument, "x is not a variable");
  std::sort(B.begin(), B.end());
  if (std::adjacent_find(B.begin(), B.end()) != B.end()) raise(ErrorCode::InvalidArgument, "B repeats a variable");
  if (std::find(B.begin(), B.end(), x) != B.end()) raise(ErrorCode::InvalidArgument, "x lies in B");

  const std::vector<Polynomial> Bp = variables(ring, B);
  const GradedSubmodule N = product_submodule(Bp, M);
  GradedModule P = quotient_module(M, N);
  if (classify_length(P, probe).length != Length::Long) raise(ErrorCode::PreconditionUnmet, "M/(B)M is short");
  std::vector<Polynomial> Bx = Bp;
  Bx.push_back(Polynomial::variable(ring, x));
  const GradedModule Q = quotient_module(M, product_submodule(Bx, M));
  if (classify_length(Q, probe).length != Length::Short) raise(ErrorCode::PreconditionUnmet, "M/(B + x)M is long");

  Colimit C(P, Polynomial::variable(ring, x), probe);
  NonSaturationWitness w = nonsaturation_certificate(C, C.degree());

  std::vector<ModuleElement> L = N.generators;
  for (std::size_t i = 0; i < M.rank(); ++i) L.push_back(M.unit(i) - C.x() * M.unit(i));

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return CartierTateCertificate{std::move(order), std::move(B), x, M, std::move(P), std::move(C), std::move(w),
                                std::move(L)};
}

CartierTateCertificate run_theorem(const GradedModule& M, int probe) {
  require_theorem_hypotheses(M, probe);
  check_simple_grading(M, probe);
  const MaximalSubset mb = find_maximal_B(M, probe);
  CartierTateCertificate cert = certify(M, mb.B, mb.x, probe);
  cert.variable_order = mb.order;
  return cert;
}

}  // namespace grmod
