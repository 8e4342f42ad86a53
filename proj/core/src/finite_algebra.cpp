#include "grmod/finite_algebra.hpp"

#include "grmod/error.hpp"
#include "grmod/graded_module.hpp"

namespace grmod {

FiniteAlgebra::FiniteAlgebra(Field f, std::vector<std::string> labels, std::vector<std::vector<Vector>> table, Vector unit,
                             std::vector<Vector> images)
    : field_(f), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)), images_(std::move(images)) {
  const std::size_t n = labels_.size();
  auto check = [&](const Vector& v, const char* what) {
    if (v.size() != n) raise(ErrorCode::InvalidArgument, std::string(what) + " has the wrong length");
    for (const auto& c : v)
      if (c.field() != field_) raise(ErrorCode::FieldMismatch, std::string(what) + " has entries outside " + field_.to_string());
  };
  if (table_.size() != n) raise(ErrorCode::InvalidArgument, "structure constants do not match the basis");
  for (const auto& row : table_) {
    if (row.size() != n) raise(ErrorCode::InvalidArgument, "structure constants do not match the basis");
    for (const auto& v : row) check(v, "product");
  }
  check(unit_, "unit");
  for (const auto& v : images_) check(v, "image");
}

FiniteAlgebra FiniteAlgebra::univariate(const UniPoly& f, const std::string& var) {
  auto deg = f.degree();
  if (!deg || *deg == 0) raise(ErrorCode::InvalidArgument, "modulus must have positive degree");
  const Field& F = f.field();
  const std::size_t d = *deg;
  const UniPoly g = f.monic();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
  auto coords = [&](std::size_t e) {
    const UniPoly r = UniPoly::monomial(F.one(), e) % g;
    Vector v = zero_vector(F, d);
    for (std::size_t i = 0; i < d; ++i) v[i] = r.coeff(i);
    return v;
  };
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i][j] = coords(i + j);
  std::vector<Vector> images;
  images.push_back(coords(1));
  return FiniteAlgebra(F, std::move(labels), std::move(table), coords(0), std::move(images));
}

FiniteAlgebra FiniteAlgebra::from_quotient(const GradedRing& ring, const std::vector<Polynomial>& J) {
  const GradedModule M = GradedModule::cyclic(ring, J);
  if (!M.hilbert().polynomial_is_zero()) raise(ErrorCode::InvalidArgument, "S/J is not finite-dimensional");
  const int top = classify_length(M).from;
  const Field& F = ring.field;
  std::vector<std::size_t> offset(top + 1, 0);
  for (int k = 0; k < top; ++k) offset[k + 1] = offset[k] + M.dim(k);
  const std::size_t n = offset[top];

  std::vector<std::pair<int, Monomial>> basis;
  std::vector<std::string> labels;
  for (int k = 0; k < top; ++k) {
    for (const auto& m : M.table(k).basis()) {
      basis.emplace_back(k, m.mono);
      labels.push_back(m.mono.to_string());
    }
  }
  auto embed = [&](const Vector& c, int k) {
    Vector v = zero_vector(F, n);
    for (std::size_t i = 0; i < c.size(); ++i) v[offset[k] + i] = c[i];
    return v;
  };
  std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int d = basis[i].first + basis[j].first;
      if (d >= top) {
        table[i][j] = zero_vector(F, n);
      } else {
        table[i][j] = embed(M.table(d).coords(ModuleMonomial{basis[i].second * basis[j].second, 0}), d);
      }
    }
  }
  Vector unit = zero_vector(F, n);
  if (n > 0) unit[0] = F.one();
  std::vector<Vector> images;
  for (std::size_t l = 0; l < ring.num_vars; ++l) {
    if (top > 1) images.push_back(embed(M.table(1).coords(ModuleMonomial{Monomial::variable(ring.num_vars, l), 0}), 1));
    else images.push_back(zero_vector(F, n));
  }
  return FiniteAlgebra(F, std::move(labels), std::move(table), std::move(unit), std::move(images));
}

Vector FiniteAlgebra::basis_vector(std::size_t i) const {
  Vector v = zero();
  v.at(i) = field_.one();
  return v;
}

Vector FiniteAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim() || b.size() != dim()) raise(ErrorCode::InvalidArgument, "vector outside the algebra");
  Vector out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      const FieldElement c = a[i] * b[j];
      const Vector& t = table_[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!t[k].is_zero()) out[k] += c * t[k];
    }
  }
  return out;
}

Vector FiniteAlgebra::power(const Vector& a, std::uint64_t e) const {
  Vector result = unit_, base = a;
  while (e) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

Matrix FiniteAlgebra::multiplication_matrix(const Vector& a) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const Vector col = multiply(a, basis_vector(j));
    for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

bool FiniteAlgebra::is_nilpotent(const Vector& a) const { return is_zero(power(a, dim())); }

std::optional<std::string> FiniteAlgebra::law_violation() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (table_[i][j] != table_[j][i]) return "e" + std::to_string(i) + "*e" + std::to_string(j) + " is not commutative";
  for (std::size_t i = 0; i < n; ++i) {
    if (multiply(unit_, basis_vector(i)) != basis_vector(i)) return "unit fails on e" + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (multiply(table_[i][j], basis_vector(k)) != multiply(basis_vector(i), table_[j][k])) {
          return "(e" + std::to_string(i) + "*e" + std::to_string(j) + ")*e" + std::to_string(k) + " is not associative";
        }
  }
  return std::nullopt;
}

FiniteAlgebra FiniteAlgebra::change_basis(const Matrix& T) const {
  const std::size_t n = dim();
  if (T.rows() != n || T.cols() != n) raise(ErrorCode::InvalidArgument, "change of basis has the wrong shape");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(T.column(j));
  if (rank(field_, n, cols) != n) raise(ErrorCode::InvalidArgument, "change of basis is singular");
  auto to_new = [&](const Vector& v) {
    auto x = solve(T, v);
    if (!x) raise(ErrorCode::InternalInconsistency, "singular change of basis");
    return *x;
  };
  std::vector<std::string> labels;
  std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("f" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = to_new(multiply(cols[i], cols[j]));
  }
  std::vector<Vector> images;
  for (const auto& v : images_) images.push_back(to_new(v));
  return FiniteAlgebra(field_, std::move(labels), std::move(table), to_new(unit_), std::move(images));
}

std::string FiniteAlgebra::format(const Vector& v) const {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + "]";
}

FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.field() != b.field()) raise(ErrorCode::FieldMismatch, "factors over different fields");
  const Field& F = a.field();
  const std::size_t n = a.dim(), m = b.dim();
  auto join = [&](const Vector& x, const Vector& y) {
    Vector v = x;
    v.insert(v.end(), y.begin(), y.end());
    return v;
  };
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("(" + l + ", 0)");
  for (const auto& l : b.labels()) labels.push_back("(0, " + l + ")");
  std::vector<std::vector<Vector>> table(n + m, std::vector<Vector>(n + m, zero_vector(F, n + m)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = join(a.table()[i][j], zero_vector(F, m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[n + i][n + j] = join(zero_vector(F, n), b.table()[i][j]);
  std::vector<Vector> images;
  if (a.images().size() == b.images().size())
    for (std::size_t l = 0; l < a.images().size(); ++l) images.push_back(join(a.images()[l], b.images()[l]));
  return FiniteAlgebra(F, std::move(labels), std::move(table), join(a.unit(), b.unit()), std::move(images));
}

}  // namespace grmod
