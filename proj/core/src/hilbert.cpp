#include "grmod/hilbert.hpp"

#include <algorithm>
#include <map>

#include "grmod/error.hpp"

namespace grmod {

namespace {

using Series = std::vector<std::int64_t>;

std::int64_t checked(std::int64_t a, std::int64_t b, bool mul) {
  std::int64_t r;
  bool overflow = mul ? __builtin_mul_overflow(a, b, &r) : __builtin_add_overflow(a, b, &r);
  if (overflow) raise(ErrorCode::InternalInconsistency, "Hilbert numerator coefficient overflow");
  return r;
}

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series add(Series a, const Series& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = checked(a[i], b[i], false);
  trim(a);
  return a;
}

Series shift(const Series& a, std::uint64_t e) {
  if (a.empty()) return a;
  Series r(e, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

Series mul(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) return {};
  Series r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked(r[i + j], checked(a[i], b[j], true), false);
  trim(r);
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

class NumeratorSolver {
 public:
  explicit NumeratorSolver(std::size_t n) : n_(n) {}

  Series solve(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {};

    std::vector<Monomial::Exponents> key;
    for (const auto& g : gens) key.push_back(g.exponents());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // pivot: the variable shared by the most generators
    std::size_t best_var = n_, best_count = 1;
    for (std::size_t j = 0; j < n_; ++j) {
      std::size_t c = 0;
      for (const auto& g : gens) c += g[j] > 0;
      if (c > best_count) {
        best_count = c;
        best_var = j;
      }
    }
    Series result;
    if (best_var == n_) {
      // pairwise coprime: a regular sequence
      result = {1};
      for (const auto& g : gens) {
        Series f(g.degree() + 1, 0);
        f[0] = 1;
        f[g.degree()] -= 1;
        result = mul(result, f);
      }
    } else {
      std::uint32_t e = UINT32_MAX;
      for (const auto& g : gens)
        if (g[best_var] > 0) e = std::min(e, g[best_var]);
      const Monomial pivot = Monomial::variable(n_, best_var, e);

      std::vector<Monomial> sum = gens;
      sum.push_back(pivot);
      std::vector<Monomial> colon;
      for (const auto& g : gens) colon.push_back(g / gcd(g, pivot));

      result = add(solve(std::move(sum)), shift(solve(std::move(colon)), e));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::size_t n_;
  std::map<std::vector<Monomial::Exponents>, Series> memo_;
};

mpz_class binomial(long top, unsigned long bottom) {
  if (top < 0 || static_cast<unsigned long>(top) < bottom) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), bottom);
  return r;
}

std::vector<mpq_class> poly_mul_linear(const std::vector<mpq_class>& a, const mpq_class& c) {
  // a(k) * (k + c)
  std::vector<mpq_class> r(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i + 1] += a[i];
    r[i] += a[i] * c;
  }
  return r;
}

std::string rational_coefficient_term(const mpq_class& c, std::size_t power, bool first, const char* var) {
  std::string out;
  mpq_class a = abs(c);
  if (first) out += sgn(c) < 0 ? "-" : "";
  else out += sgn(c) < 0 ? " - " : " + ";
  if (power == 0) return out + a.get_str();
  if (a != 1) out += a.get_str() + "*";
  out += var;
  if (power > 1) out += "^" + std::to_string(power);
  return out;
}

}  // namespace

std::vector<std::int64_t> monomial_ideal_numerator(std::size_t num_vars, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.num_vars() != num_vars) raise(ErrorCode::InvalidArgument, "monomial has the wrong number of variables");
  return NumeratorSolver(num_vars).solve(std::move(gens));
}

HilbertData hilbert_from_numerator(std::size_t num_vars, std::vector<std::int64_t> numerator) {
  trim(numerator);
  HilbertData h;
  h.num_vars = num_vars;
  h.numerator = std::move(numerator);

  // C(k - j + n - 1, n - 1) = prod_{i=1}^{n-1} (k - j + i) / (n-1)!
  const std::size_t n = num_vars;
  mpz_class fact = 1;
  for (std::size_t i = 2; i < n; ++i) fact *= static_cast<unsigned long>(i);
  std::vector<mpq_class> poly;
  for (std::size_t j = 0; j < h.numerator.size(); ++j) {
    if (h.numerator[j] == 0) continue;
    std::vector<mpq_class> term{mpq_class(1)};
    for (std::size_t i = 1; i < n; ++i) term = poly_mul_linear(term, mpq_class(static_cast<long>(i) - static_cast<long>(j)));
    const mpq_class scale = mpq_class(static_cast<long>(h.numerator[j])) / mpq_class(fact);
    if (poly.size() < term.size()) poly.resize(term.size(), 0);
    for (std::size_t i = 0; i < term.size(); ++i) poly[i] += term[i] * scale;
  }
  for (auto& c : poly) c.canonicalize();
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  h.polynomial = std::move(poly);

  // the closed form is exact once k - j >= -(n - 1) for every j
  const long top = static_cast<long>(h.numerator.size()) - 1;
  int d = static_cast<int>(std::max<long>(0, top - static_cast<long>(n) + 1));
  while (d > 0 && mpq_class(static_cast<unsigned long>(h.function(d - 1))) == h.polynomial_at(d - 1)) --d;
  h.stabilization_degree = d;
  return h;
}

HilbertData hilbert_data(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring().num_vars;
  std::vector<std::vector<Monomial>> leading(gb.rank());
  for (const auto& g : gb.generators()) leading[g.leading().comp].push_back(g.leading().mono);
  NumeratorSolver solver(n);
  Series total;
  for (std::size_t i = 0; i < gb.rank(); ++i) {
    const int s = gb.shifts()[i];
    if (s < 0) raise(ErrorCode::InvalidArgument, "negative generator degree");
    total = add(total, shift(solver.solve(leading[i]), static_cast<std::uint64_t>(s)));
  }
  return hilbert_from_numerator(n, std::move(total));
}

std::uint64_t HilbertData::function(int k) const {
  mpz_class acc = 0;
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    if (numerator[j] == 0) continue;
    const long m = static_cast<long>(k) - static_cast<long>(j);
    if (m < 0) continue;
    acc += mpz_class(static_cast<long>(numerator[j])) * binomial(m + static_cast<long>(num_vars) - 1, num_vars - 1);
  }
  if (acc < 0) raise(ErrorCode::InternalInconsistency, "negative Hilbert function value");
  return acc.get_ui();
}

std::vector<std::uint64_t> HilbertData::values(int through) const {
  std::vector<std::uint64_t> v;
  for (int k = 0; k <= through; ++k) v.push_back(function(k));
  return v;
}

mpq_class HilbertData::polynomial_at(int k) const {
  mpq_class acc = 0;
  for (std::size_t i = polynomial.size(); i-- > 0;) acc = acc * k + polynomial[i];
  return acc;
}

std::string HilbertData::polynomial_string() const {
  if (polynomial.empty()) return "0";
  std::string out;
  for (std::size_t i = polynomial.size(); i-- > 0;) {
    if (polynomial[i] == 0) continue;
    out += rational_coefficient_term(polynomial[i], i, out.empty(), "k");
  }
  return out;
}

std::string HilbertData::numerator_string() const {
  if (numerator.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    if (numerator[i] == 0) continue;
    out += rational_coefficient_term(mpq_class(static_cast<long>(numerator[i])), i, out.empty(), "t");
  }
  return out;
}

}  // namespace grmod
