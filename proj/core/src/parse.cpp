#include "grmod/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "grmod/error.hpp"

namespace grmod {

namespace {

[[noreturn]] void fail_at(std::size_t column, const std::string& msg) {
  raise(ErrorCode::ParseError, "column " + std::to_string(column + 1) + ": " + msg);
}

std::pair<std::string_view, std::size_t> trim(std::string_view s, std::size_t offset = 0) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return {s.substr(b, e - b), offset + b};
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Recursive descent over one polynomial expression:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power ('*' power)*
//   power  := atom ['^' integer]
//   atom   := integer ['/' integer] | identifier | '(' expr ')'
class PolyParser {
 public:
  PolyParser(const GradedRing& ring, std::string_view text, const std::vector<std::string>& names, std::size_t base)
      : ring_(ring), s_(text), names_(names), base_(base) {}

  Polynomial parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(base_ + pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip();
    const std::string digits = number_text();
    if (digits.size() > 9) fail("exponent too large");
    const long e = std::stol(digits);
    Polynomial r = Polynomial::constant(ring_, ring_.field.one());
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  std::string number_text() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q{mpz_class(number_text())};
      const std::size_t save = pos_;
      if (accept('/')) {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          const std::size_t at = pos_;
          mpz_class den{number_text()};
          if (den == 0) fail_at(base_ + at, "zero denominator");
          q /= mpq_class(den);
        } else {
          pos_ = save;
          fail("'/' is only allowed between integers");
        }
      }
      q.canonicalize();
      try {
        return Polynomial::constant(ring_, ring_.field.from_rational(q));
      } catch (const Error&) {
        fail("denominator vanishes in " + ring_.field.to_string());
      }
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident(s_[pos_])) ++pos_;
      const std::string id(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == id) return Polynomial::variable(ring_, i);
      if (id == "w" && ring_.field.kind() == Field::Kind::Extension) {
        return Polynomial::constant(ring_, ring_.field.generator());
      }
      fail_at(base_ + start, "unknown identifier '" + id + "'");
    }
    if (accept('(')) {
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const GradedRing& ring_;
  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("X" + std::to_string(i));
  return v;
}

Polynomial parse_poly_at(const GradedRing& ring, std::string_view text, const std::vector<std::string>& names,
                         std::size_t base) {
  return PolyParser(ring, text, names, base).parse();
}

}  // namespace

std::vector<std::pair<std::string, std::size_t>> split_top_level(std::string_view text, char sep) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      else if (text[i] == ')') --depth;
    }
    if (i == text.size() || (text[i] == sep && depth == 0)) {
      auto [piece, off] = trim(text.substr(start, i - start), start);
      out.emplace_back(std::string(piece), off);
      start = i + 1;
    }
  }
  return out;
}

Field parse_field(std::string_view text) {
  auto [s, off] = trim(text);
  if (s == "Q" || s == "QQ") return Field::rationals();
  if (s.size() < 4 || s.substr(0, 3) != "GF(" || s.back() != ')') fail_at(off, "expected Q or GF(...)");
  const std::string_view inner = s.substr(3, s.size() - 4);
  const std::size_t inner_off = off + 3;
  const std::size_t semi = inner.find(';');
  const std::string_view head = inner.substr(0, semi);
  std::size_t i = 0;
  auto read_int = [&](const char* what) {
    while (i < head.size() && head[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < head.size() && std::isdigit(static_cast<unsigned char>(head[i]))) ++i;
    if (i == start || i - start > 18) fail_at(inner_off + start, std::string("expected ") + what);
    return std::stoull(std::string(head.substr(start, i - start)));
  };
  const std::uint64_t p = read_int("a prime");
  std::uint64_t k = 1;
  while (i < head.size() && head[i] == ' ') ++i;
  if (i < head.size() && head[i] == '^') {
    ++i;
    k = read_int("an extension degree");
  }
  while (i < head.size() && head[i] == ' ') ++i;
  if (i != head.size()) fail_at(inner_off + i, "unexpected text in field");
  if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) fail_at(inner_off, "extension degree must be positive");
  if (semi == std::string_view::npos) {
    if (k == 1) return Field::prime(p);
    const UniPoly m = first_irreducible(Field::prime(p), k);
    std::vector<std::uint64_t> c;
    for (const auto& x : m.coefficients()) c.push_back(x.residue());
    return Field::extension(p, c);
  }
  const GradedRing wring(Field::prime(p), 1);
  const Polynomial m = parse_poly_at(wring, inner.substr(semi + 1), {"w"}, inner_off + semi + 1);
  std::vector<std::uint64_t> c;
  for (const auto& t : m.terms()) {
    const std::size_t e = t.mono[0];
    if (c.size() <= e) c.resize(e + 1, 0);
    c[e] = t.coef.residue();
  }
  if (c.size() != k + 1) fail_at(inner_off + semi + 1, "modulus degree does not match the extension degree");
  return Field::extension(p, c);
}

Polynomial parse_polynomial(const GradedRing& ring, std::string_view text, const std::vector<std::string>& names) {
  return parse_poly_at(ring, text, names.empty() ? default_names(ring.num_vars) : names, 0);
}

// ---------------------------------------------------------------- jobs

GradedModule JobDescription::module() const {
  switch (object) {
    case Object::Ideal: return GradedModule::cyclic(ring(), ideal);
    case Object::Presented: return GradedModule(ring(), gens, relations);
    default: raise(ErrorCode::InvalidArgument, "the job does not describe a graded module");
  }
}

FiniteAlgebra JobDescription::build_algebra() const {
  if (object == Object::StructureConstants) return *algebra;
  if (object == Object::QuotientAlgebra) return FiniteAlgebra::from_quotient(ring(), ideal);
  raise(ErrorCode::InvalidArgument, "the job does not describe an algebra");
}

Vector JobDescription::algebra_element(const FiniteAlgebra& A, const Polynomial& f) const {
  std::vector<Vector> values;
  if (object == Object::StructureConstants) {
    for (std::size_t i = 0; i < A.dim(); ++i) values.push_back(A.basis_vector(i));
  } else {
    values = A.images();
  }
  Vector acc = A.zero();
  for (const auto& t : f.terms()) {
    Vector v = A.unit();
    for (std::size_t i = 0; i < values.size(); ++i)
      if (t.mono[i]) v = A.multiply(v, A.power(values[i], t.mono[i]));
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += t.coef * v[j];
  }
  return acc;
}

namespace {

struct Entry {
  std::string value;
  std::size_t line;
  std::size_t column;
};

[[noreturn]] void fail_line(const Entry& e, std::size_t column, const std::string& msg) {
  raise(ErrorCode::ParseError, "line " + std::to_string(e.line) + ", column " + std::to_string(column + 1) + ": " + msg);
}

/// Re-raises errors from a value parser with the entry's line and the
/// absolute column.
template <class F>
auto at_entry(const Entry& e, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& err) {
    std::string msg = err.what();
    if (err.code() == ErrorCode::ParseError && msg.rfind("column ", 0) == 0) {
      const std::size_t colon = msg.find(':');
      const std::size_t col = std::stoul(msg.substr(7, colon - 7)) - 1;
      fail_line(e, e.column + col, msg.substr(colon + 2));
    }
    raise(err.code(), "line " + std::to_string(e.line) + ": " + msg);
  }
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> k{"field",  "vars",     "order", "command",      "module",       "ideal",
                                       "gens",   "relations", "algebra", "basis",     "product",      "unit",
                                       "krull-ideal", "krull-module", "seed", "probe", "max-ext", "method",
                                       "samples", "threshold"};
  return k;
}

}  // namespace

JobDescription parse_job(std::string_view text, std::string_view command) {
  std::map<std::string, Entry> single;
  std::vector<Entry> products;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto [body, boff] = trim(line);
    if (!body.empty()) {
      const std::size_t colon = body.find(':');
      Entry where{"", line_no, boff};
      if (colon == std::string_view::npos) fail_line(where, boff, "expected 'key: value'");
      const std::string key(trim(body.substr(0, colon)).first);
      auto [val, voff] = trim(body.substr(colon + 1), boff + colon + 1);
      Entry e{std::string(val), line_no, voff};
      if (!known_keys().count(key)) fail_line(where, boff, "unknown key '" + key + "'");
      if (key == "product") {
        products.push_back(std::move(e));
      } else {
        if (single.count(key)) fail_line(where, boff, "duplicate key '" + key + "'");
        single.emplace(key, std::move(e));
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }

  JobDescription job;
  auto need = [&](const std::string& key) -> const Entry& {
    auto it = single.find(key);
    if (it == single.end()) raise(ErrorCode::ParseError, "missing key '" + key + "'");
    return it->second;
  };
  auto has = [&](const std::string& key) { return single.count(key) > 0; };

  const auto& cmds = known_commands();
  if (!command.empty()) {
    job.command = std::string(command);
    if (std::find(cmds.begin(), cmds.end(), job.command) == cmds.end()) {
      raise(ErrorCode::UnknownCommand, "unknown command '" + job.command + "'");
    }
  } else {
    const Entry& cmd = need("command");
    job.command = cmd.value;
    if (std::find(cmds.begin(), cmds.end(), job.command) == cmds.end()) {
      raise(ErrorCode::UnknownCommand, "line " + std::to_string(cmd.line) + ": unknown command '" + job.command + "'");
    }
  }

  const Entry& fe = need("field");
  job.field = at_entry(fe, [&] { return parse_field(fe.value); });
  if (has("order")) {
    const Entry& oe = single.at("order");
    job.order = at_entry(oe, [&] { return parse_monomial_order(oe.value); });
  }
  if (has("vars")) {
    const Entry& ve = single.at("vars");
    std::size_t i = 0;
    const std::string& v = ve.value;
    while (i < v.size()) {
      while (i < v.size() && std::isspace(static_cast<unsigned char>(v[i]))) ++i;
      if (i == v.size()) break;
      const std::size_t s = i;
      while (i < v.size() && !std::isspace(static_cast<unsigned char>(v[i]))) ++i;
      const std::string name = v.substr(s, i - s);
      if (!is_ident_start(name[0]) || !std::all_of(name.begin(), name.end(), is_ident)) {
        fail_line(ve, ve.column + s, "invalid variable name '" + name + "'");
      }
      if (std::find(job.var_names.begin(), job.var_names.end(), name) != job.var_names.end()) {
        fail_line(ve, ve.column + s, "duplicate variable '" + name + "'");
      }
      job.var_names.push_back(name);
    }
  }
  for (const char* key : {"seed", "probe", "max-ext", "method", "samples", "threshold"}) {
    if (!has(key)) continue;
    const Entry& e = single.at(key);
    if (std::string(key) != "method") {
      if (e.value.empty() || !std::all_of(e.value.begin(), e.value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          e.value.size() > 18) {
        fail_line(e, e.column, std::string("'") + key + "' must be a non-negative integer");
      }
    } else if (e.value != "certificate" && e.value != "brute" && e.value != "both") {
      fail_line(e, e.column, "method must be certificate, brute or both");
    }
    job.options[key] = e.value;
  }

  const GradedRing ring = job.ring();
  auto parse_list = [&](const Entry& e, const GradedRing& r, const std::vector<std::string>& names) {
    std::vector<Polynomial> out;
    if (e.value.empty()) return out;
    for (auto& [piece, off] : split_top_level(e.value, ';')) {
      if (piece.empty()) fail_line(e, e.column + off, "empty polynomial");
      out.push_back(at_entry(e, [&] { return parse_poly_at(r, piece, names, off); }));
    }
    return out;
  };
  auto require_homogeneous = [&](const Entry& e, const Polynomial& f) {
    if (!f.is_homogeneous()) {
      raise(ErrorCode::InhomogeneousInput, "line " + std::to_string(e.line) + ": " + f.to_string() + " is not homogeneous");
    }
  };

  if (job.command == "krull-check") {
    const Entry& ae = need("algebra");
    if (ae.value == "quotient") {
      job.object = JobDescription::Object::QuotientAlgebra;
      if (job.var_names.empty()) raise(ErrorCode::ParseError, "missing key 'vars'");
      const Entry& ie = need("ideal");
      job.ideal = parse_list(ie, ring, job.var_names);
      for (const auto& f : job.ideal) require_homogeneous(ie, f);
      const GradedModule M = GradedModule::cyclic(ring, job.ideal);
      if (!M.hilbert().polynomial_is_zero()) {
        raise(ErrorCode::ParseError, "line " + std::to_string(ie.line) + ": the quotient is not finite-dimensional");
      }
      job.labels = job.var_names;
    } else if (ae.value == "structure-constants") {
      job.object = JobDescription::Object::StructureConstants;
      const Entry& be = need("basis");
      for (auto& [name, off] : split_top_level(be.value, ' ')) {
        if (name.empty()) continue;
        if (!is_ident_start(name[0]) || !std::all_of(name.begin(), name.end(), is_ident)) {
          fail_line(be, be.column + off, "invalid basis label '" + name + "'");
        }
        if (std::find(job.labels.begin(), job.labels.end(), name) != job.labels.end()) {
          fail_line(be, be.column + off, "duplicate basis label '" + name + "'");
        }
        job.labels.push_back(name);
      }
      if (job.labels.empty()) fail_line(be, be.column, "empty basis");
      const std::size_t n = job.labels.size();
      const GradedRing lring(job.field, n);
      auto linear = [&](const Entry& e, std::string_view txt, std::size_t off) {
        const Polynomial f = at_entry(e, [&] { return parse_poly_at(lring, txt, job.labels, off); });
        Vector v = zero_vector(job.field, n);
        for (const auto& t : f.terms()) {
          if (t.mono.degree() != 1) fail_line(e, e.column + off, "expected a linear combination of basis labels");
          for (std::size_t i = 0; i < n; ++i)
            if (t.mono[i]) v[i] = t.coef;
        }
        return v;
      };
      auto label_index = [&](const Entry& e, std::string_view name, std::size_t off) {
        auto [nm, o] = trim(name, off);
        auto it = std::find(job.labels.begin(), job.labels.end(), std::string(nm));
        if (it == job.labels.end()) fail_line(e, e.column + o, "unknown basis label '" + std::string(nm) + "'");
        return static_cast<std::size_t>(it - job.labels.begin());
      };
      std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n, zero_vector(job.field, n)));
      std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
      for (const Entry& pe : products) {
        const std::size_t eq = pe.value.find('=');
        if (eq == std::string::npos) fail_line(pe, pe.column, "expected 'a*b = combination'");
        const std::string lhs = pe.value.substr(0, eq);
        const std::size_t star = lhs.find('*');
        if (star == std::string::npos) fail_line(pe, pe.column, "expected 'a*b' on the left");
        const std::size_t i = label_index(pe, std::string_view(lhs).substr(0, star), 0);
        const std::size_t j = label_index(pe, std::string_view(lhs).substr(star + 1), star + 1);
        if (seen[i][j]) fail_line(pe, pe.column, "product given twice");
        seen[i][j] = seen[j][i] = true;
        table[i][j] = table[j][i] = linear(pe, std::string_view(pe.value).substr(eq + 1), eq + 1);
      }
      const Entry& ue = need("unit");
      const Vector unit = linear(ue, ue.value, 0);
      job.algebra = FiniteAlgebra(job.field, job.labels, std::move(table), unit);
      if (auto bad = job.algebra->law_violation()) fail_line(ae, ae.column, "structure constants: " + *bad);
    } else {
      fail_line(ae, ae.column, "algebra must be structure-constants or quotient");
    }
    const GradedRing lring(job.field, job.labels.size());
    job.krull_ideal = parse_list(need("krull-ideal"), lring, job.labels);
    job.krull_module = parse_list(need("krull-module"), lring, job.labels);
    return job;
  }

  if (job.var_names.empty()) raise(ErrorCode::ParseError, "missing key 'vars'");
  const std::string kind = has("module") ? single.at("module").value : "cyclic";
  if (kind == "cyclic") {
    job.object = JobDescription::Object::Ideal;
    const Entry& ie = need("ideal");
    job.ideal = parse_list(ie, ring, job.var_names);
    for (const auto& f : job.ideal) require_homogeneous(ie, f);
  } else if (kind == "presented") {
    if (job.command == "projective-zero") raise(ErrorCode::ParseError, "projective-zero needs an ideal");
    job.object = JobDescription::Object::Presented;
    const Entry& ge = need("gens");
    for (auto& [d, off] : split_top_level(ge.value, ' ')) {
      if (d.empty()) continue;
      if (!std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || d.size() > 6) {
        fail_line(ge, ge.column + off, "generator degrees must be non-negative integers");
      }
      job.gens.push_back(std::stoi(d));
    }
    if (job.gens.empty()) fail_line(ge, ge.column, "no generators");
    const std::size_t r = job.gens.size();
    if (has("relations")) {
      const Entry& re = single.at("relations");
      for (auto& [row, off] : split_top_level(re.value, ';')) {
        if (row.empty()) continue;
        std::vector<std::pair<std::string, std::size_t>> comps;
        if (row.front() == '(' && row.back() == ')') {
          comps = split_top_level(std::string_view(row).substr(1, row.size() - 2), ',');
          for (auto& c : comps) c.second += off + 1;
        } else {
          comps = {{row, off}};
        }
        if (comps.size() != r) fail_line(re, re.column + off, "relation needs " + std::to_string(r) + " components");
        std::vector<Polynomial> ps;
        for (auto& [c, coff] : comps) ps.push_back(at_entry(re, [&] { return parse_poly_at(ring, c, job.var_names, coff); }));
        ModuleElement v = ModuleElement::from_components(ring, ps);
        if (!v.homogeneity(job.gens).homogeneous) {
          raise(ErrorCode::InhomogeneousInput, "line " + std::to_string(re.line) + ": relation " + v.to_string() + " is not homogeneous");
        }
        job.relations.push_back(std::move(v));
      }
    }
  } else {
    const Entry& me = single.at("module");
    fail_line(me, me.column, "module must be cyclic or presented");
  }
  return job;
}

}  // namespace grmod
