#include "job_runner.hpp"

#include <regex>
#include <sstream>

#include "grmod/cartier.hpp"
#include "grmod/error.hpp"
#include "grmod/krull.hpp"
#include "grmod/zeros.hpp"

namespace grmod::tools {

using json = nlohmann::ordered_json;

namespace {

struct Settings {
  std::uint64_t seed = 0;
  int probe = 5;
  int max_ext = 3;
  std::string method = "certificate";
  std::size_t samples = 5;
  std::optional<int> threshold;
};

Settings settings(const JobDescription& job, const RunOptions& opts) {
  Settings s;
  auto opt = [&](const char* key) -> std::optional<std::string> {
    auto it = job.options.find(key);
    if (it == job.options.end()) return std::nullopt;
    return it->second;
  };
  if (auto v = opt("seed")) s.seed = std::stoull(*v);
  if (auto v = opt("probe")) s.probe = std::stoi(*v);
  if (auto v = opt("max-ext")) s.max_ext = std::stoi(*v);
  if (auto v = opt("method")) s.method = *v;
  if (auto v = opt("samples")) s.samples = std::stoul(*v);
  if (auto v = opt("threshold")) s.threshold = std::stoi(*v);
  if (opts.seed) s.seed = *opts.seed;
  if (opts.probe) s.probe = *opts.probe;
  if (opts.max_ext) s.max_ext = *opts.max_ext;
  if (opts.method) s.method = *opts.method;
  if (s.probe < 1) raise(ErrorCode::InvalidArgument, "probe must be at least 1");
  if (s.max_ext < 1) raise(ErrorCode::InvalidArgument, "max-ext must be at least 1");
  if (s.method != "certificate" && s.method != "brute" && s.method != "both") {
    raise(ErrorCode::InvalidArgument, "method must be certificate, brute or both");
  }
  return s;
}

json strings(const std::vector<FieldElement>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.to_string());
  return a;
}

// The engine prints X0..Xn; jobs may name their variables differently.
std::string rename(const std::string& s, const std::vector<std::string>& names) {
  static const std::regex var(R"(\bX(\d+)\b)");
  std::string out;
  auto last = s.cbegin();
  for (std::sregex_iterator it(s.begin(), s.end(), var), end; it != end; ++it) {
    out.append(last, (*it)[0].first);
    const std::size_t i = std::stoul((*it)[1].str());
    out += i < names.size() ? names[i] : (*it)[0].str();
    last = (*it)[0].second;
  }
  out.append(last, s.cend());
  return out;
}

std::string monomial_text(const ModuleMonomial& m, std::size_t rank, const std::vector<std::string>& names) {
  if (rank == 1) return rename(m.mono.to_string(), names);
  std::string s = m.mono.is_one() ? "" : rename(m.mono.to_string(), names) + "*";
  return s + "e" + std::to_string(m.comp);
}

json elements(const std::vector<ModuleElement>& v, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& e : v) a.push_back(rename(e.to_string(), names));
  return a;
}

json header(const JobDescription& job) {
  json j;
  j["schema"] = 1;
  j["command"] = job.command;
  j["field"] = job.field.to_string();
  if (!job.var_names.empty()) {
    j["vars"] = job.var_names;
    j["order"] = std::string(to_string(job.order));
  }
  return j;
}

// ---------------------------------------------------------------- commands

void run_gb(const JobDescription& job, json& out, std::ostream& text) {
  const GradedModule M = job.module();
  const GroebnerBasis& gb = M.relations();
  out["generators"] = elements(gb.generators(), job.var_names);
  out["size"] = gb.size();
  const bool ok = gb.spairs_reduce_to_zero();
  out["spairs_reduce_to_zero"] = ok;
  text << "Groebner basis (" << gb.size() << " elements):\n";
  for (const auto& g : gb.generators()) text << "  " << rename(g.to_string(), job.var_names) << "\n";
  if (!ok) raise(ErrorCode::InternalInconsistency, "an S-pair does not reduce to zero");
}

void run_hilbert(const JobDescription& job, const Settings& s, json& out, std::ostream& text) {
  const GradedModule M = job.module();
  const HilbertData& h = M.hilbert();
  const int through = std::max(h.stabilization_degree, s.probe - 1);
  std::vector<std::uint64_t> values = h.values(through);
  out["function"] = values;
  out["polynomial"] = h.polynomial_string();
  out["stabilization"] = h.stabilization_degree;
  out["numerator"] = h.numerator_string();
  text << "Hilbert function:";
  for (auto v : values) text << " " << v;
  text << "\nHilbert polynomial: " << h.polynomial_string() << "\nstabilization degree: " << h.stabilization_degree
       << "\nseries numerator: " << h.numerator_string() << "\n";
}

void run_classify(const JobDescription& job, const Settings& s, json& out, std::ostream& text) {
  const GradedModule M = job.module();
  const LengthReport len = classify_length(M, s.probe);
  out["length"] = to_string(len.length);
  out[len.length == Length::Short ? "zero_from" : "nonzero_from"] = len.from;
  out["hilbert_polynomial"] = M.hilbert().polynomial_string();
  if (job.object == JobDescription::Object::Ideal) out["saturated_as_ideal"] = len.length == Length::Short;
  text << "length: " << to_string(len.length) << " (" << (len.length == Length::Short ? "zero" : "nonzero")
       << " from degree " << len.from << ")\n";
}

void run_simple_grading(const JobDescription& job, const Settings& s, json& out, std::ostream& text) {
  const GradedModule M = job.module();
  const TechnicalLemmaReport r = technical_lemma_report(M, s.probe);
  out["first_simple_degree"] = r.simple.first_simple_degree;
  out["verified_through"] = r.simple.verified_through;
  out["minimal_generator_degrees"] = r.generator_degrees;
  out["regenerates"] = r.regenerates;
  text << "S_1 M_k = M_{k+1} for all k >= " << r.simple.first_simple_degree << " (checked through "
       << r.simple.verified_through << ")\nminimal generator degrees:";
  for (int d : r.generator_degrees) text << " " << d;
  text << "\n";
  if (!r.regenerates) raise(ErrorCode::InternalInconsistency, "chosen generators do not generate M");
}

json certificate_json(const JobDescription& job, const CartierTateCertificate& c) {
  json j;
  json order = json::array(), B = json::array();
  for (auto i : c.variable_order) order.push_back(job.var_names[i]);
  for (auto i : c.B) B.push_back(job.var_names[i]);
  j["variable_order"] = order;
  j["B"] = B;
  j["x"] = job.var_names[c.x];
  j["simple_degree_P"] = c.simple_degree_P();
  j["colimit_degree"] = c.colimit_degree();
  j["quotient_dim"] = c.quotient_dim();
  json basis = json::array();
  for (const auto& m : c.colimit.basis()) basis.push_back(monomial_text(m, c.M.rank(), job.var_names));
  j["quotient_basis"] = basis;
  return j;
}

json witness_json(const JobDescription& job, const NonSaturationWitness& w, const CartierTateCertificate& c,
                  int probe) {
  json j;
  j["threshold"] = w.threshold;
  j["degree"] = w.degree;
  j["v"] = rename(w.v.to_string(), job.var_names);
  j["image"] = strings(w.image);
  j["bijective_rank"] = w.bijective_rank;
  const int top = w.degree + std::max(c.P.hilbert().stabilization_degree, c.colimit_degree()) + probe;
  const bool in_image = in_one_minus_x_image(c.P, c.colimit.x(), w.v, w.degree, top);
  j["in_one_minus_x_P"] = in_image;
  j["oracle_truncation"] = top;
  if (in_image) raise(ErrorCode::InternalInconsistency, "witness lies in (1 - x)P");
  return j;
}

void run_cartier(const JobDescription& job, const Settings& s, json& out, std::ostream& text) {
  const GradedModule M = job.module();
  const CartierTateCertificate c = run_theorem(M, s.probe);
  const json cj = certificate_json(job, c);
  for (const auto& [k, v] : cj.items()) out[k] = v;
  const NonSaturationWitness w =
      s.threshold ? nonsaturation_certificate(c.colimit, *s.threshold) : c.witness;
  out["witness"] = witness_json(job, w, c, s.probe);
  out["L_generators"] = elements(c.L_generators, job.var_names);
  text << "B = {";
  for (std::size_t i = 0; i < c.B.size(); ++i) text << (i ? ", " : "") << job.var_names[c.B[i]];
  text << "}, x = " << job.var_names[c.x] << "\ncolimit degree " << c.colimit_degree() << ", dim M/L = "
       << c.quotient_dim() << "\nwitness: " << rename(w.v.to_string(), job.var_names) << " in degree " << w.degree
       << " is not in (1 - x)P\n";
}

json point_json(const ProjectivePoint& p) {
  json j;
  j["coordinates"] = p.coordinate_strings();
  j["field"] = p.field.to_string();
  return j;
}

void run_projective_zero(const JobDescription& job, const Settings& s, json& out, std::ostream& text) {
  const GradedRing ring = job.ring();
  std::optional<NullstellensatzResult> cert;
  if (s.method != "brute") {
    cert = nullstellensatz(ring, job.ideal, s.seed, s.probe);
    out["status"] = to_string(cert->status);
    if (cert->point) {
      out["point"] = cert->point->coordinate_strings();
      out["point_field"] = cert->point->field.to_string();
      text << "zero " << cert->point->to_string() << " over " << cert->point->field.to_string() << "\n";
    }
    if (cert->status == NullstellensatzResult::Status::Saturated) {
      out["saturated_from"] = cert->saturated_from;
      text << "saturated: J contains every monomial of degree >= " << cert->saturated_from << "\n";
    }
    if (cert->certificate) {
      json c = certificate_json(job, *cert->certificate);
      const FiniteAlgebra& A = *cert->algebra;
      json alg;
      json labels = json::array();
      for (const auto& l : A.labels()) labels.push_back(rename(l, job.var_names));
      alg["basis"] = labels;
      alg["unit"] = strings(A.unit());
      json images = json::array();
      for (const auto& v : A.images()) images.push_back(strings(v));
      alg["images"] = images;
      c["algebra"] = alg;
      out["certificate"] = c;
    }
    if (cert->non_nilpotent) {
      out["non_nilpotent"] = {{"variable", job.var_names[cert->certificate->x]},
                              {"image", strings(*cert->non_nilpotent)}};
      text << "algebra of dimension " << cert->algebra->dim() << "; the image of "
           << job.var_names[cert->certificate->x] << " is the unit\n";
    }
  }
  if (s.method != "certificate") {
    auto bp = brute_force_zero(ring, job.ideal, s.max_ext);
    json b;
    b["max_ext"] = s.max_ext;
    b["status"] = bp ? "zero" : "not-found";
    if (bp) b["point"] = point_json(*bp);
    text << "enumeration (max-ext " << s.max_ext << "): " << (bp ? bp->to_string() : std::string("no zero")) << "\n";
    if (s.method == "brute") {
      out["status"] = bp ? "zero" : "not-found";
      if (bp) {
        out["point"] = bp->coordinate_strings();
        out["point_field"] = bp->field.to_string();
      }
    } else {
      const bool agree = (cert->status == NullstellensatzResult::Status::Zero) == bp.has_value();
      b["agrees"] = agree;
    }
    out["brute_force"] = b;
  }
}

void run_krull(const JobDescription& job, const Settings& s, json& out, std::ostream& text) {
  const FiniteAlgebra A = job.build_algebra();
  if (auto bad = A.law_violation()) raise(ErrorCode::InvalidArgument, "algebra laws fail: " + *bad);
  std::vector<Vector> a, M;
  for (const auto& f : job.krull_ideal) a.push_back(job.algebra_element(A, f));
  for (const auto& f : job.krull_module) M.push_back(job.algebra_element(A, f));
  const KrullReport r = krull_check(A, a, M, s.samples, s.seed);
  out["dim"] = A.dim();
  out["a_dim"] = r.a.dim();
  out["M_dim"] = r.M.dim();
  out["N_dim"] = r.intersection.N.dim();
  out["stabilized_at"] = r.intersection.stabilized_at;
  json chain = json::array();
  for (const auto& c : r.intersection.chain) chain.push_back(c.dim());
  out["chain_dims"] = chain;
  json cases = json::array();
  for (const auto& c : r.cases) cases.push_back({{"N_dim", c.N.dim()}, {"aN_dim", c.aN.dim()}, {"holds", c.holds}});
  out["cases"] = cases;
  out["all_hold"] = r.all_hold;
  text << "dim R = " << A.dim() << ", dim a = " << r.a.dim() << ", dim M = " << r.M.dim() << "\nN = a^i M stable from i = "
       << r.intersection.stabilized_at << ", dim N = " << r.intersection.N.dim() << "\n"
       << r.cases.size() << " submodules checked: " << (r.all_hold ? "aN = N for all" : "VIOLATION") << "\n";
  if (!r.all_hold) raise(ErrorCode::InternalInconsistency, "aN != N for an eligible submodule");
}

json error_json(const Error& e) {
  return json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::HypothesisViolated:
    case ErrorCode::PreconditionUnmet:
    case ErrorCode::PIsShort:
    case ErrorCode::NotCyclic:
    case ErrorCode::AllNilpotent:
      return 2;
    case ErrorCode::InternalInconsistency:
      return 3;
    default:
      return 1;
  }
}

RunResult run_job(const JobDescription& job, const RunOptions& opts) {
  RunResult r;
  r.json = header(job);
  std::ostringstream text;
  try {
    const Settings s = settings(job, opts);
    if (job.command == "gb") run_gb(job, r.json, text);
    else if (job.command == "hilbert") run_hilbert(job, s, r.json, text);
    else if (job.command == "classify") run_classify(job, s, r.json, text);
    else if (job.command == "simple-grading") run_simple_grading(job, s, r.json, text);
    else if (job.command == "cartier-tate") run_cartier(job, s, r.json, text);
    else if (job.command == "projective-zero") run_projective_zero(job, s, r.json, text);
    else if (job.command == "krull-check") run_krull(job, s, r.json, text);
    else raise(ErrorCode::UnknownCommand, "unknown command '" + job.command + "'");
  } catch (const Error& e) {
    r.json["error"] = error_json(e);
    r.exit_code = exit_code_for(e.code());
    text << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
  }
  r.text = text.str();
  return r;
}

RunResult run_text(std::string_view text, std::string_view command, const RunOptions& opts) {
  try {
    return run_job(parse_job(text, command), opts);
  } catch (const Error& e) {
    RunResult r;
    r.json["schema"] = 1;
    if (!command.empty()) r.json["command"] = std::string(command);
    r.json["error"] = error_json(e);
    r.exit_code = exit_code_for(e.code());
    r.text = "error [" + std::string(to_string(e.code())) + "]: " + e.what() + "\n";
    return r;
  }
}

}  // namespace grmod::tools
