#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "job_runner.hpp"

namespace {

struct Invocation {
  std::string command;
  std::string job_path;
  std::string json_path;
  grmod::tools::RunOptions opts;
};

void add_flags(CLI::App& sub, Invocation& inv) {
  sub.add_option("job", inv.job_path, "job description file ('-' reads stdin)")->required();
  sub.add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& v) { inv.opts.seed = v; },
                                         "random seed (default 0)");
  sub.add_option_function<int>("--probe", [&](const int& v) { inv.opts.probe = v; },
                               "extra degrees checked past each certified bound (default 5)");
  sub.add_option_function<int>("--max-ext", [&](const int& v) { inv.opts.max_ext = v; },
                               "largest extension degree for point enumeration (default 3)");
  sub.add_option_function<std::string>("--method", [&](const std::string& v) { inv.opts.method = v; },
                                       "projective-zero method")
      ->check(CLI::IsMember({"certificate", "brute", "both"}));
  sub.add_option("--json", inv.json_path, "write the JSON report to this path ('-' for stdout)");
}

std::string read_all(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded modules over polynomial rings: Groebner bases, Hilbert data, finiteness certificates"};
  app.require_subcommand(1);
  Invocation inv;
  for (const auto& name : grmod::known_commands()) {
    CLI::App* sub = app.add_subcommand(name, "run the job as '" + name + "'");
    add_flags(*sub, inv);
    sub->callback([&inv, name] { inv.command = name; });
  }
  CLI::App* run = app.add_subcommand("run", "run the command named in the job file");
  add_flags(*run, inv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  std::string text;
  try {
    text = read_all(inv.job_path);
  } catch (const std::exception& e) {
    std::cerr << "grmod: " << e.what() << "\n";
    return 1;
  }

  const grmod::tools::RunResult r = grmod::tools::run_text(text, inv.command, inv.opts);
  const std::string doc = r.json.dump(2) + "\n";
  if (inv.json_path == "-") {
    std::cout << doc;
  } else {
    std::cout << r.text;
    if (!inv.json_path.empty()) {
      std::ofstream out(inv.json_path, std::ios::binary);
      if (!out) {
        std::cerr << "grmod: cannot write " << inv.json_path << "\n";
        return 1;
      }
      out << doc;
    }
  }
  if (r.exit_code != 0 && inv.json_path != "-") std::cerr << "grmod: exit " << r.exit_code << "\n";
  return r.exit_code;
}
