// chowcalc: batch interpreter, REPL, verification suite and searches.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 parse error,
// 3 evaluation error.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chow/dsl/interpreter.hpp"
#include "chow/dsl/parser.hpp"
#include "chow/dsl/verify.hpp"
#include "chow/search.hpp"
#include "json.hpp"

namespace {

using namespace chow;
using namespace chow::dsl;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kParseError = 2;
constexpr int kEvalError = 3;

void print_report(const Report& r, const std::string& format) {
  std::cout << (format == "json" ? r.to_json() + "\n" : r.to_text());
}

int run_file(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << '\n';
    return kEvalError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Program prog;
  try {
    prog = parse_program(buf.str());
  } catch (const ParseError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kParseError;
  }
  try {
    const bool text = format != "json";
    Report r = eval_program(prog, [&](const std::string& s) {
      if (text) std::cout << s << '\n';
    });
    r.selector = path;
    if (!r.checks.empty() || !text) print_report(r, format);
    return r.all_passed() ? kOk : kFailed;
  } catch (const EvalError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kEvalError;
  }
}

int repl() {
  const bool tty = isatty(STDIN_FILENO);
  Parser parser;
  Interpreter interp([](const std::string& s) { std::cout << s << '\n'; });
  std::size_t reported = 0;
  std::string line;
  while (true) {
    if (tty) std::cout << "chow> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    try {
      const Program p = parser.parse(line);
      for (const auto& s : p.statements) interp.execute(s);
    } catch (const Error& e) {
      std::cout << "error: " << e.what() << '\n';
    }
    const auto& checks = interp.report().checks;
    for (; reported < checks.size(); ++reported) {
      const Check& c = checks[reported];
      std::cout << (c.passed ? "pass" : "FAIL: expected " + c.expected + ", got " + c.actual)
                << '\n';
    }
  }
  if (tty) std::cout << '\n';
  return interp.report().all_passed() ? kOk : kFailed;
}

int search(const std::string& preset, bool relax_floor, long qmax, long xmax, unsigned workers,
           const std::string& format) {
  SearchSpec spec = *parse_preset(preset) == SearchPreset::CaseAExclusion ? SearchSpec::thm5()
                                                                          : SearchSpec::thm6();
  if (qmax > 0) spec.q.hi = qmax;
  if (xmax > 0) spec.x.hi = xmax;
  spec.workers = workers;
  if (relax_floor) spec.floor_q1 = false;
  SearchResult r;
  try {
    r = run_search(spec);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEvalError;
  }
  if (relax_floor && spec.preset == SearchPreset::CaseBSolution) {
    r.notes.push_back("--relax-floor has no effect on thm6");
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["preset"] = preset;
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) {
      nlohmann::ordered_json o;
      for (const auto& [k, v] : w.values) o[k] = v;
      j["witnesses"].push_back(o);
    }
    j["tuples_checked"] = r.tuples_checked;
    j["q_cutoff"] = r.q_cutoff ? nlohmann::ordered_json(*r.q_cutoff) : nlohmann::ordered_json();
    j["notes"] = r.notes;
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "preset " << preset << ": " << r.witnesses.size() << " witness(es), "
            << r.tuples_checked << " tuples checked\n";
  for (const auto& w : r.witnesses) std::cout << "  " << w.to_string() << '\n';
  for (const auto& n : r.notes) std::cout << "note: " << n << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection-theory calculator"};
  app.require_subcommand(1);
  int status = kOk;

  std::string file;
  std::string format = "text";
  auto* run = app.add_subcommand("run", "Evaluate a script");
  run->add_option("file", file, "Script path")->required();
  run->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* rep = app.add_subcommand("repl", "Interactive session reading statements from stdin");

  std::string suite = "all";
  long qmax = 0;
  long xmax = 0;
  unsigned workers = 1;
  auto* verify = app.add_subcommand("verify", "Run the built-in verification checks");
  verify->add_option("--suite", suite)->check(CLI::IsMember(verification_selectors()));
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--qmax", qmax)->check(CLI::PositiveNumber);
  verify->add_option("--xmax", xmax)->check(CLI::PositiveNumber);
  verify->add_option("--workers", workers)->check(CLI::Range(1u, 256u));

  std::string preset;
  bool relax_floor = false;
  auto* srch = app.add_subcommand("search", "Run a search preset");
  srch->add_option("--preset", preset)->required()->check(CLI::IsMember({"thm5", "thm6"}));
  srch->add_flag("--relax-floor", relax_floor, "Drop the x >= 7 floor at q = 1");
  srch->add_option("--qmax", qmax)->check(CLI::PositiveNumber);
  srch->add_option("--xmax", xmax)->check(CLI::PositiveNumber);
  srch->add_option("--workers", workers)->check(CLI::Range(1u, 256u));
  srch->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  if (*run) {
    status = run_file(file, format);
  } else if (*rep) {
    status = repl();
  } else if (*verify) {
    VerifyOptions opts;
    if (qmax > 0) opts.qmax = qmax;
    if (xmax > 0) opts.xmax = xmax;
    opts.workers = workers;
    const Report r = run_verification_suite(suite, opts);
    print_report(r, format);
    status = r.all_passed() ? kOk : kFailed;
  } else if (*srch) {
    status = search(preset, relax_floor, qmax, xmax, workers, format);
  }
  return status;
}
