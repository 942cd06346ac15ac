// Command-line front end: evaluation, delta operations, fuzzing, service.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ilc/algebra.hpp"
#include "ilc/delta.hpp"
#include "ilc/eval.hpp"
#include "ilc/harness.hpp"
#include "ilc/json.hpp"
#include "ilc/service.hpp"
#include "ilc/syntax.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kSemantic = 2, kIncoherent = 3 };

constexpr std::uint64_t kDefaultEvalFuel = 100000;

// Reported as a usage error.
class InputError : public ilc::Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ilc::Term load_term(const std::string& path) {
  return ilc::parse_term(read_file(path));
}

ilc::Delta load_delta(const std::string& path) {
  return ilc::parse_delta(read_file(path));
}

void print_outcome(const ilc::EvalOutcome& o, bool json) {
  if (json) {
    std::cout << ilc::to_json(o).dump(2) << '\n';
    return;
  }
  if (const auto* v = std::get_if<ilc::Val>(&o)) {
    std::cout << ilc::pretty_term(v->value) << '\n';
  } else if (const auto* s = std::get_if<ilc::Stuck>(&o)) {
    std::cout << "stuck: " << s->reason << " at " << ilc::pretty_term(s->at) << '\n';
  } else {
    std::cout << "out of fuel\n";
  }
}

int run_eval(const std::string& file, std::uint64_t fuel, bool json) {
  ilc::FreshNameScope names;
  ilc::EvalOutcome o = ilc::eval(load_term(file), fuel);
  print_outcome(o, json);
  return std::holds_alternative<ilc::Val>(o) ? kOk : kSemantic;
}

int run_delta_eval(const std::string& file, std::uint64_t fuel, bool json) {
  ilc::FreshNameScope names;
  ilc::Delta d = load_delta(file);
  try {
    ilc::Delta dv = ilc::delta_eval(d, fuel);
    if (json) {
      std::cout << ilc::Json{{"src", ilc::to_json(ilc::src(d))},
                             {"tgt", ilc::to_json(ilc::tgt(d))},
                             {"value_delta", ilc::to_json(dv)},
                             {"src_value", ilc::to_json(ilc::src(dv))},
                             {"tgt_value", ilc::to_json(ilc::tgt(dv))}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << ilc::pretty_delta(dv) << '\n'
                << "  source value: " << ilc::pretty_term(ilc::src(dv)) << '\n'
                << "  target value: " << ilc::pretty_term(ilc::tgt(dv)) << '\n';
    }
    return kOk;
  } catch (const ilc::DeltaEvalError& e) {
    if (json) {
      std::cout << ilc::Json{{"error",
                              {{"message", e.what()},
                               {"endpoint", ilc::endpoint_name(e.endpoint())}}}}
                       .dump(2)
                << '\n';
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return kSemantic;
  }
}

int run_fuzz(const ilc::Config& cfg, bool json) {
  ilc::SuiteSummary s = ilc::run_coherence_suite(cfg);
  if (json) {
    std::cout << ilc::to_json(s).dump(2) << '\n';
  } else {
    std::cout << ilc::format_summary(s);
  }
  return s.incoherent > 0 ? kIncoherent : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental lambda-calculus workbench"};
  app.require_subcommand(1);

  std::string file1, file2;
  std::uint64_t fuel = kDefaultEvalFuel;
  bool json = false;
  ilc::Config cfg;
  int port = ilc::kDefaultPort;
  std::string host = "127.0.0.1";

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a program");
  eval_cmd->add_option("FILE", file1, "Program file, - for stdin")->required();
  eval_cmd->add_option("--fuel", fuel, "Step budget");
  eval_cmd->add_flag("--json", json, "Print JSON");

  auto* deval_cmd = app.add_subcommand(
      "delta-eval", "Evaluate a program change to a value change");
  deval_cmd->add_option("DELTAFILE", file1, "Delta file, - for stdin")->required();
  deval_cmd->add_option("--fuel", fuel, "Step budget");
  deval_cmd->add_flag("--json", json, "Print JSON");

  auto* apply_cmd = app.add_subcommand("apply", "Apply a delta to a program");
  apply_cmd->add_option("TERMFILE", file1)->required();
  apply_cmd->add_option("DELTAFILE", file2)->required();

  auto* diff_cmd = app.add_subcommand("diff", "Delta from FILE1 to FILE2");
  diff_cmd->add_option("FILE1", file1)->required();
  diff_cmd->add_option("FILE2", file2)->required();

  auto* compose_cmd = app.add_subcommand("compose", "Compose D1 then D2");
  auto* residual_cmd = app.add_subcommand("residual", "Residual D1 / D2");
  auto* compatible_cmd =
      app.add_subcommand("compatible", "Whether D1 is compatible with D2");
  for (auto* cmd : {compose_cmd, residual_cmd, compatible_cmd}) {
    cmd->add_option("D1", file1)->required();
    cmd->add_option("D2", file2)->required();
  }

  auto* check_cmd =
      app.add_subcommand("check", "Whether a delta applies to a program");
  check_cmd->add_option("DELTAFILE", file1)->required();
  check_cmd->add_option("TERMFILE", file2)->required();

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Run the coherence suite");
  fuzz_cmd->add_option("--trials", cfg.trials, "Number of trials")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seed", cfg.seed, "Base seed");
  fuzz_cmd->add_option("--fuel", cfg.fuel, "Baseline step budget")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--size", cfg.size, "Maximum program size")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  fuzz_cmd->add_flag("--json", json, "Print JSON");

  auto* serve_cmd = app.add_subcommand("serve", "Serve the JSON API over HTTP");
  serve_cmd->add_option("--port", port, "Port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host, "Address to bind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*eval_cmd) return run_eval(file1, fuel, json);
    if (*deval_cmd) return run_delta_eval(file1, fuel, json);
    if (*apply_cmd) {
      std::cout << ilc::pretty_term(ilc::apply(load_term(file1), load_delta(file2)))
                << '\n';
      return kOk;
    }
    if (*diff_cmd) {
      std::cout << ilc::pretty_delta(ilc::diff(load_term(file1), load_term(file2)))
                << '\n';
      return kOk;
    }
    if (*compose_cmd) {
      std::cout << ilc::pretty_delta(
                       ilc::compose(load_delta(file1), load_delta(file2)))
                << '\n';
      return kOk;
    }
    if (*residual_cmd) {
      std::cout << ilc::pretty_delta(
                       ilc::residual(load_delta(file1), load_delta(file2)))
                << '\n';
      return kOk;
    }
    if (*compatible_cmd) {
      std::cout << (ilc::compatible(load_delta(file1), load_delta(file2))
                        ? "true"
                        : "false")
                << '\n';
      return kOk;
    }
    if (*check_cmd) {
      ilc::Delta d = load_delta(file1);
      if (ilc::check_valid(d, load_term(file2))) {
        std::cout << "valid\n";
        return kOk;
      }
      std::cout << "invalid: the delta's source is " << ilc::pretty_term(ilc::src(d))
                << '\n';
      return kSemantic;
    }
    if (*fuzz_cmd) return run_fuzz(cfg, json);
    if (*serve_cmd) {
      std::cerr << "listening on http://" << host << ':' << port << '\n';
      if (!ilc::serve(host, port)) {
        std::cerr << "error: cannot listen on port " << port << '\n';
        return kUsage;
      }
      return kOk;
    }
  } catch (const ilc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ilc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSemantic;
  }
  return kUsage;
}
