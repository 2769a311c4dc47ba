#pragma once

// Command-line front end: project, check, bench.
//
// Exit codes: 0 completed, 1 usage or I/O error, 2 blocked,
// 3 parse / validation / domain error, 4 step limit.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "ccgolog/engine.hpp"
#include "ccgolog/macros.hpp"
#include "ccgolog/parser.hpp"
#include "ccgolog/trace.hpp"
#include "ccgolog/validate.hpp"

namespace ccgolog {

enum ExitCode : int {
  kExitCompleted = 0,
  kExitUsage = 1,
  kExitBlocked = 2,
  kExitInvalid = 3,
  kExitStepLimit = 4,
};

inline int exit_code(Outcome o) {
  switch (o) {
    case Outcome::kCompleted:
      return kExitCompleted;
    case Outcome::kBlocked:
      return kExitBlocked;
    case Outcome::kStepLimit:
      return kExitStepLimit;
  }
  return kExitUsage;
}

/// Parses and validates a domain, parses a program and expands it.
inline Expansion prepare(std::string_view domain_text, std::string_view program_text) {
  Domain d = parse_domain(domain_text);
  validate_domain(d);
  return expand_macros(parse_program(program_text), d);
}

/// A scenario shipped with the tool, as domain and program text.
struct BundledScenario {
  std::string_view name;
  std::string_view domain;
  std::string_view program;
};

namespace detail {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string describe(const ValidationError& e) { return std::string("invalid domain or program: ") + e.what(); }

}  // namespace detail

/// Runs the command line `args` (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   const std::vector<BundledScenario>& bundled = {}) {
  CLI::App app{"Projection of cc-Golog programs over continuous change", "ccgolog"};
  app.require_subcommand(1);

  std::string domain_path, program_path, out_path, format = "text";
  std::size_t max_steps = 100000;
  auto add_projection_flags = [&](CLI::App* cmd) {
    cmd->add_option("--domain", domain_path, "domain file")->required();
    cmd->add_option("--program", program_path, "program file")->required();
    cmd->add_option("--max-steps", max_steps, "transition limit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "write the trace here instead of stdout");
  };
  CLI::App* project_cmd = app.add_subcommand("project", "project a program and print its trace");
  add_projection_flags(project_cmd);
  CLI::App* check_cmd = app.add_subcommand("check", "print only whether a program is executable");
  add_projection_flags(check_cmd);

  std::string scenario;
  std::size_t repeat = 1;
  std::vector<std::string> names;
  for (const auto& s : bundled) names.emplace_back(s.name);
  CLI::App* bench_cmd = app.add_subcommand("bench", "time the bundled scenarios");
  bench_cmd->add_option("--scenario", scenario, "bundled scenario")->required()->check(CLI::IsMember(names));
  bench_cmd->add_option("--repeat", repeat, "number of runs")->check(CLI::PositiveNumber)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitCompleted;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitCompleted;
  } catch (const CLI::ParseError& e) {
    err << "ccgolog: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (bench_cmd->parsed()) {
      auto it = std::find_if(bundled.begin(), bundled.end(),
                             [&](const BundledScenario& s) { return s.name == scenario; });
      std::vector<double> times;
      ProjectionResult last{Outcome::kBlocked, {}, {}, {}, 0, {}};
      for (std::size_t i = 0; i < repeat; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Expansion e = prepare(it->domain, it->program);
        last = project(e.program, e.domain, 100000);
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      }
      double mean = 0;
      for (double t : times) mean += t;
      mean /= static_cast<double>(times.size());
      out << "scenario\tstatus\tactions\ttransitions\truns\tmin_ms\tmean_ms\n";
      out << scenario << "\t" << to_string(last.outcome) << "\t" << last.trace.size() << "\t" << last.steps
          << "\t" << repeat << "\t" << std::fixed << std::setprecision(3)
          << *std::min_element(times.begin(), times.end()) << "\t" << mean << "\n";
      return exit_code(last.outcome);
    }

    Expansion e = prepare(detail::read_file(domain_path), detail::read_file(program_path));
    ProjectionResult r = project(e.program, e.domain, max_steps);

    if (check_cmd->parsed()) {
      switch (r.outcome) {
        case Outcome::kCompleted:
          out << "executable (" << r.trace.size() << " actions, ends at "
              << to_decimal_string(r.situation.start.value()) << ")\n";
          break;
        case Outcome::kBlocked:
          out << "blocked at " << to_decimal_string(r.situation.start.value()) << ": " << r.reason << "\n";
          break;
        case Outcome::kStepLimit:
          out << "step limit: " << r.reason << "\n";
          break;
      }
      return exit_code(r.outcome);
    }

    TraceFormat f = format == "json" ? TraceFormat::kJson : TraceFormat::kText;
    std::string text = format_trace(make_trace_document(r), f);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!(file << text)) throw detail::IoError("cannot write '" + out_path + "'");
    }
    if (!r.completed()) err << "ccgolog: " << to_string(r.outcome) << ": " << r.reason << "\n";
    return exit_code(r.outcome);
  } catch (const detail::IoError& e) {
    err << "ccgolog: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "ccgolog: syntax error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ValidationError& e) {
    err << "ccgolog: " << detail::describe(e) << "\n";
    return kExitInvalid;
  } catch (const DomainError& e) {
    err << "ccgolog: domain error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const IllegalActionError& e) {
    err << "ccgolog: illegal action: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace ccgolog
