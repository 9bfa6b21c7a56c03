#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "approx/batch.hpp"
#include "approx/cli.hpp"
#include "approx/error.hpp"
#include "approx/generator.hpp"
#include "approx/ratio.hpp"
#include "approx/trace.hpp"

namespace approx::cli {

int exit_code_for(const std::exception_ptr& error) {
  try {
    std::rethrow_exception(error);
  } catch (const CapExceeded&) {
    return kCapOrGuarantee;
  } catch (const InputError&) {
    return kInput;
  } catch (const Json::exception&) {
    return kInput;
  } catch (...) {
    return kInternal;
  }
}

SolveOptions to_solve_options(const RequestOptions& request) {
  SolveOptions o;
  o.algorithm = parse_algorithm(request.algorithm);
  o.epsilon = request.epsilon;
  o.root = request.root;
  o.force = request.force;
  return o;
}

Json solve_document(const Instance& instance, const RequestOptions& request) {
  return to_json(solve(instance, to_solve_options(request)));
}

Json trace_document(const Instance& instance, const RequestOptions& request) {
  return to_json(traced_solve(instance, to_solve_options(request)).second);
}

Json compare_document(const Instance& instance, const RequestOptions& request) {
  const SolveOptions options = to_solve_options(request);
  const auto oracle = oracle_for(options.algorithm);
  if (!oracle) throw InputError(std::string(to_string(options.algorithm)) + " has no exact oracle to compare against");
  SolveOptions exact_options = options;
  exact_options.algorithm = *oracle;
  exact_options.epsilon.reset();
  const SolveOutcome approx = solve(instance, options);
  const SolveOutcome exact = solve(instance, exact_options);
  return to_json(make_record(approx, exact, instance_digest(instance), request.seed));
}

Json problems_document() {
  Json problems = Json::array();
  for (Problem p : kAllProblems) {
    Json algorithms = Json::array();
    for (Algorithm a : kAllAlgorithms) {
      if (problem_of(a) == p) algorithms.push_back(std::string(to_string(a)));
    }
    problems.push_back(Json{{"problem", std::string(to_string(p))},
                            {"instance_kind", std::string(to_string(instance_kind_for(p)))},
                            {"algorithms", std::move(algorithms)}});
  }
  return Json{{"problems", std::move(problems)}};
}

std::string render(const Json& doc) { return doc.dump() + "\n"; }

namespace {

struct Flags {
  std::string instance;
  RequestOptions request;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "human";
  int port = 7878;
  unsigned threads = 1;
  bool verify_replay = false;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f.flush()) throw InputError("cannot write " + path);
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string number_text(double v) {
  const Json j = std::floor(v) == v && std::abs(v) < 9e15 ? Json(static_cast<std::int64_t>(v)) : Json(v);
  return j.dump();
}

void print_outcome(std::ostream& out, const SolveOutcome& o) {
  out << "problem:     " << to_string(o.problem) << "\n"
      << "algorithm:   " << to_string(o.algorithm) << "\n"
      << "value:       " << number_text(o.value) << "\n"
      << "certificate: " << (o.problem == Problem::SubsetSum && o.certificate.empty() && !o.is_exact
                                 ? std::string("(value only)")
                                 : join(o.certificate))
      << "\n"
      << "bound:       " << number_text(o.bound) << (o.is_exact ? " (exact)" : "") << "\n";
  if (!o.guarantee) out << "guarantee:   void (forced past a failed precondition)\n";
}

int cmd_solve(const Flags& f, std::ostream& out) {
  const Json doc = solve_document(read_instance_file(f.instance), f.request);
  if (!f.out.empty()) write_file(f.out, render(doc));
  if (f.format == "machine") {
    out << render(doc);
  } else {
    print_outcome(out, outcome_from_json(doc));
  }
  return kOk;
}

int cmd_compare(const Flags& f, std::ostream& out) {
  const Json doc = compare_document(read_instance_file(f.instance), f.request);
  if (!f.out.empty()) write_file(f.out, render(doc));
  const bool within = doc.at("within_bound").get<bool>();
  if (f.format == "machine") {
    out << render(doc);
  } else {
    out << "approx: " << number_text(doc.at("approx").get<double>()) << "\n"
        << "exact:  " << number_text(doc.at("exact").get<double>()) << "\n"
        << "ratio:  " << format_fixed(doc.at("ratio").get<double>()) << "\n"
        << "bound:  " << format_fixed(doc.at("bound").get<double>()) << (within ? "" : "  VIOLATED") << "\n";
  }
  return within ? kOk : kCapOrGuarantee;
}

GeneratorConfig read_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed config: ") + e.what());
  }
  return generator_config_from_json(doc);
}

int cmd_batch(const Flags& f, std::ostream& out) {
  GeneratorConfig config = read_config(f.instance);
  if (f.seed) config.seed = *f.seed;
  const BatchReport report = run_batch(config, Pairing{to_solve_options(f.request), std::nullopt}, f.threads);
  const std::string csv = to_csv(report);
  if (f.out.empty()) {
    out << csv;
  } else {
    write_file(f.out, csv);
    const BatchSummary& s = report.summary;
    if (f.format == "machine") {
      out << render(summary_to_json(report));
    } else {
      out << "instances:  " << s.count << "\n"
          << "mean ratio: " << format_fixed(s.mean_ratio) << "\n"
          << "max ratio:  " << format_fixed(s.max_ratio) << "\n"
          << "bound:      " << format_fixed(s.bound) << "\n"
          << "violations: " << s.violations << "\n";
    }
  }
  return report.summary.violations == 0 ? kOk : kCapOrGuarantee;
}

int cmd_trace(const Flags& f, std::ostream& out, std::ostream& err) {
  const Json doc = trace_document(read_instance_file(f.instance), f.request);
  if (!f.out.empty()) write_file(f.out, render(doc));
  if (f.out.empty() || f.format == "machine") out << render(doc);
  if (f.verify_replay) {
    const TraceLog log = trace_from_json(doc);
    if (log.truncated) {
      err << "error: trace truncated at " << log.events.size() << " events; replay needs the full log\n";
      return kCapOrGuarantee;
    }
    const Replay replay = replay_trace(log);
    if (replay.certificate != log.final_outcome.certificate) {
      err << "error: replay certificate " << join(replay.certificate) << " differs from outcome "
          << join(log.final_outcome.certificate) << "\n";
      return kInternal;
    }
    if (f.format != "machine") out << "replay ok: " << doc.at("events").size() << " events, certificate " << join(replay.certificate) << "\n";
  } else if (!f.out.empty() && f.format != "machine") {
    out << "wrote " << doc.at("events").size() << " events to " << f.out << "\n";
  }
  return kOk;
}

int cmd_validate(const Flags& f, std::ostream& out) {
  const Instance instance = read_instance_file(f.instance);
  const std::string digest = instance_digest(instance);
  if (f.format == "machine") {
    out << render(Json{{"valid", true}, {"kind", std::string(to_string(kind_of(instance)))}, {"digest", digest}});
  } else {
    out << "ok: " << to_string(kind_of(instance)) << " instance, digest " << digest << "\n";
  }
  return kOk;
}

int cmd_serve(const Flags& f, std::ostream& out) {
  Server server;
  const int port = server.bind(f.port);
  out << "serving on http://127.0.0.1:" << port << "\n" << std::flush;
  server.listen();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximation algorithm lab: solve, compare and trace classic NP-hard problems.", "approx-lab"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&f](CLI::App* sub, bool needs_algorithm, const std::string& input = "--instance") {
    sub->add_option(input, f.instance, "instance file")->required();
    auto* alg = sub->add_option("--algorithm", f.request.algorithm, "algorithm name");
    if (needs_algorithm) alg->required();
    sub->add_option("--epsilon", f.epsilon, "accuracy parameter for the FPTAS algorithms");
    sub->add_option("--root", f.request.root, "TSP root vertex");
    sub->add_flag("--force", f.request.force, "run TSP on costs that break the triangle inequality");
    sub->add_option("--seed", f.seed, "seed recorded in reports (batch: overrides the config seed)");
    sub->add_option("--out", f.out, "output file");
    sub->add_option("--format", f.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  };

  auto* solve_cmd = app.add_subcommand("solve", "run one algorithm on an instance");
  common(solve_cmd, true);
  auto* compare_cmd = app.add_subcommand("compare", "run an algorithm and its exact oracle, report the ratio");
  common(compare_cmd, true);
  auto* batch_cmd = app.add_subcommand("batch", "ratio statistics over generated instances");
  common(batch_cmd, true, "--instance,--config");
  batch_cmd->add_option("--threads", f.threads, "worker threads")->check(CLI::Range(1u, 256u));
  auto* trace_cmd = app.add_subcommand("trace", "record the step events of one run");
  common(trace_cmd, true);
  trace_cmd->add_flag("--verify-replay", f.verify_replay, "replay the trace and check the certificate");
  auto* validate_cmd = app.add_subcommand("validate", "check an instance file");
  common(validate_cmd, false);
  auto* serve_cmd = app.add_subcommand("serve", "local HTTP API on the loopback interface");
  serve_cmd->add_option("--port", f.port, "port (0 picks a free one)")->check(CLI::Range(0, 65535));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }

  try {
    f.request.epsilon = f.epsilon;
    f.request.seed = f.seed.value_or(0);
    if (solve_cmd->parsed()) return cmd_solve(f, out);
    if (compare_cmd->parsed()) return cmd_compare(f, out);
    if (batch_cmd->parsed()) return cmd_batch(f, out);
    if (trace_cmd->parsed()) return cmd_trace(f, out, err);
    if (validate_cmd->parsed()) return cmd_validate(f, out);
    return cmd_serve(f, out);
  } catch (...) {
    const auto error = std::current_exception();
    try {
      std::rethrow_exception(error);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
    } catch (...) {
      err << "error: unknown failure\n";
    }
    return exit_code_for(error);
  }
}

}  // namespace approx::cli
