#include "ineqforge_cli/commands.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ineqforge/catalog.hpp"
#include "ineqforge/equality_scan.hpp"
#include "ineqforge/falsifier.hpp"
#include "ineqforge_cli/jsonl.hpp"

namespace ineqforge::cli {

namespace {

struct Options {
  std::string ineq = "all";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::string dims = "2..6";
  std::string field;
  std::string gram = "identity";
  std::string out_path;
  std::string csv_path;
  bool emit_instances = false;
  int ascent_steps = 0;
  double step = 1e-2;
  double fd_eps = 1e-6;
  double eps = 0.05;
};

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::pair<int, int> parse_dims(const std::string& s) {
  const auto fail = [&]() -> std::pair<int, int> {
    throw UsageError("--dims expects A..B, got '" + s + "'");
  };
  const auto to_int = [&](const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) fail();
    return std::stoi(t);
  };
  const auto pos = s.find("..");
  if (pos == std::string::npos) {
    const int d = to_int(s);
    return {d, d};
  }
  return {to_int(s.substr(0, pos)), to_int(s.substr(pos + 2))};
}

FieldMode parse_field(const std::string& s) {
  if (s == "real") return FieldMode::Real;
  if (s == "complex") return FieldMode::Complex;
  if (s == "both") return FieldMode::Both;
  throw UsageError("--field expects real|complex|both, got '" + s + "'");
}

GramMode parse_gram(const std::string& s) {
  if (s == "identity") return GramMode::Identity;
  if (s == "random") return GramMode::Random;
  throw UsageError("--gram expects identity|random, got '" + s + "'");
}

SearchConfig make_config(const Options& o, FieldMode default_field) {
  SearchConfig c;
  c.seed = o.seed;
  c.trials = o.samples;
  std::tie(c.dim_lo, c.dim_hi) = parse_dims(o.dims);
  c.ascent_steps = o.ascent_steps;
  c.step_size = o.step;
  c.fd_eps = o.fd_eps;
  c.field = o.field.empty() ? default_field : parse_field(o.field);
  c.gram = parse_gram(o.gram);
  c.validate();
  return c;
}

std::string name_list() {
  std::string s;
  for (const auto n : kCatalogNames) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s;
}

/// Catalog entries selected by --ineq, honouring the field restriction.
template <typename Pred>
std::vector<std::string> select(const std::string& ineq, FieldMode field, Pred available,
                                std::string_view what) {
  std::vector<std::string> out;
  if (ineq == "all") {
    for (const auto n : kCatalogNames) {
      if (!available(n)) continue;
      if (field == FieldMode::Complex && !entry_info(n).permits_complex) continue;
      out.emplace_back(n);
    }
    return out;
  }
  if (!is_catalog_name(ineq)) {
    throw UsageError("unknown inequality '" + ineq + "'; known: " + name_list());
  }
  if (!available(ineq)) throw UsageError(std::string(what) + " does not support " + ineq);
  if (field == FieldMode::Complex && !entry_info(ineq).permits_complex) {
    throw UsageError(ineq + " is stated over real spaces; use --field real");
  }
  out.push_back(ineq);
  return out;
}

std::string config_json(const SearchConfig& c) {
  return JsonObject()
      .field("seed", c.seed)
      .field("trials", c.trials)
      .raw("dims", "[" + std::to_string(c.dim_lo) + "," + std::to_string(c.dim_hi) + "]")
      .field("ascent_steps", c.ascent_steps)
      .field("step_size", c.step_size)
      .field("fd_eps", c.fd_eps)
      .field("field", to_string(c.field))
      .field("gram", to_string(c.gram))
      .str();
}

std::string manifest(std::string_view command, const SearchConfig& c, const std::string& started,
                     const std::string& totals) {
  return JsonObject()
      .field("type", "manifest")
      .field("command", command)
      .raw("config", config_json(c))
      .field("catalog_version", kCatalogVersion)
      .field("started_at", started)
      .field("finished_at", utc_now())
      .raw("totals", totals)
      .str();
}

/// Stream for data lines: --out file when given, else stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string instance_line(const std::string& ineq, std::uint64_t seed, const TrialRecord& r) {
  JsonObject j;
  j.field("ineq", ineq).field("dim", r.dim).field("field", to_string(r.field)).field("seed", seed);
  j.field("digest", r.outcome.digest);
  if (r.outcome.links.empty()) {
    j.null_field("lhs").null_field("center").null_field("rhs");
    j.null_field("margin_lower").null_field("margin_upper");
  } else {
    const auto& l = r.outcome.links[r.outcome.worst_link()];
    j.field("lhs", l.lhs).field("center", l.center).field("rhs", l.rhs);
    j.field("margin_lower", l.margin_lower).field("margin_upper", l.margin_upper);
  }
  return j.field("holds", !r.violation).field("near_equality", r.outcome.near_equality()).str();
}

std::string summary_line(const SearchReport& r) {
  std::string hist = "[";
  for (std::size_t i = 0; i < r.margin_histogram.size(); ++i) {
    if (i) hist += ',';
    hist += std::to_string(r.margin_histogram[i]);
  }
  hist += "]";
  return JsonObject()
      .field("type", "summary")
      .field("ineq", r.ineq)
      .field("trials", r.trials_run)
      .field("violations", r.violation_count)
      .field("near_equality", r.near_equality_count)
      .field("roundoff_reclassified", r.roundoff_reclassified)
      .field("vacuous", r.vacuous_count)
      .field("worst_margin", r.worst_margin)
      .field("worst_instance_digest", r.worst_instance_digest)
      .raw("margin_histogram", hist)
      .str();
}

int cmd_search(std::string_view command, const Options& o, std::ostream& out) {
  const std::string started = utc_now();
  const SearchConfig config = make_config(o, FieldMode::Both);
  const auto names = select(o.ineq, config.field, [](std::string_view) { return true; }, command);
  Sink sink(o.out_path, out);
  std::ostringstream csv;
  csv << "ineq,trials,violations,near_equality,worst_margin\n";
  JsonObject totals;
  bool violated = false;
  RunOptions run;
  run.keep_records = o.emit_instances;
  for (const auto& name : names) {
    const FalsifyResult res = falsify(name, config, run);
    for (const auto& r : res.records) sink.get() << instance_line(name, config.seed, r) << '\n';
    sink.get() << summary_line(res.report) << '\n';
    const SearchReport& rep = res.report;
    csv << rep.ineq << ',' << rep.trials_run << ',' << rep.violation_count << ','
        << rep.near_equality_count << ',' << format_double(rep.worst_margin) << '\n';
    totals.raw(name, JsonObject()
                         .field("trials", rep.trials_run)
                         .field("violations", rep.violation_count)
                         .field("near_equality", rep.near_equality_count)
                         .str());
    violated = violated || rep.violation_count > 0;
  }
  sink.get().flush();
  if (!o.csv_path.empty()) {
    std::ofstream f(o.csv_path);
    if (!f) throw UsageError("cannot open " + o.csv_path);
    f << csv.str();
  }
  out << manifest(command, config, started, totals.str()) << '\n';
  return violated ? kExitViolation : kExitPass;
}

int cmd_equality(const Options& o, std::ostream& out) {
  const std::string started = utc_now();
  const SearchConfig config = make_config(o, FieldMode::Both);
  const auto names = select(o.ineq, config.field, has_equality_scan, "equality");
  Sink sink(o.out_path, out);
  JsonObject totals;
  bool all_pass = true;
  for (const auto& name : names) {
    const EqualityScanReport rep = scan_equality(name, config);
    JsonObject j;
    j.field("type", "equality")
        .field("ineq", rep.ineq)
        .field("samples", rep.samples)
        .field("passed", rep.passed)
        .field("failed", rep.failed)
        .field("max_relative_margin", rep.max_relative_margin)
        .field("max_lambda_error", rep.max_lambda_error);
    if (rep.failed > 0) j.field("first_failure_digest", rep.first_failure_digest);
    sink.get() << j.str() << '\n';
    totals.raw(name,
               JsonObject().field("samples", rep.samples).field("passed", rep.passed).str());
    all_pass = all_pass && rep.failed == 0;
  }
  sink.get().flush();
  out << manifest("equality", config, started, totals.str()) << '\n';
  return all_pass ? kExitPass : kExitViolation;
}

int cmd_moore_complex(const Options& o, std::ostream& out) {
  const std::string started = utc_now();
  if (!(o.eps > 0 && o.eps < 1)) throw UsageError("--eps must lie in (0, 1)");
  const SearchConfig config = make_config(o, FieldMode::Complex);
  const MooreComplexReport rep = moore_complex_experiment(o.eps, config);
  Sink sink(o.out_path, out);
  JsonObject j;
  j.field("type", "moore_complex")
      .field("eps", rep.eps)
      .field("samples_satisfying_premises", rep.samples_satisfying_premises)
      .field("min_observed_ratio", rep.min_observed_ratio)
      .field("min_ratio_digest", rep.min_ratio_digest)
      .field("first_bound", rep.first_bound)
      .field("second_bound", rep.second_bound)
      .field("first_bound_vacuous", rep.first_bound_vacuous)
      .field("second_bound_respected", rep.second_bound_respected)
      .field("refined_candidates", rep.refined_candidates)
      .field("verdict", to_string(rep.verdict));
  if (rep.witness_digest) {
    j.field("witness_digest", *rep.witness_digest);
  } else {
    j.null_field("witness_digest");
  }
  sink.get() << j.str() << '\n';
  sink.get().flush();
  const std::string totals =
      JsonObject().field("samples", rep.samples_satisfying_premises).str();
  out << manifest("moore-complex", config, started, totals) << '\n';
  return rep.verdict == MooreVerdict::CounterexampleFound ? kExitFinding : kExitPass;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--ineq", o.ineq, "Inequality name or 'all'");
  sub->add_option("--samples,--trials", o.samples, "Number of instances");
  sub->add_option("--seed", o.seed, "Base seed");
  sub->add_option("--dims", o.dims, "Inclusive dimension range A..B");
  sub->add_option("--field", o.field, "real|complex|both");
  sub->add_option("--gram", o.gram, "identity|random");
  sub->add_option("--out", o.out_path, "Write data lines to this file");
}

void add_ascent(CLI::App* sub, Options& o) {
  sub->add_option("--ascent-steps", o.ascent_steps, "Local ascent steps per trial");
  sub->add_option("--step", o.step, "Initial ascent step size");
  sub->add_option("--fd-eps", o.fd_eps, "Finite-difference step");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomized verification of inner product space inequalities", "ineq_forge"};
  app.require_subcommand(1);

  Options verify, falsify_opts, equality, moore;
  falsify_opts.ascent_steps = 100;
  moore.ascent_steps = 50;

  auto* v = app.add_subcommand("verify", "Sample instances and check every inequality");
  add_common(v, verify);
  add_ascent(v, verify);
  v->add_option("--csv", verify.csv_path, "Write a CSV summary");
  v->add_flag("--emit-instances", verify.emit_instances, "One JSON line per instance");

  auto* f = app.add_subcommand("falsify", "Sample and locally refine toward violation");
  add_common(f, falsify_opts);
  add_ascent(f, falsify_opts);
  f->add_option("--csv", falsify_opts.csv_path, "Write a CSV summary");
  f->add_flag("--emit-instances", falsify_opts.emit_instances, "One JSON line per instance");

  auto* e = app.add_subcommand("equality", "Round-trip constructed equality instances");
  add_common(e, equality);

  auto* m = app.add_subcommand("moore-complex", "Probe the first Moore bound over C");
  add_common(m, moore);
  add_ascent(m, moore);
  m->add_option("--eps", moore.eps, "Premise parameter in (0, 1)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& ex) {
    err << "ineq_forge: " << ex.what() << '\n';
    if (app.get_subcommands().empty()) err << app.help();
    return kExitUsage;
  }

  try {
    if (v->parsed()) return cmd_search("verify", verify, out);
    if (f->parsed()) return cmd_search("falsify", falsify_opts, out);
    if (e->parsed()) return cmd_equality(equality, out);
    if (m->parsed()) return cmd_moore_complex(moore, out);
  } catch (const UsageError& ex) {
    err << "ineq_forge: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const Error& ex) {
    err << "ineq_forge: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ineqforge::cli
