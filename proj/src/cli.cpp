#include "circulant/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "circulant/classifier.hpp"
#include "circulant/error.hpp"
#include "circulant/serialization.hpp"

namespace circulant::cli {

namespace {

enum class Format { Json, Csv };

struct RunConfig {
  Index n = 0;
  std::string set;
  std::string pair;
  std::string lattice = "2piZ";
  std::optional<Index> qmin;
  std::optional<Index> qmax;
  std::optional<double> eps;
  std::optional<double> time;
  Index from = 0;
  std::optional<Index> to;
  std::string out_path;
  std::string format;
  unsigned threads = 0;
  bool verify = false;
  bool explain = false;
  Tolerances tol;
};

// Input problems detected before any computation: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kExamples =
    "examples:\n"
    "  circulant classify --n 16 --set 1,7,9,15\n"
    "  circulant scan --n 16 --set 1,2,3,4,12,13,14,15 --pair 0,8 --lattice 2piZ "
    "--qmin 7500 --qmax 8000 --out fig1.csv\n";

const char* example_for(const std::string& command) {
  if (command == "spectrum") return "circulant spectrum --n 8 --set 1,2,3,5,6,7";
  if (command == "classify") return "circulant classify --n 16 --set 1,7,9,15 --verify";
  if (command == "census") return "circulant census --n 16";
  if (command == "fidelity") return "circulant fidelity --n 4 --set 1,3 --from 0 --to 2 --time 1.5707963267948966";
  if (command == "search") return "circulant search --n 8 --set 1,7 --lattice 2piZ --qmax 100000";
  if (command == "scan") return "circulant scan --n 16 --set 1,3,4,12,13,15 --lattice oddHalfPi --qmin 0 --qmax 249 --out fig2.csv";
  return "circulant classify --n 16 --set 1,7,9,15";
}

CirculantGraph build_graph(const RunConfig& cfg) {
  try {
    return make_graph(cfg.n, parse_connection_set(cfg.set));
  } catch (const Error& e) {
    throw UsageError("--n/--set: " + std::string(e.what()));
  }
}

Format resolve_format(const RunConfig& cfg, Format fallback, bool csv_supported) {
  if (cfg.format.empty()) return fallback;
  if (cfg.format == "json") return Format::Json;
  if (cfg.format == "csv" && csv_supported) return Format::Csv;
  throw UsageError("--format: '" + cfg.format + "' not supported here");
}

VertexPair resolve_pair(const RunConfig& cfg) {
  if (cfg.pair.empty()) {
    if (cfg.n % 2 != 0) throw UsageError("--pair is required when n is odd");
    return {0, cfg.n / 2};
  }
  std::vector<Index> parts;
  try {
    parts = parse_connection_set(cfg.pair);
  } catch (const Error&) {
    parts.clear();
  }
  if (parts.size() != 2) throw UsageError("--pair: expected u,v but got '" + cfg.pair + "'");
  if (parts[0] < 0 || parts[0] >= cfg.n || parts[1] < 0 || parts[1] >= cfg.n) {
    throw UsageError("--pair: vertices must lie in 0.." + std::to_string(cfg.n - 1));
  }
  return {parts[0], parts[1]};
}

TimeLattice resolve_lattice(const RunConfig& cfg) {
  try {
    return TimeLattice::of(parse_lattice(cfg.lattice));
  } catch (const Error& e) {
    throw UsageError(std::string("--lattice: ") + e.what());
  }
}

QRange resolve_range(const RunConfig& cfg, TimeLattice lattice, Index default_last) {
  const QRange range{cfg.qmin.value_or(lattice.default_first()), cfg.qmax.value_or(default_last)};
  if (range.empty()) {
    throw UsageError("--qmin/--qmax: empty range [" + std::to_string(range.first) + ", " +
                     std::to_string(range.last) + "]");
  }
  return range;
}

void print_json(std::ostream& out, const Json& doc) { out << doc.dump() << '\n'; }

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto format = resolve_format(cfg, Format::Json, true);
  const auto graph = build_graph(cfg);
  const auto spec = spectrum(graph, cfg.tol.integrality);
  if (format == Format::Csv) {
    out << "l,eigenvalue\n";
    for (std::size_t l = 0; l < spec.values.size(); ++l) {
      out << l << ',' << format_double(spec.values[l]) << '\n';
    }
  } else {
    print_json(out, to_json(graph, spec));
  }
  return kExitOk;
}

Json classification_doc(const CirculantGraph& graph, const RunConfig& cfg) {
  const auto c = classify(graph, cfg.tol);
  Json doc = to_json(graph, c);
  if (cfg.explain) doc["hypotheses"] = to_json(theorem_hypotheses(graph, cfg.tol));
  if (cfg.verify) {
    VerificationBudget budget;
    budget.q_max = cfg.qmax.value_or(budget.q_max);
    budget.scan.threads = cfg.threads;
    doc["evidence"] = to_json(verify_classification(graph, c, budget));
  }
  return doc;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  resolve_format(cfg, Format::Json, false);
  const auto graph = build_graph(cfg);
  print_json(out, classification_doc(graph, cfg));
  return kExitOk;
}

int cmd_census(const RunConfig& cfg, std::ostream& out) {
  const auto format = resolve_format(cfg, Format::Json, true);
  std::vector<std::vector<Index>> sets;
  try {
    sets = symmetric_sets(cfg.n);
  } catch (const Error& e) {
    throw UsageError(std::string("--n: ") + e.what());
  }
  if (format == Format::Csv) {
    out << "n,set,verdict,citation,witness_divisor,lattice,numeric_caveat\n";
  }
  for (const auto& set : sets) {
    const CirculantGraph graph(cfg.n, set);
    const Json doc = classification_doc(graph, cfg);
    if (format == Format::Json) {
      print_json(out, doc);
      continue;
    }
    out << cfg.n << ",\"" << format_connection_set(set) << "\"," << doc["verdict"].get<std::string>()
        << ',' << doc["citation"].get<std::string>() << ','
        << (doc["witness_divisor"].is_null() ? std::string() : doc["witness_divisor"].dump())
        << ',' << (doc["lattice"].is_null() ? std::string() : doc["lattice"].get<std::string>())
        << ',' << (doc["numeric_caveat"].get<bool>() ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_fidelity(const RunConfig& cfg, std::ostream& out) {
  const auto format = resolve_format(cfg, Format::Json, true);
  const auto graph = build_graph(cfg);
  const Index to = cfg.to.value_or(cfg.n / 2);
  if (cfg.from < 0 || cfg.from >= cfg.n || to < 0 || to >= cfg.n) {
    throw UsageError("--from/--to: vertices must lie in 0.." + std::to_string(cfg.n - 1));
  }
  const double t = *cfg.time;
  const Amplitude a = transition_entry(graph, cfg.from, to, t);
  const TransferRecord record{t, std::nullopt, a, std::abs(a)};
  if (format == Format::Csv) {
    emit_scan_csv(std::span(&record, 1), out);
  } else {
    print_json(out, to_json(record));
  }
  return kExitOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  const auto format = resolve_format(cfg, Format::Json, true);
  const auto graph = build_graph(cfg);
  const auto pair = resolve_pair(cfg);
  const auto lattice = resolve_lattice(cfg);
  const auto range = resolve_range(cfg, lattice, 100'000);
  if (cfg.eps && !(*cfg.eps > 0.0 && *cfg.eps < 1.0)) throw UsageError("--eps must lie in (0, 1)");

  ScanOptions options;
  options.threads = cfg.threads;
  const QuantumWalk walk(graph);
  std::optional<TransferRecord> found;
  if (cfg.eps) found = first_time_above(walk, pair, lattice, range, 1.0 - *cfg.eps, options);
  const TransferRecord best =
      found ? *found : best_time_on_lattice(walk, pair, lattice, range, options);

  if (format == Format::Csv) {
    emit_scan_csv(std::span(&best, 1), out);
  } else {
    Json doc = to_json(best);
    doc["lattice"] = std::string(to_string(lattice.kind));
    doc["pair"] = {pair.u, pair.v};
    doc["qmin"] = range.first;
    doc["qmax"] = range.last;
    if (cfg.eps) doc["reached_threshold"] = found.has_value();
    print_json(out, doc);
  }
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const auto format = resolve_format(cfg, Format::Csv, true);
  const auto graph = build_graph(cfg);
  const auto pair = resolve_pair(cfg);
  const auto lattice = resolve_lattice(cfg);
  if (!cfg.qmax) throw UsageError("--qmax is required for scan");
  const auto range = resolve_range(cfg, lattice, *cfg.qmax);
  if (range.size() > kDefaultScanCap) {
    throw UsageError("--qmin/--qmax: range of " + std::to_string(range.size()) +
                     " exceeds the cap " + std::to_string(kDefaultScanCap));
  }

  ScanOptions options;
  options.threads = cfg.threads;
  const auto records = scan_lattice(graph, pair, lattice, range, options);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(Errc::IoError, "cannot open " + cfg.out_path + " for writing");
    sink = &file;
  }
  if (format == Format::Csv) {
    emit_scan_csv(records, *sink);
  } else {
    Json rows = Json::array();
    for (const auto& r : records) rows.push_back(to_json(r));
    *sink << rows.dump() << '\n';
    sink->flush();
    if (!*sink) throw Error(Errc::IoError, "failed writing " + cfg.out_path);
  }
  return kExitOk;
}

}  // namespace

Tolerances parse_tolerances(std::string_view text, Tolerances base) {
  auto number = [&](std::string_view token) {
    std::string s(token);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0' || !(v > 0.0)) {
      throw Error(Errc::ParseError, "CIRCULANT_TOL: bad tolerance '" + s + "'");
    }
    return v;
  };
  if (text.find('=') == std::string_view::npos) {
    const double v = number(text);
    return {v, v};
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::ParseError, "CIRCULANT_TOL: expected key=value, got '" +
                                        std::string(item) + "'");
    }
    const auto key = item.substr(0, eq);
    const double value = number(item.substr(eq + 1));
    if (key == "integrality") {
      base.integrality = value;
    } else if (key == "equality") {
      base.equality = value;
    } else {
      throw Error(Errc::ParseError, "CIRCULANT_TOL: unknown key '" + std::string(key) + "'");
    }
    pos = comma + 1;
  }
  return base;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous-time quantum walks on circulant graphs", "circulant"};
  app.require_subcommand(1);
  app.footer(kExamples);

  RunConfig cfg;
  auto add_graph_flags = [&](CLI::App* sub, bool needs_set) {
    sub->add_option("--n", cfg.n, "number of vertices")->required();
    auto* set = sub->add_option("--set", cfg.set, "connection set, e.g. 1,7,9,15");
    if (needs_set) set->required();
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_lattice_flags = [&](CLI::App* sub) {
    sub->add_option("--pair", cfg.pair, "vertex pair u,v (default 0,n/2)");
    sub->add_option("--lattice", cfg.lattice, "2piZ or oddHalfPi");
    sub->add_option("--qmin", cfg.qmin, "first lattice index (inclusive)");
    sub->add_option("--qmax", cfg.qmax, "last lattice index (inclusive)");
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues in Fourier order");
  add_graph_flags(spectrum_cmd, true);
  add_format(spectrum_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "decide PST / PGST for the antipodal pair");
  add_graph_flags(classify_cmd, true);
  add_format(classify_cmd);
  classify_cmd->add_flag("--verify", cfg.verify, "attach search evidence");
  classify_cmd->add_flag("--explain", cfg.explain, "attach the hypothesis report");
  classify_cmd->add_option("--qmax", cfg.qmax, "search budget for --verify");

  auto* census_cmd = app.add_subcommand("census", "classify every symmetric set (JSON lines)");
  census_cmd->add_option("--n", cfg.n, "number of vertices")->required();
  census_cmd->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  census_cmd->add_flag("--verify", cfg.verify, "attach search evidence");
  census_cmd->add_flag("--explain", cfg.explain, "attach the hypothesis report");
  census_cmd->add_option("--qmax", cfg.qmax, "search budget for --verify");
  add_format(census_cmd);

  auto* fidelity_cmd = app.add_subcommand("fidelity", "one transition amplitude");
  add_graph_flags(fidelity_cmd, true);
  add_format(fidelity_cmd);
  fidelity_cmd->add_option("--from", cfg.from, "source vertex (default 0)");
  fidelity_cmd->add_option("--to", cfg.to, "target vertex (default n/2)");
  fidelity_cmd->add_option("--time", cfg.time, "time t")->required();

  auto* search_cmd = app.add_subcommand("search", "best lattice time for a pair");
  add_graph_flags(search_cmd, true);
  add_format(search_cmd);
  add_lattice_flags(search_cmd);
  search_cmd->add_option("--eps", cfg.eps, "stop at the first q with fidelity >= 1 - eps");

  auto* scan_cmd = app.add_subcommand("scan", "fidelity at every lattice time (CSV)");
  add_graph_flags(scan_cmd, true);
  add_format(scan_cmd);
  add_lattice_flags(scan_cmd);
  scan_cmd->add_option("--out", cfg.out_path, "output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string example = "circulant classify --n 16 --set 1,7,9,15";
    for (const auto* sub : app.get_subcommands()) example = example_for(sub->get_name());
    err << "error: " << e.what() << "\nexample: " << example << '\n';
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (const char* env = std::getenv("CIRCULANT_TOL"); env && *env) {
      cfg.tol = parse_tolerances(env, cfg.tol);
    }
    if (command == "spectrum") return cmd_spectrum(cfg, out);
    if (command == "classify") return cmd_classify(cfg, out);
    if (command == "census") return cmd_census(cfg, out);
    if (command == "fidelity") return cmd_fidelity(cfg, out);
    if (command == "search") return cmd_search(cfg, out);
    if (command == "scan") return cmd_scan(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nexample: " << example_for(command) << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) {
      err << "error: " << e.what() << "\nexample: " << example_for(command) << '\n';
      return kExitUsage;
    }
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace circulant::cli
