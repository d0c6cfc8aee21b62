#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "avdc/avd.hpp"
#include "avdc/errors.hpp"
#include "avdc/generators.hpp"
#include "avdc/graph_io.hpp"
#include "avdc/partition.hpp"
#include "avdc/serialize.hpp"
#include "avdc/verify.hpp"

namespace avdc::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kDefaultDump = "counterexample.json";

struct Settings {
  std::string input;
  std::string format;
  std::string out;
  std::string trace;
  std::uint64_t seed = 1;
  std::uint64_t budget_cap = 0;
  int oracle_edge_cap = kDefaultOracleEdgeCap;
  int jobs = 1;
  bool json = false;
  // verify
  std::string certificate;
  // gen
  std::string family;
  std::vector<std::string> params;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  return read_all(file);
}

GraphFormat graph_format(const Settings& s, std::string_view text) {
  if (s.format.empty()) return sniff_format(text);
  auto f = format_from_name(s.format);
  if (!f) throw UsageError("unknown format " + s.format);
  return *f;
}

Graph load_graph(const Settings& s, const std::string& path, std::istream& in) {
  std::string text = read_source(path, in);
  return parse_graph(text, graph_format(s, text));
}

// Writes to --out when given, else to the stream.
void emit(const Settings& s, const std::string& text, std::ostream& fallback) {
  if (s.out.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(s.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + s.out);
  file << text;
}

ColorOptions color_options(const Settings& s, std::ostream* trace) {
  ColorOptions o;
  o.seed = s.seed;
  if (s.budget_cap > 0) {
    o.final_cap = s.budget_cap;
    o.probe_cap = std::min(o.probe_cap, s.budget_cap);
  }
  o.engine.trace = trace;
  return o;
}

int cmd_color(const Settings& s, bool regular, std::istream& in, std::ostream& out,
              std::ostream& err, std::ostream* trace) {
  Graph g = load_graph(s, s.input, in);
  ColorOptions o = color_options(s, trace);
  AvdCertificate cert = regular ? avd_color_regular(g, o) : avd_color(g, o);
  const bool ok = all_pass(verify_certificate(g, cert));
  emit(s, certificate_to_json(g, cert), out);
  std::ostream& summary = s.out.empty() ? err : out;
  summary << "colors=" << cert.colors_used << " bound=" << cert.bound_claimed << '\n';
  return ok ? kOk : kCheckFailed;
}

PartitionSection section(std::string name, const EdgePartition& p,
                         std::vector<CheckEntry> checks) {
  return {std::move(name), p.parts(), std::move(checks)};
}

int cmd_partition(const Settings& s, bool regular, std::istream& in, std::ostream& out,
                  std::ostream& err, std::ostream* trace) {
  Graph g = load_graph(s, s.input, in);
  std::vector<PartitionSection> sections;
  if (regular) {
    EdgePartition p = partition_regular(g);
    sections.push_back(section("regular", p, check_partition_regular(g, p.parts())));
  } else {
    EngineOptions engine;
    engine.trace = trace;
    if (g.max_degree() >= 6) {
      EdgePartition p1 = partition_p1(g, engine);
      sections.push_back(section("p1", p1, check_partition_p1(g, p1.parts())));
    }
    EdgePartition p2 = partition_p2(g, engine);
    sections.push_back(section("p2", p2, check_partition_p2(g, p2.parts())));
  }
  emit(s, partition_to_json(g, sections), out);
  bool ok = true;
  std::ostream& report = s.out.empty() ? err : out;
  for (const auto& sec : sections) {
    report << sec.name << ": parts=" << sec.parts.size() << " max_degrees=";
    for (std::size_t i = 0; i < sec.parts.size(); ++i)
      report << (i ? "," : "") << EdgePartition(g, sec.parts).part_max_degree(i);
    report << " checks=" << (all_pass(sec.checks) ? "pass" : "FAIL") << '\n';
    ok = ok && all_pass(sec.checks);
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_oracle(const Settings& s, std::istream& in, std::ostream& out) {
  Graph g = load_graph(s, s.input, in);
  auto k = exact_chi_a(g, 0, s.oracle_edge_cap);
  if (!k) throw InternalError("oracle: no AVD colouring within |E| colours");
  out << *k << '\n';
  return kOk;
}

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("expected an integer for ") + what + ", got " + text);
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("expected a number for ") + what + ", got " + text);
}

int cmd_gen(const Settings& s, std::ostream& out) {
  auto need = [&](std::size_t k) {
    if (s.params.size() != k)
      throw UsageError("gen " + s.family + " takes " + std::to_string(k) + " parameter(s)");
  };
  Graph g;
  if (s.family == "cycle") {
    need(1);
    g = cycle_graph(parse_int(s.params[0], "n"));
  } else if (s.family == "complete") {
    need(1);
    g = complete_graph(parse_int(s.params[0], "n"));
  } else if (s.family == "petersen") {
    need(0);
    g = petersen_graph();
  } else if (s.family == "regular") {
    need(2);
    g = random_regular_graph(parse_int(s.params[0], "n"), parse_int(s.params[1], "r"), s.seed);
  } else if (s.family == "gnp") {
    need(2);
    g = gnp_graph(parse_int(s.params[0], "n"), parse_double(s.params[1], "p"), s.seed);
  } else {
    throw UsageError("unknown family " + s.family +
                     " (cycle, complete, petersen, regular, gnp)");
  }
  GraphFormat f = GraphFormat::Graph6;
  if (!s.format.empty()) {
    auto named = format_from_name(s.format);
    if (!named) throw UsageError("unknown format " + s.format);
    f = *named;
  }
  emit(s, emit_graph(g, f), out);
  return kOk;
}

int cmd_verify(const Settings& s, std::istream& in, std::ostream& out) {
  Graph g = load_graph(s, s.input, in);
  std::string text = read_source(s.certificate, in);
  CertificateDocument doc = certificate_from_json(g, text);
  std::vector<CheckEntry> checks;
  std::string detail;
  for (const EdgeId& e : doc.foreign_edges)
    detail += "non-edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + "; ";
  for (const EdgeId& e : doc.repeated_edges)
    detail += "repeated " + std::to_string(e.u) + "-" + std::to_string(e.v) + "; ";
  checks.push_back({"edges match graph", detail.empty(), detail});
  for (auto& c : verify_certificate(g, doc.certificate)) checks.push_back(std::move(c));
  std::string report = checks_to_text(checks);
  report += std::string("verify ") + (all_pass(checks) ? "PASS" : "FAIL") + '\n';
  emit(s, report, out);
  return all_pass(checks) ? kOk : kCheckFailed;
}

std::vector<fs::path> audit_inputs(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

int cmd_audit(const Settings& s, std::istream& in, std::ostream& out, std::ostream* trace) {
  AuditOptions options;
  options.oracle_edge_cap = s.oracle_edge_cap;
  options.color = color_options(s, trace);
  auto render = [&](const AuditReport& r) { return s.json ? audit_to_json(r) : audit_to_text(r); };

  if (s.input.empty() || s.input == "-" || !fs::is_directory(s.input)) {
    AuditReport r = audit(load_graph(s, s.input, in), options);
    emit(s, render(r), out);
    return r.pass() ? kOk : kCheckFailed;
  }

  // Directory mode: one report per file, merged in path order.
  const auto files = audit_inputs(s.input);
  std::vector<std::string> rendered(files.size());
  std::vector<char> passed(files.size(), 0);
  AuditOptions quiet = options;
  quiet.color.engine.trace = nullptr;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      try {
        std::ifstream file(files[i], std::ios::binary);
        std::string text = read_all(file);
        AuditReport r = audit(parse_graph(text, graph_format(s, text)), quiet);
        rendered[i] = render(r);
        passed[i] = r.pass();
      } catch (const std::exception& e) {
        rendered[i] = std::string("error ") + e.what() + '\n';
      }
    }
  };
  const int jobs = std::max(1, s.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::string all;
  for (std::size_t i = 0; i < files.size(); ++i)
    all += "== " + files[i].filename().string() + '\n' + rendered[i];
  const bool ok = std::all_of(passed.begin(), passed.end(), [](char p) { return p != 0; });
  all += std::string("audit ") + std::to_string(files.size()) + " files " +
         (ok ? "PASS" : "FAIL") + '\n';
  emit(s, all, out);
  return ok ? kOk : kCheckFailed;
}

void add_common(CLI::App* sub, Settings& s, bool input = true) {
  if (input) sub->add_option("input", s.input, "Graph file (stdin when omitted or -)");
  sub->add_option("--format", s.format, "graph6, dimacs or edgelist (sniffed when omitted)");
  sub->add_option("--out", s.out, "Write the main output here");
  sub->add_option("--seed", s.seed, "Seed for generators and search restarts");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Settings s;
  CLI::App app{"Adjacent vertex distinguishing edge colouring toolkit", "avdc"};
  app.require_subcommand(1, 1);

  auto with_search = [&](CLI::App* sub) {
    sub->add_option("--budget-cap", s.budget_cap, "Node cap for the exact search at the guaranteed budget");
    sub->add_option("--trace", s.trace, "Stream the partition move log here");
  };
  auto* color = app.add_subcommand("color", "AVD colouring within floor(5(D+2)/2)");
  add_common(color, s);
  with_search(color);
  auto* color_regular = app.add_subcommand("color-regular", "AVD colouring of a regular graph");
  add_common(color_regular, s);
  with_search(color_regular);
  auto* partition = app.add_subcommand("partition", "Split into a max-degree-3 part and the rest");
  add_common(partition, s);
  partition->add_option("--trace", s.trace, "Stream the move log here");
  auto* partition_regular = app.add_subcommand("partition-regular", "Group colour classes of a regular graph");
  add_common(partition_regular, s);
  auto* oracle = app.add_subcommand("oracle", "Exact AVD chromatic index by exhaustive search");
  add_common(oracle, s);
  oracle->add_option("--oracle-edge-cap", s.oracle_edge_cap, "Largest edge count searched");
  auto* gen = app.add_subcommand("gen", "Write a generated graph");
  gen->add_option("family", s.family, "cycle N | complete N | petersen | regular N R | gnp N P")->required();
  gen->add_option("params", s.params, "Family parameters");
  add_common(gen, s, false);
  auto* verify = app.add_subcommand("verify", "Re-validate a certificate against a graph");
  verify->add_option("graph", s.input, "Graph file")->required();
  verify->add_option("certificate", s.certificate, "Certificate file (stdin when -)")->required();
  verify->add_option("--format", s.format, "Graph format (sniffed when omitted)");
  verify->add_option("--out", s.out, "Write the report here");
  auto* audit_cmd = app.add_subcommand("audit", "Run every check on a graph or a directory of graphs");
  add_common(audit_cmd, s);
  with_search(audit_cmd);
  audit_cmd->add_option("--oracle-edge-cap", s.oracle_edge_cap, "Largest edge count for exact oracles");
  audit_cmd->add_option("--jobs", s.jobs, "Worker threads for directory input");
  audit_cmd->add_flag("--json", s.json, "JSON report instead of text");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream trace_file;
  std::ostream* trace = nullptr;
  if (!s.trace.empty()) {
    trace_file.open(s.trace, std::ios::binary);
    if (!trace_file) {
      err << "error: cannot write " << s.trace << '\n';
      return kUsage;
    }
    trace = &trace_file;
  }

  try {
    if (color->parsed()) return cmd_color(s, false, in, out, err, trace);
    if (color_regular->parsed()) return cmd_color(s, true, in, out, err, trace);
    if (partition->parsed()) return cmd_partition(s, false, in, out, err, trace);
    if (partition_regular->parsed()) return cmd_partition(s, true, in, out, err, nullptr);
    if (oracle->parsed()) return cmd_oracle(s, in, out);
    if (gen->parsed()) return cmd_gen(s, out);
    if (verify->parsed()) return cmd_verify(s, in, out);
    if (audit_cmd->parsed()) return cmd_audit(s, in, out, trace);
  } catch (const CounterexampleFound& e) {
    std::string path = s.trace.empty() ? kDefaultDump : s.trace;
    if (trace) {
      *trace << e.dump() << '\n';
      trace->flush();
    } else {
      std::ofstream dump(path, std::ios::binary);
      dump << e.dump() << '\n';
    }
    err << "counterexample: " << e.what() << "\ndump: " << path << '\n';
    return kCounterexample;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace avdc::cli
