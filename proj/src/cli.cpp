#include "conncert/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "conncert/certify.hpp"
#include "conncert/corpus.hpp"
#include "conncert/error.hpp"
#include "conncert/graph6.hpp"
#include "conncert/report_json.hpp"
#include "conncert/spectra.hpp"
#include "conncert/verify.hpp"

namespace conncert {

namespace {

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SharedFlags {
  bool json = false;
  int threads = 0;
  std::uint64_t seed = 1;
  bool seed_given = false;
  double eps = kDefaultEpsilon;
};

// Where single-graph subcommands read from. Precedence: --named, --g6, file, stdin.
struct InputFlags {
  std::string named;
  std::string g6;
  std::string path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--named", named, "Named family, e.g. petersen or cycle:5");
    cmd->add_option("--g6", g6, "Inline graph6 string");
    cmd->add_option("file", path, "File of graph6 lines (default: stdin)");
  }

  std::vector<Graph> load() const {
    const int given = !named.empty() + !g6.empty() + !path.empty();
    if (given > 1) throw UsageError("give exactly one of --named, --g6 or a file");
    if (!named.empty()) return {named_from_string(named)};
    if (!g6.empty()) return {parse_graph6(g6)};
    auto graphs = path.empty() ? read_graph6_stream(std::cin) : read_graph6_file(path);
    if (graphs.empty()) throw UsageError("no graphs in input");
    return graphs;
  }
};

std::string fixed6(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", v);
  return buffer;
}

std::string sig9(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g", v);
  return buffer;
}

std::string opt_fixed(const std::optional<double>& v) { return v ? fixed6(*v) : "-"; }
std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

void kv(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(12) << key << value << '\n';
}

void print_json(std::ostream& out, const nlohmann::json& j, bool many) { out << (many ? j.dump() : j.dump(2)) << '\n'; }

void print_facts(std::ostream& out, const std::string& graph6, const GraphFacts& f) {
  kv(out, "graph6", graph6);
  kv(out, "n", std::to_string(f.n));
  kv(out, "m", std::to_string(f.m));
  kv(out, "delta", std::to_string(f.delta));
  kv(out, "max_degree", std::to_string(f.max_degree));
  kv(out, "girth", f.girth.to_string());
  kv(out, "omega", std::to_string(f.omega));
  kv(out, "connected", f.connected ? "yes" : "no");
  kv(out, "kappa", opt_int(f.kappa));
  kv(out, "kappa'", opt_int(f.kappa_edge));
  kv(out, "mu_{n-1}", opt_fixed(f.mu));
  kv(out, "mu_1", opt_fixed(f.mu1));
  kv(out, "lambda_2", opt_fixed(f.lambda2));
  kv(out, "q_2", opt_fixed(f.q2));
}

std::string fired_list(const Certificate& cert) {
  std::string s;
  for (const auto& row : cert.rows) {
    if (!row.fired()) continue;
    if (!s.empty()) s += ",";
    s += to_string(row.theorem);
  }
  return s.empty() ? "-" : s;
}

void print_rows(std::ostream& out, const Certificate& cert) {
  out << std::left << std::setw(26) << "theorem" << std::setw(14) << "status" << std::setw(14) << "threshold"
      << std::setw(14) << "observed" << "margin\n";
  for (const auto& row : cert.rows) {
    out << std::left << std::setw(26) << to_string(row.theorem) << std::setw(14) << to_string(row.status)
        << std::setw(14) << opt_fixed(row.threshold) << std::setw(14) << opt_fixed(row.observed)
        << opt_fixed(row.margin);
    if (!row.reason.empty()) out << "  (" << row.reason << ")";
    out << '\n';
  }
}

int cmd_analyze(const SharedFlags& shared, const InputFlags& input, std::ostream& out) {
  const auto graphs = input.load();
  RowOptions ro;
  ro.eps = shared.eps;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const AnalysisReport report = analyze(graphs[i], ro);
    if (shared.json) {
      print_json(out, to_json(report), graphs.size() > 1);
      continue;
    }
    if (i > 0) out << '\n';
    print_facts(out, report.graph6, report.facts);
    if (report.certificates.empty()) continue;
    out << '\n'
        << std::left << std::setw(4) << "k" << std::setw(8) << "target" << std::setw(15) << "verdict" << std::setw(8)
        << "oracle" << "fired\n";
    for (const auto& cert : report.certificates) {
      out << std::left << std::setw(4) << cert.k << std::setw(8) << to_string(cert.target) << std::setw(15)
          << (cert.certified ? "certified" : "not certified") << std::setw(8)
          << (cert.oracle ? std::to_string(cert.oracle->value) : "-") << fired_list(cert) << '\n';
    }
  }
  return 0;
}

struct CertifyFlags {
  bool edge = false;
  bool vertex = false;
  int k = 0;
  bool oracle = false;
  std::optional<int> r_override;
};

int cmd_certify(const SharedFlags& shared, const InputFlags& input, const CertifyFlags& flags, std::ostream& out) {
  if (flags.edge == flags.vertex) throw UsageError("give exactly one of --edge or --vertex");
  const Target target = flags.edge ? Target::Edge : Target::Vertex;
  const auto graphs = input.load();
  CertifyOptions options;
  options.with_oracle = flags.oracle;
  options.rows.eps = shared.eps;
  options.rows.r_override = flags.r_override;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const GraphFacts facts = compute_facts(graphs[i], flags.oracle);
    const Certificate cert = certify(facts, target, flags.k, options);
    const std::string g6 = write_graph6(graphs[i]);
    if (shared.json) {
      print_json(out, to_json(cert, facts, g6), graphs.size() > 1);
      continue;
    }
    if (i > 0) out << '\n';
    kv(out, "graph6", g6);
    kv(out, "target", std::string(to_string(cert.target)));
    kv(out, "k", std::to_string(cert.k));
    kv(out, "r", std::to_string(cert.r));
    kv(out, "verdict", cert.certified ? "Certified" : "Not certified");
    kv(out, "fired", fired_list(cert));
    if (cert.oracle)
      kv(out, "oracle", std::to_string(cert.oracle->value) + (cert.oracle->agrees ? " (agrees)" : " (DISAGREES)"));
    out << '\n';
    print_rows(out, cert);
  }
  return 0;
}

struct SpectrumFlags {
  std::string matrix = "laplacian";
  double a = 1.0;
  double b = 1.0;
};

int cmd_spectrum(const SharedFlags& shared, const InputFlags& input, const SpectrumFlags& flags, std::ostream& out) {
  const auto graphs = input.load();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const SymmetricMatrix m = flags.matrix == "laplacian" ? laplacian(g)
                              : flags.matrix == "adjacency" ? adjacency(g)
                              : flags.matrix == "signless"  ? signless_laplacian(g)
                                                            : pencil(g, flags.a, flags.b);
    const Spectrum s = eigenvalues_sym(m);
    if (shared.json) {
      nlohmann::json j = to_json(s);
      j["graph6"] = write_graph6(g);
      j["matrix"] = flags.matrix;
      print_json(out, j, graphs.size() > 1);
      continue;
    }
    if (i > 0) out << '\n';
    kv(out, "graph6", write_graph6(g));
    kv(out, "matrix", flags.matrix);
    kv(out, "sweeps", std::to_string(s.sweeps));
    kv(out, "residual", sig9(s.residual));
    for (double v : s.values) out << sig9(v) << '\n';
  }
  return 0;
}

// Corpus selection shared by gen and verify.
struct CorpusFlags {
  std::optional<int> exhaustive;
  int from = 1;
  bool connected = false;
  int min_degree = 0;
  int min_girth = 0;
  std::vector<double> gnp;
  std::string named;
  std::string file;

  CorpusSpec resolve(const SharedFlags& shared, bool allow_file) const {
    const int given = exhaustive.has_value() + !gnp.empty() + !named.empty() + !file.empty();
    if (given != 1)
      throw UsageError(allow_file ? "give exactly one of --exhaustive, --gnp, --named or --file"
                                  : "give exactly one of --exhaustive, --gnp or --named");
    if (exhaustive) {
      ExhaustiveSpec spec;
      spec.min_order = from;
      spec.max_order = *exhaustive;
      spec.filter = GraphFilter{connected, min_degree, min_girth};
      return spec;
    }
    if (!gnp.empty()) {
      if (!shared.seed_given) throw UsageError("--gnp needs --seed");
      RandomSpec spec;
      spec.n = static_cast<int>(gnp[0]);
      spec.p = gnp[1];
      spec.count = static_cast<int>(gnp[2]);
      spec.seed = shared.seed;
      if (spec.n != gnp[0] || spec.count != gnp[2]) throw UsageError("--gnp N P COUNT needs integer N and COUNT");
      return spec;
    }
    if (!named.empty()) return NamedSpec{named};
    return FileSpec{file};
  }
};

void attach_corpus(CLI::App* cmd, CorpusFlags& flags, bool with_file) {
  cmd->add_option("--exhaustive", flags.exhaustive, "All labelled graphs of order N");
  cmd->add_option("--from", flags.from, "Smallest order in an exhaustive sweep (default 1)");
  cmd->add_option("--min-degree", flags.min_degree, "Keep graphs with minimum degree at least D");
  cmd->add_option("--min-girth", flags.min_girth, "Keep graphs with finite girth at least G");
  cmd->add_option("--gnp", flags.gnp, "G(N, P) samples: N P COUNT")->expected(3);
  cmd->add_option("--named", flags.named, "Named family, e.g. petersen or cycle:5");
  if (with_file) cmd->add_option("--file", flags.file, "File of graph6 lines");
}

int cmd_gen(const SharedFlags& shared, const CorpusFlags& flags, std::ostream& out) {
  const CorpusSpec spec = flags.resolve(shared, false);
  if (const auto* ex = std::get_if<ExhaustiveSpec>(&spec)) {
    if (ex->min_order < 1 || ex->min_order > ex->max_order) throw UsageError("need 1 <= --from <= --exhaustive");
    labeled_graph_count(ex->max_order);  // rejects orders above the cap before any output
    for (int n = ex->min_order; n <= ex->max_order; ++n)
      enumerate_labeled_range(n, 0, labeled_graph_count(n), ex->filter,
                              [&](std::uint64_t, const Graph& g) { out << write_graph6(g) << '\n'; });
    return 0;
  }
  if (const auto* r = std::get_if<RandomSpec>(&spec)) {
    for (const auto& g : random_gnp_corpus(r->n, r->p, r->count, r->seed)) out << write_graph6(g) << '\n';
    return 0;
  }
  out << write_graph6(named_from_string(std::get<NamedSpec>(spec).family)) << '\n';
  return 0;
}

struct VerifyFlags {
  CorpusFlags corpus;
  std::string properties;
  bool all = false;
  bool include_disconnected = false;
  bool serial = false;
  CampaignOptions options;
};

int cmd_verify(const SharedFlags& shared, VerifyFlags& flags, std::ostream& out, std::ostream& err) {
  if (!flags.properties.empty() && flags.all) throw UsageError("give --properties or --all, not both");
  CorpusFlags corpus = flags.corpus;
  corpus.connected = !flags.include_disconnected;
  const CorpusSpec spec = corpus.resolve(shared, true);

  CampaignOptions options = flags.options;
  options.properties = flags.properties.empty() ? all_properties() : parse_properties(flags.properties);
  options.eps = shared.eps;
  options.seed = shared.seed;
  options.threads = shared.threads;
  const CampaignResult result = flags.serial ? run_campaign_serial(spec, options) : run_campaign(spec, options);

  if (shared.json) {
    print_json(out, to_json(result), false);
    err << "elapsed " << fixed6(result.elapsed_seconds) << " s\n";
    return result.exit_code();
  }
  kv(out, "corpus", result.corpus);
  kv(out, "graphs", std::to_string(result.graphs));
  out << "\nchecks run\n";
  for (const auto& [id, count] : result.checks_run) out << "  " << std::left << std::setw(44) << id << count << '\n';
  out << "\ncounterexamples: " << result.counterexamples.size() << '\n';
  for (const auto& c : result.counterexamples)
    out << "  " << c.property << "  " << c.graph6 << "  " << c.witness.dump() << '\n';
  out << "razor edges: " << result.razor_edge_count << '\n';
  for (const auto& r : result.razor_edges)
    out << "  " << r.property << "  " << r.graph6 << "  k=" << r.k << "  margin=" << sig9(r.margin) << '\n';
  out << "elapsed: " << fixed6(result.elapsed_seconds) << " s\n";
  out << (result.clean() ? "CLEAN" : "COUNTEREXAMPLES FOUND") << '\n';
  return result.exit_code();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral connectivity certificates and their verification harness", "conncert"};
  app.require_subcommand(1);
  app.fallthrough();

  SharedFlags shared;
  app.add_flag("--json", shared.json, "Machine-readable output");
  app.add_option("--threads", shared.threads, "Worker threads for verify (default: all)");
  auto* seed_opt = app.add_option("--seed", shared.seed, "Seed for random corpora and sampling");
  app.add_option("--eps", shared.eps, "Threshold comparison slack (default 1e-9)");

  InputFlags input;
  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants, spectra and certificates for k = 2..delta");
  input.attach(analyze_cmd);

  CertifyFlags certify_flags;
  auto* certify_cmd = app.add_subcommand("certify", "Certify kappa >= k or kappa' >= k");
  input.attach(certify_cmd);
  certify_cmd->add_flag("--edge", certify_flags.edge, "Edge connectivity");
  certify_cmd->add_flag("--vertex", certify_flags.vertex, "Vertex connectivity");
  certify_cmd->add_option("-k", certify_flags.k, "Target connectivity")->required();
  certify_cmd->add_flag("--oracle", certify_flags.oracle, "Compare with exact connectivity");
  certify_cmd->add_option("--r-override", certify_flags.r_override, "Clique bound r >= omega");

  SpectrumFlags spectrum_flags;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of a graph matrix, descending");
  input.attach(spectrum_cmd);
  spectrum_cmd->add_option("--matrix", spectrum_flags.matrix, "laplacian | adjacency | signless | pencil")
      ->check(CLI::IsMember({"laplacian", "adjacency", "signless", "pencil"}));
  spectrum_cmd->add_option("--a", spectrum_flags.a, "Degree weight of the pencil aD + bA");
  spectrum_cmd->add_option("--b", spectrum_flags.b, "Adjacency weight of the pencil aD + bA");

  CorpusFlags gen_flags;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a corpus as graph6 lines");
  attach_corpus(gen_cmd, gen_flags, false);
  gen_cmd->add_flag("--connected", gen_flags.connected, "Keep connected graphs only");

  VerifyFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign");
  attach_corpus(verify_cmd, verify_flags.corpus, true);
  verify_cmd->add_flag("--include-disconnected", verify_flags.include_disconnected,
                       "Keep disconnected graphs in exhaustive sweeps");
  verify_cmd->add_option("--properties", verify_flags.properties, "Comma-separated property families");
  verify_cmd->add_flag("--all", verify_flags.all, "Every property family (the default)");
  verify_cmd->add_option("--cut-cap", verify_flags.options.cut_cap, "Largest n for exhaustive cut enumeration");
  verify_cmd->add_option("--subset-cap", verify_flags.options.subset_cap, "Largest n for exhaustive quotient sets");
  verify_cmd->add_option("--pair-cap", verify_flags.options.pair_cap, "Largest n for exhaustive (X, Y) pairs");
  verify_cmd->add_option("--samples", verify_flags.options.samples, "Random sets or pairs per graph above a cap");
  verify_cmd->add_option("--slack", verify_flags.options.slack, "Lemma inequality slack (default 1e-7)");
  verify_cmd->add_option("--threshold-scale", verify_flags.options.threshold_scale,
                         "Multiply theorem thresholds; below 1 must produce counterexamples");
  verify_cmd->add_option("--razor-limit", verify_flags.options.razor_limit, "Razor edges listed in the report");
  verify_cmd->add_flag("--serial", verify_flags.serial, "Use the single-threaded reference implementation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }
  shared.seed_given = seed_opt->count() > 0;

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(shared, input, out);
    if (certify_cmd->parsed()) return cmd_certify(shared, input, certify_flags, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(shared, input, spectrum_flags, out);
    if (gen_cmd->parsed()) return cmd_gen(shared, gen_flags, out);
    if (verify_cmd->parsed()) return cmd_verify(shared, verify_flags, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace conncert
