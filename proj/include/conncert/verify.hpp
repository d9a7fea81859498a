#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "conncert/certify.hpp"
#include "conncert/corpus.hpp"
#include "conncert/graph.hpp"

namespace conncert {

/// Property families a campaign can run. Each family reports finer-grained
/// ids in CampaignResult::checks_run, e.g. "component_size.girth".
enum class Property {
  SubsetSize,
  ComponentSize,
  FiedlerBounds,
  HaemersPairs,
  SpectralIdentities,
  Turan,
  Soundness,
};

std::string_view to_string(Property p);
std::optional<Property> property_from_string(std::string_view name);
std::vector<Property> all_properties();
/// Comma-separated family names. Throws Domain on an unknown name.
std::vector<Property> parse_properties(std::string_view list);

struct CampaignOptions {
  std::vector<Property> properties = all_properties();
  double eps = kDefaultEpsilon;  ///< theorem-row slack
  double slack = 1e-7;           ///< lemma and inequality slack
  /// Scales every mu_{n-1} threshold in the soundness rows. Values below 1
  /// deliberately break the theorems and must produce counterexamples.
  double threshold_scale = 1.0;
  int cut_cap = 12;              ///< largest n for exhaustive cut enumeration
  int subset_cap = 7;            ///< largest n for exhaustive cut-quotient sets
  int pair_cap = 6;              ///< largest n for exhaustive (X, Y) pairs
  int samples = 1000;            ///< random sets or pairs per graph above a cap
  std::uint64_t seed = 1;
  int threads = 0;               ///< 0: OpenMP default
  std::size_t razor_limit = 200; ///< razor edges listed; all are counted
};

struct Counterexample {
  std::string property;
  std::string graph6;
  /// Witness sets and both sides of the failed inequality; reals are
  /// rendered at 17 significant digits.
  nlohmann::json witness;
};

struct RazorEdge {
  std::string property;
  std::string graph6;
  int k = 0;
  double threshold = 0.0;
  double observed = 0.0;
  double margin = 0.0;
};

/// Results of checking one graph or a whole corpus. checks_run counts
/// non-vacuous instances: sets, pairs or rows whose hypothesis held.
struct CheckOutcome {
  std::map<std::string, std::uint64_t> checks_run;
  std::vector<Counterexample> counterexamples;
  std::vector<RazorEdge> razor_edges;

  bool clean() const noexcept { return counterexamples.empty(); }
  void merge(CheckOutcome&& other);
};

/// Per-graph context shared by the checks: facts with oracles, graph6, and
/// a sampler seeded from (campaign seed, graph index).
struct GraphUnderTest {
  const Graph& graph;
  GraphFacts facts;
  std::string graph6;
  std::mt19937_64 rng;

  GraphUnderTest(const Graph& g, std::uint64_t seed, std::uint64_t index);
};

// Each check records at most one counterexample per property id per graph.
void check_subset_size_lemma(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out);
void check_component_lemmas(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out);
void check_fiedler_bounds(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out);
void check_haemers_pair_bounds(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out);
void check_spectral_identities(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out);
void check_turan(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out);
/// Every theorem row for every k in 2..delta: fired implies the oracle
/// connectivity is at least k.
void check_theorem_soundness(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out);

/// Runs the selected properties on one graph.
CheckOutcome check_graph(const Graph& g, const CampaignOptions& options, std::uint64_t index = 0);

struct CampaignResult {
  std::string corpus;
  CampaignOptions options;
  std::uint64_t graphs = 0;
  std::map<std::string, std::uint64_t> checks_run;
  std::vector<Counterexample> counterexamples;  ///< sorted by (property, graph6)
  std::uint64_t razor_edge_count = 0;
  std::vector<RazorEdge> razor_edges;  ///< first razor_limit after sorting
  double elapsed_seconds = 0.0;        ///< wall clock; not serialized

  bool clean() const noexcept { return counterexamples.empty(); }
  int exit_code() const noexcept { return clean() ? 0 : 1; }
};

/// Partitions the corpus across OpenMP threads; the merged result does not
/// depend on the thread count.
CampaignResult run_campaign(const CorpusSpec& spec, const CampaignOptions& options);
/// Single-threaded reference with the same output.
CampaignResult run_campaign_serial(const CorpusSpec& spec, const CampaignOptions& options);

nlohmann::json to_json(const Counterexample& c);
nlohmann::json to_json(const RazorEdge& r);
nlohmann::json to_json(const CampaignResult& result);

}  // namespace conncert
