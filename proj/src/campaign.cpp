#include <algorithm>
#include <chrono>
#include <exception>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "conncert/error.hpp"
#include "conncert/report_json.hpp"
#include "conncert/verify.hpp"

namespace conncert {

std::string_view to_string(Property p) {
  switch (p) {
    case Property::SubsetSize: return "subset_size";
    case Property::ComponentSize: return "component_size";
    case Property::FiedlerBounds: return "fiedler_bounds";
    case Property::HaemersPairs: return "haemers_pairs";
    case Property::SpectralIdentities: return "spectral_identities";
    case Property::Turan: return "turan";
    case Property::Soundness: return "soundness";
  }
  return "unknown";
}

std::vector<Property> all_properties() {
  return {Property::SubsetSize,         Property::ComponentSize, Property::FiedlerBounds, Property::HaemersPairs,
          Property::SpectralIdentities, Property::Turan,         Property::Soundness};
}

std::optional<Property> property_from_string(std::string_view name) {
  for (Property p : all_properties())
    if (to_string(p) == name) return p;
  return std::nullopt;
}

std::vector<Property> parse_properties(std::string_view list) {
  std::vector<Property> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view name = list.substr(0, comma);
    const auto p = property_from_string(name);
    if (!p) throw Error(ErrorCode::Domain, "unknown property '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(ErrorCode::Domain, "empty property list");
  return out;
}

namespace {

constexpr std::uint64_t kMaskChunk = 1U << 12;
constexpr std::size_t kGraphChunk = 16;

// A slice of the corpus: a mask range at one order, or a range of stored graphs.
struct WorkUnit {
  int order = 0;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

struct UnitResult {
  CheckOutcome outcome;
  std::uint64_t graphs = 0;
};

class Corpus {
 public:
  explicit Corpus(const CorpusSpec& spec) {
    if (const auto* ex = std::get_if<ExhaustiveSpec>(&spec)) {
      if (ex->min_order < 1 || ex->min_order > ex->max_order)
        throw Error(ErrorCode::Domain, "exhaustive orders must satisfy 1 <= from <= n");
      exhaustive_ = *ex;
      for (int n = ex->min_order; n <= ex->max_order; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t b = 0; b < total; b += kMaskChunk) units_.push_back({n, b, std::min(total, b + kMaskChunk)});
      }
      return;
    }
    if (const auto* r = std::get_if<RandomSpec>(&spec)) {
      if (r->n < 1 || r->count < 0) throw Error(ErrorCode::Domain, "random corpus needs n >= 1 and count >= 0");
      graphs_ = random_gnp_corpus(r->n, r->p, r->count, r->seed);
    } else if (const auto* named_spec = std::get_if<NamedSpec>(&spec)) {
      graphs_.push_back(named_from_string(named_spec->family));
    } else {
      graphs_ = read_graph6_file(std::get<FileSpec>(spec).path);
    }
    for (std::size_t b = 0; b < graphs_.size(); b += kGraphChunk)
      units_.push_back({0, b, std::min<std::uint64_t>(graphs_.size(), b + kGraphChunk)});
  }

  const std::vector<WorkUnit>& units() const { return units_; }

  UnitResult run(const WorkUnit& unit, const CampaignOptions& options) const {
    UnitResult result;
    if (exhaustive_) {
      // Index mixes order and mask so sampling seeds differ across orders.
      enumerate_labeled_range(unit.order, unit.begin, unit.end, exhaustive_->filter,
                              [&](std::uint64_t mask, const Graph& g) {
                                const std::uint64_t index = (static_cast<std::uint64_t>(unit.order) << 40) | mask;
                                result.outcome.merge(check_graph(g, options, index));
                                ++result.graphs;
                              });
    } else {
      for (std::uint64_t i = unit.begin; i < unit.end; ++i) {
        result.outcome.merge(check_graph(graphs_[i], options, i));
        ++result.graphs;
      }
    }
    return result;
  }

 private:
  std::optional<ExhaustiveSpec> exhaustive_;
  std::vector<Graph> graphs_;
  std::vector<WorkUnit> units_;
};

void validate(const CampaignOptions& o) {
  if (o.properties.empty()) throw Error(ErrorCode::Domain, "no properties selected");
  if (!(o.eps >= 0.0) || !(o.slack >= 0.0)) throw Error(ErrorCode::Domain, "slack values must be nonnegative");
  if (!(o.threshold_scale > 0.0)) throw Error(ErrorCode::Domain, "threshold scale must be positive");
  if (o.cut_cap < 0 || o.subset_cap < 0 || o.pair_cap < 0 || o.samples < 0)
    throw Error(ErrorCode::Domain, "caps and sample counts must be nonnegative");
  if (o.threads < 0) throw Error(ErrorCode::Domain, "thread count must be nonnegative");
}

CampaignResult finish(const CorpusSpec& spec, const CampaignOptions& options, std::vector<UnitResult>& parts,
                      std::chrono::steady_clock::time_point start) {
  CampaignResult result;
  result.corpus = describe(spec);
  result.options = options;
  CheckOutcome merged;
  for (auto& part : parts) {
    result.graphs += part.graphs;
    merged.merge(std::move(part.outcome));
  }
  result.checks_run = std::move(merged.checks_run);
  result.counterexamples = std::move(merged.counterexamples);
  std::stable_sort(result.counterexamples.begin(), result.counterexamples.end(),
                   [](const Counterexample& a, const Counterexample& b) {
                     return std::tie(a.property, a.graph6) < std::tie(b.property, b.graph6);
                   });
  auto& razors = merged.razor_edges;
  std::stable_sort(razors.begin(), razors.end(), [](const RazorEdge& a, const RazorEdge& b) {
    return std::tie(a.property, a.graph6, a.k) < std::tie(b.property, b.graph6, b.k);
  });
  result.razor_edge_count = razors.size();
  if (razors.size() > options.razor_limit) razors.resize(options.razor_limit);
  result.razor_edges = std::move(razors);
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

CampaignResult run_campaign_serial(const CorpusSpec& spec, const CampaignOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  validate(options);
  const Corpus corpus(spec);
  std::vector<UnitResult> parts;
  parts.reserve(corpus.units().size());
  for (const auto& unit : corpus.units()) parts.push_back(corpus.run(unit, options));
  return finish(spec, options, parts, start);
}

CampaignResult run_campaign(const CorpusSpec& spec, const CampaignOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  validate(options);
  const Corpus corpus(spec);
  const auto& units = corpus.units();
  std::vector<UnitResult> parts(units.size());
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(units.size()); ++i) {
    try {
      parts[static_cast<std::size_t>(i)] = corpus.run(units[static_cast<std::size_t>(i)], options);
    } catch (...) {
#pragma omp critical(conncert_campaign_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return finish(spec, options, parts, start);
}

nlohmann::json to_json(const Counterexample& c) {
  return {{"property", c.property}, {"graph6", c.graph6}, {"witness", c.witness}};
}

nlohmann::json to_json(const RazorEdge& r) {
  return {{"property", r.property}, {"graph6", r.graph6},          {"k", r.k},
          {"threshold", round9(r.threshold)}, {"observed", round9(r.observed)}, {"margin", round9(r.margin)}};
}

nlohmann::json to_json(const CampaignResult& result) {
  nlohmann::json props = nlohmann::json::array();
  for (Property p : result.options.properties) props.push_back(to_string(p));
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const auto& c : result.counterexamples) counterexamples.push_back(to_json(c));
  nlohmann::json razors = nlohmann::json::array();
  for (const auto& r : result.razor_edges) razors.push_back(to_json(r));
  const auto& o = result.options;
  return {
      {"corpus", result.corpus},
      {"options",
       {{"properties", props},
        {"seed", o.seed},
        {"eps", round9(o.eps)},
        {"slack", round9(o.slack)},
        {"threshold_scale", round9(o.threshold_scale)},
        {"cut_cap", o.cut_cap},
        {"subset_cap", o.subset_cap},
        {"pair_cap", o.pair_cap},
        {"samples", o.samples}}},
      {"graphs", result.graphs},
      {"checks_run", result.checks_run},
      {"counterexamples", counterexamples},
      {"razor_edges", {{"count", result.razor_edge_count}, {"limit", o.razor_limit}, {"listed", razors}}},
      {"clean", result.clean()},
  };
}

}  // namespace conncert
