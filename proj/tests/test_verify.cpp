#include <gtest/gtest.h>

#include "conncert/corpus.hpp"
#include "conncert/error.hpp"
#include "conncert/verify.hpp"

using namespace conncert;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no conncert::Error thrown";
  return ErrorCode::Domain;
}

std::string describe_failures(const CheckOutcome& out) {
  std::string text;
  for (const auto& c : out.counterexamples) text += c.property + " " + c.graph6 + " " + c.witness.dump() + "\n";
  return text;
}

std::string describe_failures(const CampaignResult& out) {
  std::string text;
  for (const auto& c : out.counterexamples) text += c.property + " " + c.graph6 + " " + c.witness.dump() + "\n";
  return text;
}

std::uint64_t count_of(const std::map<std::string, std::uint64_t>& m, const std::string& id) {
  auto it = m.find(id);
  return it == m.end() ? 0 : it->second;
}

// Two K4 sharing vertex 0.
Graph k4_k4() {
  return Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                               {0, 4}, {0, 5}, {0, 6}, {4, 5}, {4, 6}, {5, 6}});
}

// Two K5 joined by the edge 4-5.
Graph barbell() {
  std::vector<Edge> edges;
  for (int base : {0, 5})
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) edges.emplace_back(base + i, base + j);
  edges.emplace_back(4, 5);
  return Graph::from_edges(10, edges);
}

}  // namespace

TEST(Properties, Names) {
  for (Property p : all_properties()) EXPECT_EQ(property_from_string(to_string(p)), p);
  EXPECT_EQ(parse_properties("turan,soundness"), (std::vector<Property>{Property::Turan, Property::Soundness}));
  EXPECT_EQ(code_of([] { parse_properties("turan,bogus"); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { parse_properties(""); }), ErrorCode::Domain);
  EXPECT_EQ(all_properties().size(), 7U);
}

TEST(Lemmas, PetersenIsClean) {
  const auto out = check_graph(named("petersen"), {});
  EXPECT_TRUE(out.clean()) << describe_failures(out);
  // kappa' = delta = 3, so no set has d(X) < delta.
  EXPECT_EQ(count_of(out.checks_run, "subset_size"), 0U);
  EXPECT_GT(count_of(out.checks_run, "fiedler_bounds.edge_cut_quotient"), 0U);
  EXPECT_GT(count_of(out.checks_run, "haemers_pairs.haemers"), 0U);
  EXPECT_GT(count_of(out.checks_run, "soundness.edge.small_order"), 0U);
}

TEST(Lemmas, CycleSubsetLemmaIsVacuous) {
  const auto out = check_graph(named("cycle", {6}), {});
  EXPECT_TRUE(out.clean()) << describe_failures(out);
  EXPECT_EQ(count_of(out.checks_run, "subset_size"), 0U);
}

TEST(Lemmas, SharedVertexK4IsTight) {
  const auto out = check_graph(k4_k4(), {});
  EXPECT_TRUE(out.clean()) << describe_failures(out);
  EXPECT_GT(count_of(out.checks_run, "component_size.clique_i"), 0U);
}

TEST(Lemmas, BarbellEdgeSideIsTight) {
  const auto out = check_graph(barbell(), {});
  EXPECT_TRUE(out.clean()) << describe_failures(out);
  EXPECT_GT(count_of(out.checks_run, "component_size.edge_side"), 0U);
}

TEST(Lemmas, StarSitsOnTheFiedlerChain) {
  // K_{1,5}: mu = 1 = kappa. The lemma families skip delta < 2 but the chain applies.
  CampaignOptions o;
  o.properties = {Property::FiedlerBounds, Property::SpectralIdentities, Property::HaemersPairs};
  const auto out = check_graph(named("star", {5}), o);
  EXPECT_TRUE(out.clean()) << describe_failures(out);
  EXPECT_EQ(count_of(out.checks_run, "fiedler_bounds.chain"), 1U);
}

TEST(Lemmas, CycleFiveAndPathHaemers) {
  for (const Graph& g : {named("cycle", {5}), named("path", {4})}) {
    CampaignOptions o;
    o.properties = {Property::HaemersPairs};
    const auto out = check_graph(g, o);
    EXPECT_TRUE(out.clean()) << describe_failures(out);
    EXPECT_GT(count_of(out.checks_run, "haemers_pairs.brouwer_haemers"), 0U);
  }
}

TEST(Lemmas, CompleteGraphHasNoPairs) {
  CampaignOptions o;
  o.properties = {Property::HaemersPairs};
  const auto out = check_graph(named("complete", {6}), o);
  EXPECT_EQ(count_of(out.checks_run, "haemers_pairs.haemers"), 0U);
}

TEST(Lemmas, SampledPathAboveCaps) {
  CampaignOptions o;
  o.cut_cap = 4;
  o.subset_cap = 4;
  o.pair_cap = 4;
  o.samples = 200;
  for (const Graph& g : random_gnp_corpus(14, 0.5, 10, 5)) {
    const auto out = check_graph(g, o, 3);
    EXPECT_TRUE(out.clean()) << describe_failures(out);
  }
}

TEST(Lemmas, HeawoodIsClean) {
  CampaignOptions o;
  o.pair_cap = 4;
  o.samples = 300;
  const auto out = check_graph(named("heawood"), o);
  EXPECT_TRUE(out.clean()) << describe_failures(out);
}

TEST(Campaign, ExhaustiveFiveIsClean) {
  ExhaustiveSpec spec;
  spec.max_order = 5;
  spec.filter.connected = true;
  const auto result = run_campaign(spec, {});
  EXPECT_TRUE(result.clean()) << describe_failures(result);
  EXPECT_EQ(result.graphs, 1U + 1U + 4U + 38U + 728U);
  EXPECT_EQ(result.exit_code(), 0);
}

TEST(Campaign, NamedPetersen) {
  const auto result = run_campaign(NamedSpec{"petersen"}, {});
  EXPECT_TRUE(result.clean()) << describe_failures(result);
  EXPECT_EQ(result.graphs, 1U);
}

TEST(Campaign, SerialAndParallelAgree) {
  ExhaustiveSpec spec;
  spec.min_order = 3;
  spec.max_order = 6;
  spec.filter = {true, 2, 0};
  CampaignOptions o;
  o.threads = 1;
  const auto reference = to_json(run_campaign_serial(spec, o)).dump();
  for (int threads : {1, 2, 4}) {
    o.threads = threads;
    EXPECT_EQ(to_json(run_campaign(spec, o)).dump(), reference) << threads;
  }
  o.threads = 3;
  const RandomSpec random{12, 0.5, 40, 9};
  EXPECT_EQ(to_json(run_campaign(random, o)).dump(), to_json(run_campaign_serial(random, o)).dump());
}

TEST(Campaign, MutationIsCaught) {
  ExhaustiveSpec spec;
  spec.max_order = 5;
  spec.filter.connected = true;
  CampaignOptions o;
  o.properties = {Property::Soundness};
  o.threshold_scale = 0.5;
  const auto result = run_campaign(spec, o);
  ASSERT_FALSE(result.clean());
  EXPECT_EQ(result.exit_code(), 1);
  bool bowtie_seen = false;
  for (const auto& c : result.counterexamples) {
    EXPECT_LT(c.witness["oracle"].get<int>(), c.witness["k"].get<int>());
    EXPECT_EQ(c.property.rfind("soundness.", 0), 0U);
    bowtie_seen = bowtie_seen || c.property == "soundness.vertex.vertex_girth";
  }
  EXPECT_TRUE(bowtie_seen);
  EXPECT_TRUE(std::is_sorted(result.counterexamples.begin(), result.counterexamples.end(),
                             [](const Counterexample& a, const Counterexample& b) {
                               return std::tie(a.property, a.graph6) < std::tie(b.property, b.graph6);
                             }));
}

TEST(Campaign, RazorEdgesAreLoggedButNotFailures) {
  ExhaustiveSpec spec;
  spec.max_order = 5;
  spec.filter.connected = true;
  CampaignOptions o;
  o.properties = {Property::Soundness};
  o.razor_limit = 3;
  const auto result = run_campaign(spec, o);
  EXPECT_TRUE(result.clean());
  EXPECT_GT(result.razor_edge_count, 3U);
  EXPECT_EQ(result.razor_edges.size(), 3U);
  const auto j = to_json(result);
  EXPECT_EQ(j["razor_edges"]["count"], result.razor_edge_count);
  EXPECT_EQ(j["razor_edges"]["listed"].size(), 3U);
}

TEST(Campaign, JsonShape) {
  const auto j = to_json(run_campaign(NamedSpec{"cycle:5"}, {}));
  for (const char* key : {"corpus", "options", "graphs", "checks_run", "counterexamples", "razor_edges", "clean"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_FALSE(j.contains("elapsed"));
  EXPECT_EQ(j["clean"], true);
}

TEST(Campaign, SeedChangesSamplesOnly) {
  CampaignOptions a;
  a.subset_cap = 3;
  a.pair_cap = 3;
  a.cut_cap = 3;
  a.samples = 50;
  CampaignOptions b = a;
  b.seed = 99;
  const RandomSpec spec{10, 0.5, 5, 4};
  const auto ra = run_campaign(spec, a);
  const auto rb = run_campaign(spec, b);
  EXPECT_TRUE(ra.clean());
  EXPECT_TRUE(rb.clean());
  EXPECT_EQ(ra.graphs, rb.graphs);
  EXPECT_EQ(count_of(ra.checks_run, "turan"), count_of(rb.checks_run, "turan"));
}

TEST(Campaign, ConfigurationErrors) {
  CampaignOptions o;
  o.properties.clear();
  EXPECT_EQ(code_of([&] { run_campaign(NamedSpec{"petersen"}, o); }), ErrorCode::Domain);
  CampaignOptions scale;
  scale.threshold_scale = 0.0;
  EXPECT_EQ(code_of([&] { run_campaign(NamedSpec{"petersen"}, scale); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { run_campaign(ExhaustiveSpec{4, 3, {}}, {}); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { run_campaign(ExhaustiveSpec{1, 9, {}}, {}); }), ErrorCode::TooLarge);
  EXPECT_EQ(code_of([] { run_campaign(NamedSpec{"nope"}, {}); }), ErrorCode::UnknownFamily);
  EXPECT_EQ(code_of([] { run_campaign(FileSpec{"/nonexistent/x.g6"}, {}); }), ErrorCode::Io);
}
