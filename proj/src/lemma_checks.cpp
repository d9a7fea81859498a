#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "conncert/bounds.hpp"
#include "conncert/error.hpp"
#include "conncert/graph6.hpp"
#include "conncert/invariants.hpp"
#include "conncert/report_json.hpp"
#include "conncert/spectra.hpp"
#include "conncert/verify.hpp"

namespace conncert {

namespace {

// Exhaustive loops run over 64-bit masks; beyond this they would not finish anyway.
constexpr int kMaskLimit = 24;

using Mask = std::uint64_t;
using nlohmann::json;

std::vector<Mask> rows_of(const Graph& g) {
  std::vector<Mask> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.row_mask(v);
  return rows;
}

int size_of(Mask m) { return std::popcount(m); }

int cut_degree_of(const std::vector<Mask>& rows, Mask x) {
  int d = 0;
  for (Mask rest = x; rest != 0; rest &= rest - 1) d += std::popcount(rows[static_cast<std::size_t>(std::countr_zero(rest))] & ~x);
  return d;
}

Mask neighbourhood(const std::vector<Mask>& rows, Mask x) {
  Mask out = 0;
  for (Mask rest = x; rest != 0; rest &= rest - 1) out |= rows[static_cast<std::size_t>(std::countr_zero(rest))];
  return out;
}

// Components of the subgraph induced by `alive`.
std::vector<Mask> components_within(const std::vector<Mask>& rows, Mask alive) {
  std::vector<Mask> comps;
  Mask left = alive;
  while (left != 0) {
    Mask comp = left & (~left + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      const Mask next = neighbourhood(rows, frontier) & alive & ~comp;
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

json set_json(Mask m) {
  json out = json::array();
  for (Mask rest = m; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

json set_json(const VertexSet& s) { return json(s.members()); }

Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

bool exhaustive(int n, int cap) { return n <= cap && n <= kMaskLimit; }

// One counterexample per (property, graph).
void record(CheckOutcome& out, const GraphUnderTest& t, std::string property, json witness) {
  for (const auto& c : out.counterexamples)
    if (c.property == property && c.graph6 == t.graph6) return;
  out.counterexamples.push_back(Counterexample{std::move(property), t.graph6, std::move(witness)});
}

void add_count(CheckOutcome& out, const char* id, std::uint64_t count) {
  if (count > 0) out.checks_run[id] += count;
}

std::int64_t moore_or_max(int delta, int g) {
  try {
    return moore_bound(delta, g);
  } catch (const Error&) {
    return std::numeric_limits<std::int64_t>::max();
  }
}

VertexSet random_subset(int n, std::mt19937_64& rng) {
  VertexSet x(n);
  for (int v = 0; v < n; ++v)
    if (rng() >> 63) x.insert(v);
  return x;
}

// A minimum vertex cut and the components it leaves; stands in for full
// enumeration above the caps.
struct CutFamily {
  VertexSet cut;
  std::vector<VertexSet> parts;
};

std::vector<CutFamily> witness_cut(const Graph& g) {
  std::vector<CutFamily> out;
  if (!is_connected(g) || g.edge_count() == static_cast<std::int64_t>(g.order()) * (g.order() - 1) / 2) return out;
  const auto w = vertex_connectivity_witness(g);
  const auto sub = induced_delete(g, w.cut);
  CutFamily fam{w.cut, {}};
  for (const auto& comp : components(sub.graph)) {
    VertexSet part(g.order());
    for (int v : comp.members()) part.insert(sub.original[static_cast<std::size_t>(v)]);
    fam.parts.push_back(std::move(part));
  }
  out.push_back(std::move(fam));
  return out;
}

}  // namespace

GraphUnderTest::GraphUnderTest(const Graph& g, std::uint64_t seed, std::uint64_t index)
    : graph(g), facts(compute_facts(g, true)), graph6(write_graph6(g)) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  rng.seed(seq);
}

void CheckOutcome::merge(CheckOutcome&& other) {
  for (const auto& [id, count] : other.checks_run) checks_run[id] += count;
  std::move(other.counterexamples.begin(), other.counterexamples.end(), std::back_inserter(counterexamples));
  std::move(other.razor_edges.begin(), other.razor_edges.end(), std::back_inserter(razor_edges));
}

void check_subset_size_lemma(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out) {
  const Graph& g = t.graph;
  const auto& f = t.facts;
  if (f.n < 2 || f.delta < 1) return;
  const int r = std::max(f.omega, 2);
  const std::int64_t bound = phi(f.delta, r);
  std::uint64_t count = 0;
  auto test = [&](int size, int cut, const json& set) {
    if (cut >= f.delta) return;
    ++count;
    if (size < bound)
      record(out, t, "subset_size",
             {{"set", set}, {"cut_degree", cut}, {"delta", f.delta}, {"r", r}, {"size", size}, {"bound", bound}});
  };

  if (exhaustive(f.n, o.cut_cap)) {
    const auto rows = rows_of(g);
    const Mask full = full_mask(f.n);
    for (Mask x = 1; x < full; ++x) {
      const int cut = cut_degree_of(rows, x);
      if (cut < f.delta) test(size_of(x), cut, set_json(x));
    }
  } else {
    if (f.connected) {
      const auto w = edge_connectivity_witness(g);
      test(w.side.size(), w.connectivity, set_json(w.side));
      const VertexSet other = w.side.complement();
      test(other.size(), w.connectivity, set_json(other));
    } else {
      for (const auto& comp : components(g)) test(comp.size(), 0, set_json(comp));
    }
    for (int i = 0; i < o.samples; ++i) {
      const VertexSet x = random_subset(f.n, t.rng);
      if (x.empty() || x.size() == f.n) continue;
      const int cut = cut_degree(g, x);
      if (cut < f.delta) test(x.size(), cut, set_json(x));
    }
  }
  add_count(out, "subset_size", count);
}

void check_component_lemmas(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out) {
  const Graph& g = t.graph;
  const auto& f = t.facts;
  if (!f.connected || f.n < 3 || f.delta < 2) return;
  const int delta = f.delta;
  const int r_low = std::max(f.omega, 2);
  const int r_three = std::max(f.omega, 3);
  const bool has_girth = f.girth.is_finite();
  const std::int64_t moore = has_girth ? moore_or_max(delta, f.girth.value()) : 0;

  std::uint64_t n_i = 0, n_ii = 0, n_iii = 0, n_girth = 0, n_edge = 0;

  auto component = [&](int s, int x, const json& cut, const json& part) {
    auto witness = [&](int r, const char* bound) {
      return json{{"cut", cut}, {"component", part}, {"delta", delta}, {"r", r}, {"cut_size", s}, {"size", x},
                  {"bound", bound}};
    };
    // Parts (i) and (ii) need r >= 3, part (iii) any r >= 2; smallest admissible r is strongest.
    {
      const int r = r_three;
      ++n_i;
      const bool first = static_cast<std::int64_t>(x) * (r - 2) >= static_cast<std::int64_t>(r - 1) * (delta - s);
      const bool second = static_cast<std::int64_t>(x + s) * (r - 1) >= static_cast<std::int64_t>(r) * delta;
      if (!first && !second)
        record(out, t, "component_size.clique_i", witness(r, "min((r-1)(delta-s)/(r-2), r delta/(r-1) - s)"));
      if (static_cast<std::int64_t>(s) * (r - 1) >= delta) {
        ++n_ii;
        if (!first) record(out, t, "component_size.clique_ii", witness(r, "(r-1)(delta-s)/(r-2)"));
      }
    }
    {
      const int r = r_low;
      if (static_cast<std::int64_t>(s) * (r - 1) < delta) {
        ++n_iii;
        if (static_cast<std::int64_t>(x + s) * (r - 1) < static_cast<std::int64_t>(r) * delta)
          record(out, t, "component_size.clique_iii", witness(r, "r delta/(r-1) - s"));
      }
    }
    if (has_girth) {
      ++n_girth;
      if (static_cast<std::int64_t>(x) < moore - s)
        record(out, t, "component_size.girth",
               {{"cut", cut}, {"component", part}, {"delta", delta}, {"girth", f.girth.value()}, {"cut_size", s},
                {"size", x}, {"bound", moore - s}});
    }
  };

  auto edge_side = [&](int size, int cut_degree_value, const json& set) {
    ++n_edge;
    if (size < moore)
      record(out, t, "component_size.edge_side",
             {{"set", set}, {"cut_degree", cut_degree_value}, {"delta", delta}, {"girth", f.girth.value()},
              {"size", size}, {"bound", moore}});
  };

  if (exhaustive(f.n, o.cut_cap)) {
    const auto rows = rows_of(g);
    const Mask full = full_mask(f.n);
    for (Mask s = 1; s < full; ++s) {
      const int cut_size = size_of(s);
      if (cut_size >= delta) continue;
      const auto parts = components_within(rows, full & ~s);
      if (parts.size() < 2) continue;
      for (Mask part : parts) component(cut_size, size_of(part), set_json(s), set_json(part));
    }
    if (has_girth) {
      for (Mask x = 1; x < full; ++x) {
        const int cut = cut_degree_of(rows, x);
        if (cut < delta) edge_side(size_of(x), cut, set_json(x));
      }
    }
  } else {
    if (f.kappa && *f.kappa < delta) {
      for (const auto& fam : witness_cut(g))
        for (const auto& part : fam.parts) component(fam.cut.size(), part.size(), set_json(fam.cut), set_json(part));
    }
    if (has_girth && f.kappa_edge && *f.kappa_edge < delta) {
      const auto w = edge_connectivity_witness(g);
      edge_side(w.side.size(), w.connectivity, set_json(w.side));
      const VertexSet other = w.side.complement();
      edge_side(other.size(), w.connectivity, set_json(other));
    }
  }
  add_count(out, "component_size.clique_i", n_i);
  add_count(out, "component_size.clique_ii", n_ii);
  add_count(out, "component_size.clique_iii", n_iii);
  add_count(out, "component_size.girth", n_girth);
  add_count(out, "component_size.edge_side", n_edge);
}

void check_fiedler_bounds(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out) {
  const Graph& g = t.graph;
  const auto& f = t.facts;
  if (!f.connected || f.n < 2) return;
  const int n = f.n;
  const double mu = *f.mu;
  std::uint64_t n_edge = 0, n_vertex = 0, n_chain = 0, n_var = 0;

  auto edge_quotient = [&](int x, int cut, const json& set) {
    ++n_edge;
    const double q = static_cast<double>(n) * cut / (static_cast<double>(x) * (n - x));
    if (mu > q + o.slack)
      record(out, t, "fiedler_bounds.edge_cut_quotient",
             {{"set", set}, {"cut_degree", cut}, {"mu", full_precision(mu)}, {"quotient", full_precision(q)}});
  };
  auto vertex_quotient = [&](int s, int ds, int x, const json& cut, const json& part) {
    ++n_vertex;
    const int y = n - s - x;
    const double denom = static_cast<double>(n) * (n - s) - static_cast<double>(x - y) * (x - y);
    const double q = static_cast<double>(n) * ds / denom;
    if (mu > q + o.slack)
      record(out, t, "fiedler_bounds.vertex_cut_quotient",
             {{"cut", cut}, {"component", part}, {"cut_degree", ds}, {"mu", full_precision(mu)},
              {"quotient", full_precision(q)}});
  };

  if (exhaustive(n, o.subset_cap)) {
    const auto rows = rows_of(g);
    const Mask full = full_mask(n);
    for (Mask x = 1; x < full; ++x) edge_quotient(size_of(x), cut_degree_of(rows, x), set_json(x));
  } else {
    const auto w = edge_connectivity_witness(g);
    edge_quotient(w.side.size(), w.connectivity, set_json(w.side));
    for (int i = 0; i < o.samples; ++i) {
      const VertexSet x = random_subset(n, t.rng);
      if (x.empty() || x.size() == n) continue;
      edge_quotient(x.size(), cut_degree(g, x), set_json(x));
    }
  }

  if (exhaustive(n, o.cut_cap)) {
    const auto rows = rows_of(g);
    const Mask full = full_mask(n);
    for (Mask s = 1; s < full; ++s) {
      const auto parts = components_within(rows, full & ~s);
      if (parts.size() < 2) continue;
      const int ds = cut_degree_of(rows, s);
      for (Mask part : parts) vertex_quotient(size_of(s), ds, size_of(part), set_json(s), set_json(part));
    }
  } else {
    for (const auto& fam : witness_cut(g)) {
      const int ds = cut_degree(g, fam.cut);
      for (const auto& part : fam.parts)
        vertex_quotient(fam.cut.size(), ds, part.size(), set_json(fam.cut), set_json(part));
    }
  }

  // mu <= kappa <= kappa' <= delta; the first link holds for non-complete graphs
  // only, since mu(K_n) = n while kappa(K_n) = n - 1.
  ++n_chain;
  const bool complete = f.m == static_cast<std::int64_t>(n) * (n - 1) / 2;
  const int kappa = *f.kappa;
  const int kappa_edge = *f.kappa_edge;
  const bool first_ok = complete ? std::abs(mu - n) <= o.slack : mu <= kappa + o.slack;
  if (!first_ok || kappa > kappa_edge || kappa_edge > f.delta)
    record(out, t, "fiedler_bounds.chain",
           {{"mu", full_precision(mu)}, {"kappa", kappa}, {"kappa_edge", kappa_edge}, {"delta", f.delta},
            {"complete", complete}});

  // The variational minimum is attained at the Fiedler vector.
  ++n_var;
  const auto x = fiedler_vector(g);
  const double q = fiedler_quotient(g, x);
  if (std::abs(q - mu) > o.slack * std::max(1.0, mu))
    record(out, t, "fiedler_bounds.variational", {{"mu", full_precision(mu)}, {"quotient", full_precision(q)}});

  add_count(out, "fiedler_bounds.edge_cut_quotient", n_edge);
  add_count(out, "fiedler_bounds.vertex_cut_quotient", n_vertex);
  add_count(out, "fiedler_bounds.chain", n_chain);
  add_count(out, "fiedler_bounds.variational", n_var);
}

void check_haemers_pair_bounds(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out) {
  const Graph& g = t.graph;
  const auto& f = t.facts;
  if (f.n < 2 || f.m == 0) return;
  const int n = f.n;
  const double mu1 = *f.mu1;
  const double mu = std::max(*f.mu, 0.0);
  const double rhs_h = std::pow((mu1 - mu) / (mu1 + mu), 2);
  const bool with_bh = f.connected;
  const double rhs_bh = with_bh ? (mu1 - mu) * (mu1 - mu) / (4.0 * mu1 * mu) : 0.0;
  std::uint64_t n_h = 0, n_bh = 0;

  auto within = [&](double lhs, double rhs) { return lhs <= rhs + o.slack * std::max(1.0, std::abs(rhs)); };
  auto pair = [&](int x, int y, const auto& xs, const auto& ys) {
    ++n_h;
    const double lhs = static_cast<double>(x) * y / (static_cast<double>(n - x) * (n - y));
    if (!within(lhs, rhs_h))
      record(out, t, "haemers_pairs.haemers",
             {{"x", set_json(xs)}, {"y", set_json(ys)}, {"lhs", full_precision(lhs)}, {"rhs", full_precision(rhs_h)}});
    if (with_bh) {
      ++n_bh;
      const double lhs_bh = static_cast<double>(x) * y / (static_cast<double>(n) * (n - x - y));
      if (!within(lhs_bh, rhs_bh))
        record(out, t, "haemers_pairs.brouwer_haemers",
               {{"x", set_json(xs)}, {"y", set_json(ys)}, {"lhs", full_precision(lhs_bh)}, {"rhs", full_precision(rhs_bh)}});
    }
  };

  if (exhaustive(n, o.pair_cap)) {
    const auto rows = rows_of(g);
    const Mask full = full_mask(n);
    for (Mask x = 1; x < full; ++x) {
      const Mask avail = full & ~x & ~neighbourhood(rows, x);
      // Every nonempty subset of the vertices with no neighbour in X.
      for (Mask y = avail; y != 0; y = (y - 1) & avail) pair(size_of(x), size_of(y), x, y);
    }
  } else {
    for (int i = 0; i < o.samples; ++i) {
      VertexSet x(n), y(n);
      for (int v = 0; v < n; ++v) {
        const auto draw = t.rng() % 3;
        if (draw == 1) x.insert(v);
        if (draw == 2) y.insert(v);
      }
      for (int v : y.members())
        if (g.neighbor_set(v).intersects(x)) y.erase(v);
      if (x.empty() || y.empty()) continue;
      pair(x.size(), y.size(), x, y);
    }
  }
  add_count(out, "haemers_pairs.haemers", n_h);
  add_count(out, "haemers_pairs.brouwer_haemers", n_bh);
}

void check_spectral_identities(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out) {
  const Graph& g = t.graph;
  const auto& f = t.facts;
  if (f.n < 2) return;
  const auto& values = f.laplacian_values;
  const double scale = std::max(1.0, static_cast<double>(2 * f.m));

  double trace = 0.0;
  int zeros = 0;
  double most_negative = 0.0;
  for (double v : values) {
    trace += v;
    most_negative = std::min(most_negative, v);
    if (std::abs(v) <= 1e-6) ++zeros;
  }
  if (std::abs(trace - static_cast<double>(2 * f.m)) > o.slack * scale)
    record(out, t, "spectral_identities.trace", {{"trace", full_precision(trace)}, {"twice_edges", 2 * f.m}});
  if (most_negative < -o.slack * scale)
    record(out, t, "spectral_identities.nonnegative", {{"smallest", full_precision(most_negative)}});
  const int comps = static_cast<int>(components(g).size());
  if (zeros != comps)
    record(out, t, "spectral_identities.kernel", {{"zero_eigenvalues", zeros}, {"components", comps}});

  // b mu_{n-1} >= (a+b) delta - lambda_2(aD + bA).
  struct Pencil {
    double a, b;
    const char* id;
  };
  constexpr Pencil kPencils[] = {{0.0, 1.0, "spectral_identities.courant_weyl_0_1"},
                                 {1.0, 1.0, "spectral_identities.courant_weyl_1_1"},
                                 {1.0, 2.0, "spectral_identities.courant_weyl_1_2"}};
  for (const auto& p : kPencils) {
    const double l2 = p.a == 0.0 ? *f.lambda2 : p.a == p.b ? *f.q2 : pencil_lambda2(g, p.a, p.b);
    const double lower = ((p.a + p.b) * f.delta - l2) / p.b;
    if (*f.mu < lower - o.slack * std::max(1.0, std::abs(lower)))
      record(out, t, p.id,
             {{"a", p.a}, {"b", p.b}, {"lambda2", full_precision(l2)}, {"mu", full_precision(*f.mu)},
              {"lower", full_precision(lower)}});
    add_count(out, p.id, 1);
  }
  add_count(out, "spectral_identities.trace", 1);
  add_count(out, "spectral_identities.nonnegative", 1);
  add_count(out, "spectral_identities.kernel", 1);
}

void check_turan(GraphUnderTest& t, const CampaignOptions&, CheckOutcome& out) {
  const auto& f = t.facts;
  add_count(out, "turan", 1);
  if (!turan_edge_bound_holds(t.graph, f.omega)) {
    const std::int64_t n = f.n;
    record(out, t, "turan", {{"edges", f.m}, {"omega", f.omega}, {"bound", ((f.omega - 1) * n * n) / (2 * f.omega)}});
  }
}

void check_theorem_soundness(GraphUnderTest& t, const CampaignOptions& o, CheckOutcome& out) {
  const auto& f = t.facts;
  if (!f.connected || f.n < 2) return;
  RowOptions ro;
  ro.eps = o.eps;
  ro.threshold_scale = o.threshold_scale;
  std::optional<VertexCutWitness> vertex_witness;
  std::optional<EdgeCutWitness> edge_witness;

  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const RowKey key : all_rows())
      out.push_back("soundness." + std::string(to_string(key.target)) + "." + std::string(to_string(key.theorem)));
    return out;
  }();
  const auto rows = all_rows();

  for (int k = 2; k <= f.delta; ++k) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const RowKey key = rows[i];
      const TheoremRow row = evaluate_row(f, key, k, ro);
      const std::string& id = ids[i];
      if (row.razor_edge(o.eps))
        out.razor_edges.push_back(RazorEdge{id, t.graph6, k, *row.threshold, *row.observed, *row.margin});
      if (!row.fired()) continue;
      ++out.checks_run[id];
      const int oracle = key.target == Target::Edge ? *f.kappa_edge : *f.kappa;
      if (oracle >= k) continue;
      json witness{{"k", k},
                   {"target", to_string(key.target)},
                   {"oracle", oracle},
                   {"threshold", full_precision(*row.threshold)},
                   {"observed", full_precision(*row.observed)},
                   {"margin", full_precision(*row.margin)},
                   {"threshold_scale", o.threshold_scale}};
      if (key.target == Target::Edge) {
        if (!edge_witness) edge_witness = edge_connectivity_witness(t.graph);
        witness["cut_side"] = set_json(edge_witness->side);
      } else {
        if (!vertex_witness) vertex_witness = vertex_connectivity_witness(t.graph);
        witness["cut"] = set_json(vertex_witness->cut);
      }
      record(out, t, id, std::move(witness));
    }
  }
}

CheckOutcome check_graph(const Graph& g, const CampaignOptions& options, std::uint64_t index) {
  GraphUnderTest t(g, options.seed, index);
  CheckOutcome out;
  for (Property p : options.properties) {
    switch (p) {
      case Property::SubsetSize: check_subset_size_lemma(t, options, out); break;
      case Property::ComponentSize: check_component_lemmas(t, options, out); break;
      case Property::FiedlerBounds: check_fiedler_bounds(t, options, out); break;
      case Property::HaemersPairs: check_haemers_pair_bounds(t, options, out); break;
      case Property::SpectralIdentities: check_spectral_identities(t, options, out); break;
      case Property::Turan: check_turan(t, options, out); break;
      case Property::Soundness: check_theorem_soundness(t, options, out); break;
    }
  }
  return out;
}

}  // namespace conncert
