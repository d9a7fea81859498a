#include "conncert/certify.hpp"

#include <array>
#include <cmath>

#include "conncert/error.hpp"
#include "conncert/graph6.hpp"
#include "conncert/invariants.hpp"
#include "conncert/spectra.hpp"

namespace conncert {

std::string_view to_string(Target target) { return target == Target::Edge ? "edge" : "vertex"; }

std::string_view to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Fired: return "fired";
    case RowStatus::NotFired: return "not_fired";
    case RowStatus::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

bool TheoremRow::razor_edge(double eps) const noexcept {
  return status != RowStatus::Inapplicable && !exact && margin && std::abs(*margin) <= eps;
}

namespace {

constexpr std::array<RowKey, 5> kEdgeRows{{
    {Target::Edge, TheoremId::SmallOrder},
    {Target::Edge, TheoremId::EdgeGirth},
    {Target::Edge, TheoremId::EdgeClique},
    {Target::Edge, TheoremId::Q2Transfer},
    {Target::Edge, TheoremId::Lambda2Transfer},
}};

constexpr std::array<RowKey, 6> kVertexRows{{
    {Target::Vertex, TheoremId::SmallOrder},
    {Target::Vertex, TheoremId::VertexGirth},
    {Target::Vertex, TheoremId::VertexClique},
    {Target::Vertex, TheoremId::VertexClique2},
    {Target::Vertex, TheoremId::RatioGirth},
    {Target::Vertex, TheoremId::RatioClique},
}};

constexpr std::array<RowKey, 15> kAllRows{{
    {Target::Edge, TheoremId::SmallOrder},
    {Target::Edge, TheoremId::EdgeGirth},
    {Target::Edge, TheoremId::EdgeClique},
    {Target::Edge, TheoremId::PriorDeltaPlusOne},
    {Target::Edge, TheoremId::PriorFourNinthsMoore},
    {Target::Edge, TheoremId::PriorF},
    {Target::Edge, TheoremId::Q2Transfer},
    {Target::Edge, TheoremId::Lambda2Transfer},
    {Target::Vertex, TheoremId::SmallOrder},
    {Target::Vertex, TheoremId::VertexGirth},
    {Target::Vertex, TheoremId::VertexClique},
    {Target::Vertex, TheoremId::VertexClique2},
    {Target::Vertex, TheoremId::RatioGirth},
    {Target::Vertex, TheoremId::RatioClique},
    {Target::Vertex, TheoremId::PriorNu},
}};

void decide(TheoremRow& row, double threshold, double observed, double margin, double eps) {
  row.threshold = threshold;
  row.observed = observed;
  row.margin = margin;
  bool fires = false;
  if (row.exact) {
    fires = row.strict ? margin > 0.0 : margin >= 0.0;
  } else {
    fires = row.strict ? margin > eps : margin >= -eps;
  }
  row.status = fires ? RowStatus::Fired : RowStatus::NotFired;
}

TheoremRow mark_inapplicable(TheoremRow row, std::string reason) {
  row.status = RowStatus::Inapplicable;
  row.reason = std::move(reason);
  return row;
}

Threshold mu_threshold(TheoremId id, const ParamSet& p) {
  switch (id) {
    case TheoremId::EdgeGirth: return edge_girth_threshold(p);
    case TheoremId::EdgeClique: return edge_clique_threshold(p);
    case TheoremId::VertexGirth: return vertex_girth_threshold(p);
    case TheoremId::VertexClique: return vertex_clique_threshold(p);
    case TheoremId::VertexClique2: return vertex_clique2_threshold(p);
    case TheoremId::PriorDeltaPlusOne: return prior_delta_plus_one_threshold(p);
    case TheoremId::PriorFourNinthsMoore: return prior_four_ninths_threshold(p);
    case TheoremId::PriorF: return prior_f_threshold(p);
    case TheoremId::PriorNu: return prior_nu_threshold(p);
    default: break;
  }
  throw Error(ErrorCode::Domain, "not a mu_{n-1} threshold: " + std::string(to_string(id)));
}

}  // namespace

Target target_of(TheoremId id) {
  switch (id) {
    case TheoremId::VertexGirth:
    case TheoremId::VertexClique:
    case TheoremId::VertexClique2:
    case TheoremId::RatioGirth:
    case TheoremId::RatioClique:
    case TheoremId::PriorNu: return Target::Vertex;
    default: return Target::Edge;
  }
}

std::span<const RowKey> certification_rows(Target target) {
  if (target == Target::Edge) return kEdgeRows;
  return kVertexRows;
}

std::span<const RowKey> all_rows() { return kAllRows; }

ParamSet params_of(const GraphFacts& facts, int k, std::optional<int> r_override) {
  ParamSet p;
  p.n = facts.n;
  p.delta = facts.delta;
  p.max_degree = facts.max_degree;
  p.girth = facts.girth;
  p.omega = r_override.value_or(facts.omega);
  p.k = k;
  return p;
}

GraphFacts compute_facts(const Graph& g, bool with_oracles) {
  GraphFacts f;
  f.n = g.order();
  f.m = g.edge_count();
  f.delta = g.min_degree();
  f.max_degree = g.max_degree();
  f.girth = girth(g);
  f.omega = clique_number(g);
  f.connected = is_connected(g);
  if (f.n >= 2) {
    f.laplacian_values = eigenvalues_sym(laplacian(g)).values;
    const auto& lap = f.laplacian_values;
    f.mu1 = lap.front();
    f.mu = lap[lap.size() - 2];
    f.lambda2 = eigenvalues_sym(adjacency(g)).values[1];
    f.q2 = eigenvalues_sym(signless_laplacian(g)).values[1];
  }
  if (with_oracles) {
    f.kappa = vertex_connectivity(g);
    f.kappa_edge = edge_connectivity(g);
  }
  return f;
}

TheoremRow evaluate_row(const GraphFacts& facts, RowKey key, int k, const RowOptions& options) {
  if (!facts.connected || facts.n < 2 || !facts.mu) throw Error(ErrorCode::Disconnected, "rows need a connected graph with n >= 2");
  const ParamSet p = params_of(facts, k, options.r_override);
  TheoremRow row;
  row.theorem = key.theorem;
  row.target = key.target;

  switch (key.theorem) {
    case TheoremId::SmallOrder: {
      row.strict = true;
      row.exact = true;
      if (p.k < 2 || p.delta < p.k) return mark_inapplicable(row, "requires delta >= k >= 2");
      if (!p.girth.is_finite()) return mark_inapplicable(row, "requires a finite girth");
      const auto twice = static_cast<double>(2 * moore_bound(p.delta, p.girth.value()));
      // Edge: n < 2N. Vertex, without knowing kappa: n < 2N - (delta - 1).
      const double bound = key.target == Target::Edge ? twice : twice - (p.delta - 1);
      decide(row, bound, static_cast<double>(p.n), bound - static_cast<double>(p.n), options.eps);
      return row;
    }
    case TheoremId::RatioGirth:
    case TheoremId::RatioClique: {
      row.strict = true;
      RatioCondition cond;
      try {
        cond = key.theorem == TheoremId::RatioGirth ? ratio_girth_condition(p) : ratio_clique_condition(p);
      } catch (const Error& e) {
        return mark_inapplicable(row, e.what());
      }
      const double ratio = *facts.mu1 / *facts.mu;
      decide(row, cond.cap, ratio, cond.cap - ratio, options.eps);
      return row;
    }
    case TheoremId::Q2Transfer:
    case TheoremId::Lambda2Transfer: {
      row.strict = false;
      const Threshold base = edge_girth_threshold(p);
      if (!base.applicable()) return mark_inapplicable(row, "edge girth threshold: " + base.reason);
      const double pval = *base.value * options.threshold_scale;
      const bool signless = key.theorem == TheoremId::Q2Transfer;
      // q2 <= 2 delta - p, or lambda2 <= delta - p.
      const double bound = (signless ? 2.0 : 1.0) * p.delta - pval;
      const double observed = signless ? *facts.q2 : *facts.lambda2;
      decide(row, bound, observed, bound - observed, options.eps);
      return row;
    }
    default: {
      Threshold th;
      try {
        th = mu_threshold(key.theorem, p);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PreconditionDelta) throw;
        row.strict = true;
        return mark_inapplicable(row, e.what());
      }
      row.strict = th.strict;
      if (!th.applicable()) return mark_inapplicable(row, th.reason);
      const double value = *th.value * options.threshold_scale;
      decide(row, value, *facts.mu, *facts.mu - value, options.eps);
      return row;
    }
  }
}

std::vector<TheoremRow> Certificate::fired() const {
  std::vector<TheoremRow> out;
  for (const auto& row : rows)
    if (row.fired()) out.push_back(row);
  return out;
}

Certificate certify(const GraphFacts& facts, Target target, int k, const CertifyOptions& options) {
  if (k < 2) throw Error(ErrorCode::Domain, "target connectivity k must be at least 2");
  if (!facts.connected) throw Error(ErrorCode::Disconnected, "certification needs a connected graph");
  if (facts.delta < k) throw Error(ErrorCode::DegreeTooSmall, "minimum degree is below k");
  if (options.rows.r_override && *options.rows.r_override < facts.omega)
    throw Error(ErrorCode::Domain, "r override is below the clique number");

  Certificate cert;
  cert.target = target;
  cert.k = k;
  cert.r = options.rows.r_override.value_or(facts.omega);
  for (auto key : certification_rows(target)) {
    cert.rows.push_back(evaluate_row(facts, key, k, options.rows));
    cert.certified = cert.certified || cert.rows.back().fired();
  }
  if (options.with_oracle) {
    const auto oracle = target == Target::Edge ? facts.kappa_edge : facts.kappa;
    if (!oracle) throw Error(ErrorCode::Domain, "oracle requested but not computed");
    cert.oracle = OracleCheck{*oracle, !cert.certified || *oracle >= k};
  }
  return cert;
}

Certificate certify(const Graph& g, Target target, int k, const CertifyOptions& options) {
  return certify(compute_facts(g, options.with_oracle), target, k, options);
}

AnalysisReport analyze(const Graph& g, const RowOptions& options) {
  AnalysisReport report;
  report.graph6 = write_graph6(g);
  report.facts = compute_facts(g, true);
  if (report.facts.connected && report.facts.n >= 2) {
    CertifyOptions copts;
    copts.with_oracle = true;
    copts.rows = options;
    for (int k = 2; k <= report.facts.delta; ++k)
      for (auto target : {Target::Edge, Target::Vertex}) report.certificates.push_back(certify(report.facts, target, k, copts));
  }
  return report;
}

namespace {

Threshold guarded(TheoremId id, const ParamSet& p) {
  try {
    return mu_threshold(id, p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PreconditionDelta) throw;
    return Threshold{id, true, std::nullopt, e.what()};
  }
}

}  // namespace

ComparisonReport compare_thresholds(const ParamSet& p) {
  ComparisonReport report;
  report.params = p;
  constexpr std::array<TheoremId, 9> kRows{
      TheoremId::EdgeGirth,   TheoremId::EdgeClique,    TheoremId::PriorDeltaPlusOne,
      TheoremId::PriorFourNinthsMoore, TheoremId::PriorF, TheoremId::VertexGirth,
      TheoremId::VertexClique, TheoremId::VertexClique2, TheoremId::PriorNu};
  std::optional<double> best_edge_value;
  std::optional<double> best_vertex_value;
  for (auto id : kRows) {
    ComparisonRow row{target_of(id), guarded(id, p)};
    if (row.threshold.applicable()) {
      auto& best_value = row.target == Target::Edge ? best_edge_value : best_vertex_value;
      auto& best_id = row.target == Target::Edge ? report.best_edge : report.best_vertex;
      if (!best_value || *row.threshold.value < *best_value) {
        best_value = row.threshold.value;
        best_id = id;
      }
    }
    report.rows.push_back(std::move(row));
  }

  auto value_of = [&](TheoremId id) -> std::optional<double> {
    for (const auto& row : report.rows)
      if (row.threshold.theorem == id) return row.threshold.value;
    return std::nullopt;
  };
  auto make_check = [&](std::string name, TheoremId improved, TheoremId baseline) {
    ImprovementCheck check;
    check.name = std::move(name);
    check.improved = improved;
    check.baseline = baseline;
    check.improved_value = value_of(improved);
    check.baseline_value = value_of(baseline);
    return check;
  };
  // Floating-point echo of an exact strict inequality between thresholds.
  auto consistent = [](const ImprovementCheck& c) {
    return c.improved_value && c.baseline_value && *c.improved_value <= *c.baseline_value + 1e-9;
  };

  const bool degree_ok = p.k >= 2 && p.delta >= p.k;
  const bool girth_ok = p.girth.is_finite() && p.delta >= 2;
  const std::int64_t moore = girth_ok ? moore_bound(p.delta, p.girth.value()) : 0;
  const std::int64_t n = p.n;

  // Edge threshold against the (4/9)N form: 81 N (n-N) > 4N (9n - 4N).
  auto four_ninths = make_check("edge_girth_vs_four_ninths_moore", TheoremId::EdgeGirth, TheoremId::PriorFourNinthsMoore);
  four_ninths.preconditions_hold = degree_ok && girth_ok && p.delta >= 3 && n >= 2 * moore;
  if (four_ninths.preconditions_hold)
    four_ninths.holds = 81 * moore * (n - moore) > 4 * moore * (9 * n - 4 * moore) && consistent(four_ninths);
  report.improvements.push_back(four_ninths);

  // Edge threshold against f(delta, g): N (n-N) > f (n-f).
  auto f_check = make_check("edge_girth_vs_f", TheoremId::EdgeGirth, TheoremId::PriorF);
  f_check.preconditions_hold = degree_ok && girth_ok && p.delta >= 3 && p.girth.value() >= 5 && n >= 2 * moore;
  if (f_check.preconditions_hold) {
    const std::int64_t f = f_prior(p.delta, p.girth.value());
    f_check.holds = moore * (n - moore) > f * (n - f) && consistent(f_check);
  }
  report.improvements.push_back(f_check);

  // Vertex threshold against nu: n(n-k+1) - (n-2N+k-1)^2 > 2 nu (n - nu).
  auto nu_check = make_check("vertex_girth_vs_nu", TheoremId::VertexGirth, TheoremId::PriorNu);
  nu_check.preconditions_hold = degree_ok && girth_ok && n >= 2 * moore - p.k + 1;
  if (nu_check.preconditions_hold) {
    const std::int64_t nu = nu_prior(p.delta, p.girth.value(), p.k);
    const std::int64_t base = n - 2 * moore + p.k - 1;
    nu_check.holds = n * (n - p.k + 1) - base * base > 2 * nu * (n - nu) && consistent(nu_check);
  }
  report.improvements.push_back(nu_check);
  return report;
}

}  // namespace conncert
