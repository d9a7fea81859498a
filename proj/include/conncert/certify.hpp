#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conncert/bounds.hpp"
#include "conncert/graph.hpp"

namespace conncert {

enum class Target { Edge, Vertex };

std::string_view to_string(Target target);

/// Everything the theorem rows consume, computed once per graph.
struct GraphFacts {
  int n = 0;
  std::int64_t m = 0;
  int delta = 0;
  int max_degree = 0;
  Girth girth = Girth::acyclic();
  int omega = 1;
  bool connected = false;
  // Spectral quantities; absent for n < 2.
  std::optional<double> mu1;
  std::optional<double> mu;  ///< algebraic connectivity
  std::optional<double> lambda2;
  std::optional<double> q2;
  std::vector<double> laplacian_values;  ///< descending
  // Exact oracles; filled on request.
  std::optional<int> kappa;
  std::optional<int> kappa_edge;
};

GraphFacts compute_facts(const Graph& g, bool with_oracles);

/// Numerical slack for "observed vs threshold" comparisons.
inline constexpr double kDefaultEpsilon = 1e-9;

struct RowOptions {
  double eps = kDefaultEpsilon;
  /// Multiplies every mu_{n-1} threshold; 1 in production. The verification
  /// harness uses other values to prove it can detect violations.
  double threshold_scale = 1.0;
  std::optional<int> r_override;
};

enum class RowStatus { Fired, NotFired, Inapplicable };

std::string_view to_string(RowStatus status);

/// One evaluated sufficient condition. margin > 0 means the hypothesis holds
/// with room; for strict rows it must exceed eps to fire, for non-strict rows
/// it may dip to -eps.
struct TheoremRow {
  TheoremId theorem = TheoremId::SmallOrder;
  Target target = Target::Edge;
  RowStatus status = RowStatus::Inapplicable;
  bool strict = false;
  bool exact = false;  ///< integer comparison, never a razor edge
  std::optional<double> threshold;
  std::optional<double> observed;
  std::optional<double> margin;
  std::string reason;

  bool fired() const noexcept { return status == RowStatus::Fired; }
  /// Applicable row whose margin sits within eps of zero.
  bool razor_edge(double eps) const noexcept;
};

struct RowKey {
  Target target;
  TheoremId theorem;
};

/// Rows consulted by certify_edge / certify_vertex.
std::span<const RowKey> certification_rows(Target target);
/// Every row for both targets (small-order appears once per target), as used
/// by the soundness campaign.
std::span<const RowKey> all_rows();

/// Evaluates one row for target connectivity k. `facts` must describe a
/// connected graph with n >= 2.
TheoremRow evaluate_row(const GraphFacts& facts, RowKey key, int k, const RowOptions& options);

struct OracleCheck {
  int value = 0;
  bool agrees = true;  ///< certified implies value >= k
};

struct Certificate {
  Target target = Target::Edge;
  int k = 2;
  int r = 1;
  bool certified = false;
  std::vector<TheoremRow> rows;
  std::optional<OracleCheck> oracle;

  std::vector<TheoremRow> fired() const;
};

struct CertifyOptions {
  bool with_oracle = false;
  RowOptions rows;
};

/// Throws Disconnected, DegreeTooSmall (delta < k) or Domain (k < 2, or an r
/// override below the clique number).
Certificate certify(const Graph& g, Target target, int k, const CertifyOptions& options = {});
Certificate certify(const GraphFacts& facts, Target target, int k, const CertifyOptions& options = {});

inline Certificate certify_edge(const Graph& g, int k, const CertifyOptions& options = {}) {
  return certify(g, Target::Edge, k, options);
}
inline Certificate certify_vertex(const Graph& g, int k, const CertifyOptions& options = {}) {
  return certify(g, Target::Vertex, k, options);
}

struct AnalysisReport {
  std::string graph6;
  GraphFacts facts;
  /// Edge and vertex certificates for k = 2..delta; empty unless connected.
  std::vector<Certificate> certificates;
};

AnalysisReport analyze(const Graph& g, const RowOptions& options = {});

struct ComparisonRow {
  Target target = Target::Edge;
  Threshold threshold;
};

/// Strict improvement of a new threshold over an earlier one, decided on the
/// integer denominators and echoed in floating point.
struct ImprovementCheck {
  std::string name;
  TheoremId improved;
  TheoremId baseline;
  bool preconditions_hold = false;
  bool holds = false;
  std::optional<double> improved_value;
  std::optional<double> baseline_value;
};

struct ComparisonReport {
  ParamSet params;
  std::vector<ComparisonRow> rows;
  std::optional<TheoremId> best_edge;
  std::optional<TheoremId> best_vertex;
  std::vector<ImprovementCheck> improvements;
};

ComparisonReport compare_thresholds(const ParamSet& p);

ParamSet params_of(const GraphFacts& facts, int k, std::optional<int> r_override = std::nullopt);

}  // namespace conncert
