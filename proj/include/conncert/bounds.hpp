#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "conncert/invariants.hpp"

namespace conncert {

/// Every sufficient condition the library can evaluate: the small-order rule,
/// the seven girth/clique results this project certifies with, four earlier
/// thresholds kept for comparison, and the two eigenvalue-transfer forms.
enum class TheoremId {
  SmallOrder,
  EdgeGirth,
  EdgeClique,
  VertexGirth,
  VertexClique,
  VertexClique2,
  RatioGirth,
  RatioClique,
  PriorDeltaPlusOne,
  PriorFourNinthsMoore,
  PriorF,
  PriorNu,
  Q2Transfer,
  Lambda2Transfer,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

/// Graph parameters the thresholds are functions of. `omega` is used as the
/// clique bound r.
struct ParamSet {
  std::int64_t n = 0;
  int delta = 0;
  int max_degree = 0;
  Girth girth = Girth::acyclic();
  int omega = 1;
  int k = 2;
};

/// Right-hand side of one sufficient condition. `value` is empty exactly when
/// a precondition fails; `reason` then says which.
struct Threshold {
  TheoremId theorem = TheoremId::EdgeGirth;
  bool strict = false;
  std::optional<double> value;
  std::string reason;

  bool applicable() const noexcept { return value.has_value(); }
};

// Closed-form integers.
std::int64_t moore_bound(int delta, int girth);
std::int64_t phi(int delta, int r);
std::int64_t f_prior(int delta, int girth);
std::int64_t nu_prior(int delta, int girth, int k);

// mu_{n-1} thresholds.
Threshold edge_girth_threshold(const ParamSet& p);
Threshold edge_clique_threshold(const ParamSet& p);
Threshold vertex_girth_threshold(const ParamSet& p);
Threshold vertex_clique_threshold(const ParamSet& p);
/// Throws PreconditionDelta when delta <= (k-1)(r-1).
Threshold vertex_clique2_threshold(const ParamSet& p);

/// Vertex girth threshold with the Moore bound replaced by an arbitrary
/// component-size bound; vertex_clique2 at r = 2 is this with bound 2*delta.
Threshold vertex_threshold_for_order_bound(const ParamSet& p, std::int64_t order_bound, TheoremId id);

// Earlier results, used for comparison and in the soundness campaign.
Threshold prior_delta_plus_one_threshold(const ParamSet& p);
Threshold prior_four_ninths_threshold(const ParamSet& p);
Threshold prior_f_threshold(const ParamSet& p);
Threshold prior_nu_threshold(const ParamSet& p);

/// mu_1 / mu_{n-1} < cap = s + sqrt(s^2 - 1), equivalently
/// mu_{n-1} / mu_1 > lower = s - sqrt(s^2 - 1).
struct RatioCondition {
  double s = 1.0;
  double cap = 1.0;
  double lower = 1.0;
};

RatioCondition ratio_from_s(double s);
/// Throws Domain when n <= N(delta, g) or the hypotheses fail.
RatioCondition ratio_girth_condition(const ParamSet& p);
/// Throws PreconditionDelta or Domain.
RatioCondition ratio_clique_condition(const ParamSet& p);

struct SmallOrderVerdict {
  bool edge_forced = false;    ///< kappa'(G) = delta(G)
  bool vertex_forced = false;  ///< kappa(G) = delta(G)
};

/// Order small relative to the Moore bound forces connectivity to equal the
/// minimum degree. Without a kappa hint the vertex test assumes kappa <= delta-1.
SmallOrderVerdict small_order_rule(const ParamSet& p, std::optional<int> kappa_hint = std::nullopt);

/// Whether lambda_2(aD + bA) < (a+b) delta - b p (strict) or <= (non-strict),
/// which in turn gives mu_{n-1} > p (resp. >= p).
bool courant_weyl_transfer(double lambda2_ab, double a, double b, int delta, double p, bool strict);

}  // namespace conncert
