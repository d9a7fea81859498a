#include "conncert/bounds.hpp"

#include <array>
#include <cmath>
#include <limits>

#include <boost/rational.hpp>

#include "conncert/error.hpp"

namespace conncert {

namespace {

using Rational = boost::rational<std::int64_t>;

constexpr std::array<std::pair<TheoremId, std::string_view>, 14> kTheoremNames{{
    {TheoremId::SmallOrder, "small_order"},
    {TheoremId::EdgeGirth, "edge_girth"},
    {TheoremId::EdgeClique, "edge_clique"},
    {TheoremId::VertexGirth, "vertex_girth"},
    {TheoremId::VertexClique, "vertex_clique"},
    {TheoremId::VertexClique2, "vertex_clique2"},
    {TheoremId::RatioGirth, "ratio_girth"},
    {TheoremId::RatioClique, "ratio_clique"},
    {TheoremId::PriorDeltaPlusOne, "prior_delta_plus_one"},
    {TheoremId::PriorFourNinthsMoore, "prior_four_ninths_moore"},
    {TheoremId::PriorF, "prior_f"},
    {TheoremId::PriorNu, "prior_nu"},
    {TheoremId::Q2Transfer, "q2_transfer"},
    {TheoremId::Lambda2Transfer, "lambda2_transfer"},
}};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Domain, "integer overflow in bound");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Domain, "integer overflow in bound");
  return out;
}

/// sum_{i=from}^{to} base^i
std::int64_t power_sum(std::int64_t base, int from, int to) {
  std::int64_t total = 0;
  std::int64_t term = 1;
  for (int i = 0; i <= to; ++i) {
    if (i >= from) total = checked_add(total, term);
    if (i < to) term = checked_mul(term, base);
  }
  return total;
}

int half_girth(int g) { return (g - 1) / 2; }

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

Threshold inapplicable(TheoremId id, bool strict, std::string reason) {
  return Threshold{id, strict, std::nullopt, std::move(reason)};
}

Threshold applicable(TheoremId id, bool strict, const Rational& value) { return Threshold{id, strict, to_double(value), {}}; }

/// delta >= k >= 2, shared by most rows.
std::optional<std::string> degree_guard(const ParamSet& p) {
  if (p.k < 2) return "requires k >= 2";
  if (p.delta < p.k) return "requires delta >= k";
  return std::nullopt;
}

/// (k-1) n / (b (n - b)) for a component-size bound b; inapplicable if n <= b.
Threshold edge_threshold_for_side_bound(const ParamSet& p, const Rational& side, TheoremId id, std::string_view name) {
  const Rational n(p.n);
  if (n <= side) return inapplicable(id, false, "requires n > " + std::string(name));
  return applicable(id, false, Rational(p.k - 1) * n / (side * (n - side)));
}

/// n (k-1) Delta / (n (n-k+1) - base^2), with base >= 0 and a positive denominator.
Threshold vertex_threshold_from_base(const ParamSet& p, const Rational& base, TheoremId id) {
  if (base < 0) return inapplicable(id, true, "component-size bound leaves no room: base term is negative");
  const Rational denominator = Rational(checked_mul(p.n, p.n - p.k + 1)) - base * base;
  if (denominator <= 0) return inapplicable(id, true, "nonpositive denominator");
  return applicable(id, true, Rational(checked_mul(checked_mul(p.n, p.k - 1), p.max_degree)) / denominator);
}

}  // namespace

std::string_view to_string(TheoremId id) {
  for (auto [key, name] : kTheoremNames)
    if (key == id) return name;
  return "unknown";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (auto [key, label] : kTheoremNames)
    if (label == name) return key;
  return std::nullopt;
}

std::int64_t moore_bound(int delta, int girth) {
  if (delta < 2 || girth < 3) throw Error(ErrorCode::Domain, "Moore bound needs delta >= 2 and g >= 3");
  const int t = half_girth(girth);
  if (girth % 2 == 1) return checked_add(1, checked_mul(delta, power_sum(delta - 1, 0, t - 1)));
  return checked_mul(2, power_sum(delta - 1, 0, t));
}

std::int64_t phi(int delta, int r) {
  if (r < 2) throw Error(ErrorCode::Domain, "phi needs r >= 2");
  if (delta < 1) throw Error(ErrorCode::Domain, "phi needs delta >= 1");
  const std::int64_t turan_side = (static_cast<std::int64_t>(r) * delta) / (r - 1);
  return std::max<std::int64_t>(delta + 1, turan_side);
}

std::int64_t f_prior(int delta, int girth) {
  if (delta < 2 || girth < 3) throw Error(ErrorCode::Domain, "f needs delta >= 2 and g >= 3");
  if (delta == 2) return girth;
  const int t = half_girth(girth);
  return moore_bound(delta, girth) - (t >= 2 ? power_sum(delta - 1, 1, t - 1) : 0);
}

std::int64_t nu_prior(int delta, int girth, int k) {
  if (k < 2 || delta < k) throw Error(ErrorCode::Domain, "nu needs delta >= k >= 2");
  if (girth < 3) throw Error(ErrorCode::Domain, "nu needs g >= 3");
  const int t = half_girth(girth);
  if (girth % 2 == 0 && delta == 2) return 2 * t + 1;
  return moore_bound(delta, girth) - checked_mul(k - 1, power_sum(delta - 1, 0, t - 1));
}

Threshold edge_girth_threshold(const ParamSet& p) {
  constexpr auto id = TheoremId::EdgeGirth;
  if (auto reason = degree_guard(p)) return inapplicable(id, false, *reason);
  if (!p.girth.is_finite()) return inapplicable(id, false, "requires a finite girth");
  return edge_threshold_for_side_bound(p, Rational(moore_bound(p.delta, p.girth.value())), id, "N(delta,g)");
}

Threshold edge_clique_threshold(const ParamSet& p) {
  constexpr auto id = TheoremId::EdgeClique;
  if (auto reason = degree_guard(p)) return inapplicable(id, false, *reason);
  if (p.omega < 2) return inapplicable(id, false, "requires r >= 2");
  return edge_threshold_for_side_bound(p, Rational(phi(p.delta, p.omega)), id, "phi(delta,r)");
}

Threshold vertex_threshold_for_order_bound(const ParamSet& p, std::int64_t order_bound, TheoremId id) {
  const Rational base(p.n - 2 * order_bound + p.k - 1);
  if (base < 0) return inapplicable(id, true, "requires n >= 2N - k + 1");
  return vertex_threshold_from_base(p, base, id);
}

Threshold vertex_girth_threshold(const ParamSet& p) {
  constexpr auto id = TheoremId::VertexGirth;
  if (auto reason = degree_guard(p)) return inapplicable(id, true, *reason);
  if (!p.girth.is_finite()) return inapplicable(id, true, "requires a finite girth");
  return vertex_threshold_for_order_bound(p, moore_bound(p.delta, p.girth.value()), id);
}

Threshold vertex_clique_threshold(const ParamSet& p) {
  constexpr auto id = TheoremId::VertexClique;
  if (auto reason = degree_guard(p)) return inapplicable(id, true, *reason);
  const std::int64_t r = p.omega;
  if (r < 3) return inapplicable(id, true, "requires r >= 3");
  const Rational n(p.n);
  const Rational base_low = n - Rational(2 * (r - 1) * p.delta, r - 2) + Rational(r * (p.k - 1), r - 2);
  const Rational base_high = n - Rational(2 * r * p.delta, r - 1) + Rational(p.k - 1);
  if (base_low < 0 || base_high < 0) return inapplicable(id, true, "a squared base term is negative");
  const Rational larger = std::max(base_low * base_low, base_high * base_high);
  const Rational denominator = Rational(checked_mul(p.n, p.n - p.k + 1)) - larger;
  if (denominator <= 0) return inapplicable(id, true, "nonpositive denominator");
  return applicable(id, true, Rational(checked_mul(checked_mul(p.n, p.k - 1), p.max_degree)) / denominator);
}

Threshold vertex_clique2_threshold(const ParamSet& p) {
  constexpr auto id = TheoremId::VertexClique2;
  const std::int64_t r = p.omega;
  if (p.k < 2) return inapplicable(id, true, "requires k >= 2");
  if (r < 2) return inapplicable(id, true, "requires r >= 2");
  if (p.delta <= (p.k - 1) * (r - 1)) throw Error(ErrorCode::PreconditionDelta, "requires delta > (k-1)(r-1)");
  const Rational base = Rational(p.n) - Rational(2 * r * p.delta, r - 1) + Rational(p.k - 1);
  return vertex_threshold_from_base(p, base, id);
}

Threshold prior_delta_plus_one_threshold(const ParamSet& p) {
  constexpr auto id = TheoremId::PriorDeltaPlusOne;
  if (auto reason = degree_guard(p)) return inapplicable(id, false, *reason);
  return edge_threshold_for_side_bound(p, Rational(p.delta + 1), id, "delta + 1");
}

Threshold prior_four_ninths_threshold(const ParamSet& p) {
  constexpr auto id = TheoremId::PriorFourNinthsMoore;
  if (auto reason = degree_guard(p)) return inapplicable(id, false, *reason);
  if (p.delta < 3) return inapplicable(id, false, "requires delta >= 3");
  if (!p.girth.is_finite()) return inapplicable(id, false, "requires a finite girth");
  return edge_threshold_for_side_bound(p, Rational(4 * moore_bound(p.delta, p.girth.value()), 9), id, "(4/9)N(delta,g)");
}

Threshold prior_f_threshold(const ParamSet& p) {
  constexpr auto id = TheoremId::PriorF;
  if (auto reason = degree_guard(p)) return inapplicable(id, false, *reason);
  if (!p.girth.is_finite()) return inapplicable(id, false, "requires a finite girth");
  return edge_threshold_for_side_bound(p, Rational(f_prior(p.delta, p.girth.value())), id, "f(delta,g)");
}

Threshold prior_nu_threshold(const ParamSet& p) {
  constexpr auto id = TheoremId::PriorNu;
  if (auto reason = degree_guard(p)) return inapplicable(id, false, *reason);
  if (!p.girth.is_finite()) return inapplicable(id, false, "requires a finite girth");
  const std::int64_t nu = nu_prior(p.delta, p.girth.value(), p.k);
  if (nu <= 0) return inapplicable(id, false, "requires nu > 0");
  if (p.n <= nu) return inapplicable(id, false, "requires n > nu(delta,g,k)");
  const Rational numerator(checked_mul(checked_mul(p.n, p.k - 1), p.max_degree));
  return applicable(id, false, numerator / Rational(checked_mul(2 * nu, p.n - nu)));
}

RatioCondition ratio_from_s(double s) {
  const double root = std::sqrt(std::max(0.0, s * s - 1.0));
  const double cap = s + root;
  return {s, cap, 1.0 / cap};
}

namespace {

RatioCondition ratio_for_side(const ParamSet& p, const Rational& side) {
  const Rational n(p.n);
  if (n <= side) throw Error(ErrorCode::Domain, "requires n > the component-size bound");
  const Rational first = side - Rational(p.k - 1);
  if (first <= 0) throw Error(ErrorCode::Domain, "requires the component-size bound to exceed k - 1");
  const Rational s = Rational(2) * first * (n - side) / (n * Rational(p.k - 1)) + Rational(1);
  return ratio_from_s(to_double(s));
}

}  // namespace

RatioCondition ratio_girth_condition(const ParamSet& p) {
  if (auto reason = degree_guard(p)) throw Error(ErrorCode::Domain, *reason);
  if (!p.girth.is_finite()) throw Error(ErrorCode::Domain, "requires a finite girth");
  return ratio_for_side(p, Rational(moore_bound(p.delta, p.girth.value())));
}

RatioCondition ratio_clique_condition(const ParamSet& p) {
  const std::int64_t r = p.omega;
  if (p.k < 2 || r < 2) throw Error(ErrorCode::Domain, "requires r >= 2 and k >= 2");
  if (p.delta <= (p.k - 1) * (r - 1)) throw Error(ErrorCode::PreconditionDelta, "requires delta > (k-1)(r-1)");
  return ratio_for_side(p, Rational(r * p.delta, r - 1));
}

SmallOrderVerdict small_order_rule(const ParamSet& p, std::optional<int> kappa_hint) {
  if (p.delta < 2) throw Error(ErrorCode::Domain, "small-order rule needs delta >= 2");
  if (!p.girth.is_finite()) throw Error(ErrorCode::Domain, "small-order rule needs a finite girth");
  const std::int64_t twice = checked_mul(2, moore_bound(p.delta, p.girth.value()));
  const int kappa = kappa_hint.value_or(p.delta - 1);
  return {p.n < twice, p.n < twice - kappa};
}

bool courant_weyl_transfer(double lambda2_ab, double a, double b, int delta, double p, bool strict) {
  if (!(b > 0.0) || !(a >= -b)) throw Error(ErrorCode::PencilDomain, "need b > 0 and a >= -b");
  if (!(p >= 0.0)) throw Error(ErrorCode::Domain, "need p >= 0");
  const double rhs = (a + b) * delta - b * p;
  return strict ? lambda2_ab < rhs : lambda2_ab <= rhs;
}

}  // namespace conncert
