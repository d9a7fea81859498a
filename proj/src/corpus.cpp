#include "conncert/corpus.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include "conncert/error.hpp"
#include "conncert/graph6.hpp"
#include "conncert/invariants.hpp"

namespace conncert {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

void check_order(int n) {
  if (n < 1 || n > kMaxExhaustiveOrder)
    throw Error(ErrorCode::TooLarge, "exhaustive enumeration supports 1 <= n <= " + std::to_string(kMaxExhaustiveOrder));
}

// Adjacency rows from an edge mask; n <= 8 so each row fits a byte.
std::array<std::uint32_t, kMaxExhaustiveOrder> rows_from_mask(int n, std::uint64_t mask) {
  std::array<std::uint32_t, kMaxExhaustiveOrder> rows{};
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) {
        rows[static_cast<std::size_t>(i)] |= 1U << j;
        rows[static_cast<std::size_t>(j)] |= 1U << i;
      }
    }
  }
  return rows;
}

}  // namespace

std::uint64_t labeled_graph_count(int n) {
  check_order(n);
  return std::uint64_t{1} << pair_count(n);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1U) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

bool mask_passes(int n, std::uint64_t mask, const GraphFilter& filter) {
  const auto rows = rows_from_mask(n, mask);
  for (int v = 0; v < n; ++v)
    if (std::popcount(rows[static_cast<std::size_t>(v)]) < filter.min_degree) return false;
  if (filter.connected) {
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~seen;
      seen |= next;
    }
    if (std::popcount(seen) != n) return false;
  }
  if (filter.min_girth > 0) {
    const Girth g = girth(graph_from_edge_mask(n, mask));
    if (!g.is_finite() || g.value() < filter.min_girth) return false;
  }
  return true;
}

void enumerate_labeled_range(int n, std::uint64_t begin, std::uint64_t end, const GraphFilter& filter,
                             const std::function<void(std::uint64_t, const Graph&)>& visit) {
  const std::uint64_t total = labeled_graph_count(n);
  end = std::min(end, total);
  for (std::uint64_t mask = begin; mask < end; ++mask)
    if (mask_passes(n, mask, filter)) visit(mask, graph_from_edge_mask(n, mask));
}

std::vector<Graph> enumerate_labeled(int n, const GraphFilter& filter) {
  std::vector<Graph> out;
  enumerate_labeled_range(n, 0, labeled_graph_count(n), filter,
                          [&](std::uint64_t, const Graph& g) { out.push_back(g); });
  return out;
}

namespace {

Graph draw_gnp(int n, double p, std::mt19937_64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::Domain, "edge probability must lie in [0, 1]");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph random_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return draw_gnp(n, p, rng);
}

std::vector<Graph> random_gnp_corpus(int n, double p, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) out.push_back(draw_gnp(n, p, rng));
  return out;
}

namespace {

void expect_params(std::string_view family, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count)
    throw Error(ErrorCode::Domain, std::string(family) + " takes " + std::to_string(count) + " parameter(s)");
}

Graph ring_plus(int n, const std::vector<Edge>& chords) {
  std::vector<Edge> edges = chords;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph named(std::string_view family, const std::vector<int>& params) {
  std::vector<Edge> edges;
  if (family == "complete") {
    expect_params(family, params, 1);
    const int n = params[0];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
  }
  if (family == "cycle") {
    expect_params(family, params, 1);
    if (params[0] < 3) throw Error(ErrorCode::Domain, "cycle needs n >= 3");
    return ring_plus(params[0], {});
  }
  if (family == "path") {
    expect_params(family, params, 1);
    for (int i = 0; i + 1 < params[0]; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(params[0], edges);
  }
  if (family == "star") {
    expect_params(family, params, 1);
    if (params[0] < 0) throw Error(ErrorCode::Domain, "star needs a nonnegative leaf count");
    for (int leaf = 1; leaf <= params[0]; ++leaf) edges.emplace_back(0, leaf);
    return Graph::from_edges(params[0] + 1, edges);
  }
  if (family == "complete_bipartite") {
    expect_params(family, params, 2);
    const int a = params[0];
    const int b = params[1];
    if (a < 0 || b < 0) throw Error(ErrorCode::Domain, "part sizes must be nonnegative");
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
  }
  if (family == "petersen") {
    expect_params(family, params, 0);
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);       // outer cycle
      edges.emplace_back(i, i + 5);             // spoke
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edges(10, edges);
  }
  if (family == "heawood") {
    expect_params(family, params, 0);
    // LCF notation [5, -5]^7.
    for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
    return ring_plus(14, edges);
  }
  throw Error(ErrorCode::UnknownFamily, std::string(family));
}

Graph named_from_string(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view family = text.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view token = rest.substr(0, comma);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw Error(ErrorCode::Domain, "bad family parameter '" + std::string(token) + "'");
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return named(family, params);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return read_graph6_stream(in);
}

std::string describe(const CorpusSpec& spec) {
  std::ostringstream out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ExhaustiveSpec>) {
          out << "exhaustive n=" << s.min_order << ".." << s.max_order << (s.filter.connected ? " connected" : "")
              << " min_degree=" << s.filter.min_degree << " min_girth=" << s.filter.min_girth;
        } else if constexpr (std::is_same_v<T, RandomSpec>) {
          out << "gnp n=" << s.n << " p=" << s.p << " count=" << s.count << " seed=" << s.seed;
        } else if constexpr (std::is_same_v<T, NamedSpec>) {
          out << "named " << s.family;
        } else {
          out << "file " << s.path;
        }
      },
      spec);
  return out.str();
}

}  // namespace conncert
