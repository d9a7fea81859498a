#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "conncert/graph.hpp"

namespace conncert {

struct GraphFilter {
  bool connected = false;
  int min_degree = 0;
  int min_girth = 0;  ///< 0 disables; forests never pass a positive bound
};

/// Largest order accepted by exhaustive enumeration (2^28 edge masks).
inline constexpr int kMaxExhaustiveOrder = 8;

/// 2^(n(n-1)/2): labelled simple graphs on n vertices.
std::uint64_t labeled_graph_count(int n);

/// Graph whose edge set is the bit pattern `mask` over pairs (i, j), i < j,
/// in lexicographic order: (0,1), (0,2), ..., (n-2, n-1).
Graph graph_from_edge_mask(int n, std::uint64_t mask);

bool mask_passes(int n, std::uint64_t mask, const GraphFilter& filter);

/// Visits every labelled graph whose mask lies in [begin, end), in mask
/// order, that passes the filter. Throws TooLarge for n outside 1..8.
void enumerate_labeled_range(int n, std::uint64_t begin, std::uint64_t end, const GraphFilter& filter,
                             const std::function<void(std::uint64_t mask, const Graph&)>& visit);

std::vector<Graph> enumerate_labeled(int n, const GraphFilter& filter);

/// G(n, p) from std::mt19937_64 seeded with `seed`; pair (i, j), i < j, in
/// lexicographic order is an edge iff (draw >> 11) * 2^-53 < p.
Graph random_gnp(int n, double p, std::uint64_t seed);
/// `count` graphs drawn in sequence from one generator seeded with `seed`.
std::vector<Graph> random_gnp_corpus(int n, double p, int count, std::uint64_t seed);

/// complete(n), cycle(n), path(n), star(leaves), complete_bipartite(a,b),
/// petersen, heawood. Throws UnknownFamily or Domain on bad parameters.
Graph named(std::string_view family, const std::vector<int>& params = {});
/// "family" or "family:p1,p2,...".
Graph named_from_string(std::string_view text);

std::vector<Graph> read_graph6_file(const std::string& path);
std::vector<Graph> read_graph6_stream(std::istream& in);

struct ExhaustiveSpec {
  int min_order = 1;
  int max_order = 5;
  GraphFilter filter;
};

struct RandomSpec {
  int n = 20;
  double p = 0.5;
  int count = 1;
  std::uint64_t seed = 1;
};

struct NamedSpec {
  std::string family;  ///< "family" or "family:params"
};

struct FileSpec {
  std::string path;
};

using CorpusSpec = std::variant<ExhaustiveSpec, RandomSpec, NamedSpec, FileSpec>;

std::string describe(const CorpusSpec& spec);

}  // namespace conncert
