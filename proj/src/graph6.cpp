#include "conncert/graph6.hpp"

#include <cstdint>
#include <vector>

#include "conncert/error.hpp"

namespace conncert {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw Error(ErrorCode::BadChar, "byte " + std::to_string(static_cast<unsigned char>(c)));
  return v;
}

void expect_bytes(std::string_view text, std::size_t pos, std::size_t count) {
  if (pos + count > text.size()) throw Error(ErrorCode::TruncatedBits, "graph6 input ends early");
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);

  expect_bytes(text, 0, 1);
  std::size_t pos = 0;
  std::int64_t n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() > 1 && text[1] != '~') {
    expect_bytes(text, 1, 3);
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
  } else {
    expect_bytes(text, 2, 6);
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
  }
  if (n < 1) throw Error(ErrorCode::EmptyGraph, "graph6 encodes the null graph");
  if (n > (std::int64_t{1} << 20)) throw Error(ErrorCode::TooLarge, "graph6 order " + std::to_string(n));

  const std::int64_t bits = n * (n - 1) / 2;
  const auto bytes = static_cast<std::size_t>((bits + 5) / 6);
  expect_bytes(text, pos, bytes);
  if (text.size() != pos + bytes) throw Error(ErrorCode::BadChar, "trailing characters after graph6 payload");

  std::vector<Edge> edges;
  std::int64_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int word = sextet(text[pos + static_cast<std::size_t>(bit / 6)]);
      if ((word >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; bit < static_cast<std::int64_t>(bytes) * 6; ++bit) {
    const int word = sextet(text[pos + static_cast<std::size_t>(bit / 6)]);
    if ((word >> (5 - bit % 6)) & 1) throw Error(ErrorCode::BadChar, "nonzero padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  return out;
}

}  // namespace conncert
