// SPDX-License-Identifier: Apache-2.0

#include "olg/graph6.hpp"

#include <cstdint>

namespace olg {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view s, std::size_t pos, std::size_t base) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126)
    throw ParseError("byte " + std::to_string(static_cast<int>(c)) + " outside 63..126", base + pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", base);

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text, 0, base);
    pos = 1;
  } else {
    const bool wide = text.size() > 1 && text[1] == '~';
    const std::size_t start = wide ? 2 : 1;
    const std::size_t digits = wide ? 6 : 3;
    if (text.size() < start + digits) throw ParseError("truncated vertex count", base + text.size());
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < digits; ++k) acc = (acc << 6) | sextet(text, start + k, base);
    if (acc > kGraph6MaxOrder) throw ParseError("vertex count " + std::to_string(acc) + " too large", base);
    n = static_cast<long>(acc);
    pos = start + digits;
  }

  const std::int64_t bits = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need)
    throw ParseError("expected " + std::to_string(need) + " adjacency bytes for n=" + std::to_string(n) + ", got " +
                         std::to_string(text.size() - pos),
                     base + (text.size() - pos < need ? text.size() : pos + need));

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      const int bit = 5 - static_cast<int>(k % 6);
      if ((sextet(text, byte, base) >> bit) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (std::size_t b = pos; b < text.size(); ++b) (void)sextet(text, b, base);
  if (bits % 6 != 0) {
    const int pad = static_cast<int>(6 - bits % 6);
    if ((sextet(text, text.size() - 1, base) & ((1 << pad) - 1)) != 0)
      throw ParseError("nonzero padding bits", base + text.size() - 1);
  }
  return {static_cast<int>(n), std::move(edges)};
}

std::string write_graph6(const Graph &g) {
  const long n = g.order();
  if (n > kGraph6MaxOrder) throw InvalidParameter("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace olg
