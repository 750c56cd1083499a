#include "turan/graph6.hpp"

#include <istream>
#include <stdexcept>

namespace turan {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kOffset = 63;

std::string_view strip(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
    line.remove_suffix(1);
  }
  return line;
}

// Returns (n, number of bytes used by the size field).
std::pair<int, std::size_t> decode_order(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("graph6: empty input");
  auto byte = [&](std::size_t i) {
    if (i >= s.size()) throw std::invalid_argument("graph6: truncated size field");
    const int c = static_cast<unsigned char>(s[i]);
    if (c < kOffset || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - kOffset;
  };
  const int first = byte(0);
  if (first < 63) return {first, 1};
  if (s.size() > 1 && static_cast<unsigned char>(s[1]) == 126) {
    throw std::invalid_argument("graph6: orders above 258047 are not supported");
  }
  const int n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
  return {n, 4};
}

}  // namespace

template <std::size_t W>
std::string to_graph6(const BasicGraph<W>& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kOffset));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
  return out;
}

int graph6_order(std::string_view line) { return decode_order(strip(line)).first; }

template <std::size_t W>
BasicGraph<W> from_graph6(std::string_view line) {
  line = strip(line);
  const auto [n, used] = decode_order(line);
  if (n > BasicGraph<W>::kMaxVertices) {
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " exceeds vertex cap " +
                                std::to_string(BasicGraph<W>::kMaxVertices));
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != used + bytes) {
    throw std::invalid_argument("graph6: expected " + std::to_string(used + bytes) + " bytes, got " +
                                std::to_string(line.size()));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int c = static_cast<unsigned char>(line[used + k / 6]);
      if (c < kOffset || c > 126) throw std::invalid_argument("graph6: byte out of range");
      if (((c - kOffset) >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(line.back()) - kOffset;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw std::invalid_argument("graph6: nonzero padding bits");
    }
  }
  return BasicGraph<W>(n, edges);
}

template <std::size_t W>
std::vector<BasicGraph<W>> read_graph6(std::istream& in) {
  std::vector<BasicGraph<W>> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto s = strip(line);
    if (s.empty()) continue;
    out.push_back(from_graph6<W>(s));
  }
  return out;
}

template std::string to_graph6(const BasicGraph<1>&);
template std::string to_graph6(const BasicGraph<4>&);
template BasicGraph<1> from_graph6<1>(std::string_view);
template BasicGraph<4> from_graph6<4>(std::string_view);
template std::vector<BasicGraph<1>> read_graph6<1>(std::istream&);
template std::vector<BasicGraph<4>> read_graph6<4>(std::istream&);

}  // namespace turan
