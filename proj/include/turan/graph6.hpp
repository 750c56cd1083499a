#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// graph6 encoding (printable bytes offset by 63, upper triangle in column
/// order, big-endian six-bit groups). No trailing newline.
template <std::size_t W>
std::string to_graph6(const BasicGraph<W>& g);

/// Decodes one graph6 line; an optional ">>graph6<<" header is accepted.
/// Throws std::invalid_argument on malformed input or n above capacity.
template <std::size_t W = 1>
BasicGraph<W> from_graph6(std::string_view line);

/// Order encoded in a graph6 line, without building the graph.
int graph6_order(std::string_view line);

/// Reads every non-empty line of a graph6 stream.
template <std::size_t W = 1>
std::vector<BasicGraph<W>> read_graph6(std::istream& in);

}  // namespace turan
