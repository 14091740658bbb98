#pragma once

// Text serializations of graphs, tournaments and decompositions.
//
//   edges   "# k=<int> a=<hex> poly=<hex> n=<int>" then "u v" per edge
//           (u < v in vertex order) or "u > v" per arc; labels are "inf" or
//           lowercase hex.
//   dimacs  "p edge n m" then "e u v" with 1-based vertex numbers.
//   matrix  one line per row: the row as a hex number whose bit j is column j,
//           zero-padded to ceil(n/4) digits.
//   json    metadata plus adjacency (out-)lists of labels.
//   decomposition  "p=<int> cycles=<int>" then one cycle per line.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "char2paley/bitmatrix.hpp"
#include "char2paley/construct.hpp"
#include "char2paley/structure.hpp"

namespace char2paley {

enum class GraphFormat { edges, dimacs, matrix, json };

GraphFormat parse_graph_format(const std::string& name);

void write_graph(std::ostream& os, const PaleyLikeGraph& g, GraphFormat fmt);
void write_tournament(std::ostream& os, const PaleyLikeTournament& t, GraphFormat fmt);
void write_decomposition(std::ostream& os, const HamiltonianDecomposition& dec);

struct EdgeList {
  unsigned k = 0;
  std::uint64_t a = 0;
  std::uint64_t poly = 0;
  std::uint32_t n = 0;
  bool directed = false;
  BitMatrix adjacency;  // symmetric unless directed
};

// Parses the `edges` format. Throws PreconditionError on malformed input.
EdgeList parse_edge_list(std::istream& is);

}  // namespace char2paley
