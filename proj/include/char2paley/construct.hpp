#pragma once

// The graph (even k) or tournament (odd k) G_k(a) on PG(1,q):
//
//   x -> y  iff  tr((xy + x + a) / (x + y)) = 0,
//
// extended to infinity through beta_y, and its circulant labeling
// v_i = alpha^i(infinity).

#include <cstdint>
#include <vector>

#include "char2paley/bitmatrix.hpp"
#include "char2paley/check.hpp"
#include "char2paley/gf2k.hpp"
#include "char2paley/mobius.hpp"

namespace char2paley {

// Dense structures are only built up to this many vertices (k <= 12).
inline constexpr std::uint32_t kMaxDenseOrder = 4097;

struct ParamA {
  Elem a;
  bool generator = false;  // alpha_a moves infinity through all q+1 points
};

// Throws PreconditionError unless tr(a) = 1.
ParamA make_param(const FieldCtx& ctx, Elem a);
// make_param(ctx, find_generator_a(ctx)).
ParamA default_param(const FieldCtx& ctx);

// tr(beta_y(x)); zero means x -> y is an edge/arc. Throws for x == y.
TraceBit adjacency(const FieldCtx& ctx, const ParamA& a, ProjPoint x, ProjPoint y);

// The bare formula tr((xy + x + a)/(x + y)) for finite x != y.
TraceBit adjacency_formula(const FieldCtx& ctx, Elem a, Elem x, Elem y);

class PaleyLikeGraph {
 public:
  PaleyLikeGraph(FieldCtx ctx, ParamA a, BitMatrix adjacency);

  const FieldCtx& field() const { return ctx_; }
  const ParamA& param() const { return a_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(adj_.size()); }
  const BitMatrix& matrix() const { return adj_; }

  bool has_edge(std::uint32_t u, std::uint32_t v) const { return adj_.test(u, v); }
  bool has_edge(ProjPoint x, ProjPoint y) const { return has_edge(vertex_index(x), vertex_index(y)); }
  std::size_t degree(std::uint32_t u) const { return adj_.row_count(u); }
  std::size_t edge_count() const { return adj_.count() / 2; }

  // Copy with one pair flipped. Breaks the regularity invariant; exists for
  // negative controls.
  PaleyLikeGraph with_edge_toggled(std::uint32_t u, std::uint32_t v) const;

 private:
  FieldCtx ctx_;
  ParamA a_;
  BitMatrix adj_;
};

class PaleyLikeTournament {
 public:
  PaleyLikeTournament(FieldCtx ctx, ParamA a, BitMatrix arcs);

  const FieldCtx& field() const { return ctx_; }
  const ParamA& param() const { return a_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(arcs_.size()); }
  const BitMatrix& matrix() const { return arcs_; }

  bool has_arc(std::uint32_t u, std::uint32_t v) const { return arcs_.test(u, v); }
  bool has_arc(ProjPoint x, ProjPoint y) const { return has_arc(vertex_index(x), vertex_index(y)); }
  std::size_t out_degree(std::uint32_t u) const { return arcs_.row_count(u); }
  std::size_t arc_count() const { return arcs_.count(); }

 private:
  FieldCtx ctx_;
  ParamA a_;
  BitMatrix arcs_;
};

// Requires even k and q+1 <= kMaxDenseOrder (CapacityError otherwise).
PaleyLikeGraph build_graph(const FieldCtx& ctx, const ParamA& a);
// Requires odd k and q+1 <= kMaxDenseOrder.
PaleyLikeTournament build_tournament(const FieldCtx& ctx, const ParamA& a);

// Streaming counterpart of PaleyLikeGraph::degree for large q: counts the
// vertices y with adjacency(x, y) = 0 straight from the predicate.
std::uint64_t degree_streaming(const FieldCtx& ctx, const ParamA& a, ProjPoint x);

struct CirculantLabeling {
  ParamA param;
  std::vector<ProjPoint> vertices;          // v_0 = inf, v_i = alpha^i(inf)
  std::vector<std::uint32_t> position;      // vertex_index -> i
  std::vector<std::uint32_t> connection;    // S, ascending, subset of 1..q
  std::vector<std::uint8_t> in_connection;  // indicator of S over 0..q

  std::uint32_t order() const { return static_cast<std::uint32_t>(vertices.size()); }
  bool contains(std::uint32_t d) const { return in_connection[d % order()] != 0; }
  ProjPoint at(std::int64_t i) const;
};

// Throws PreconditionError if a is not a generator.
CirculantLabeling circulant_labeling(const FieldCtx& ctx, const ParamA& a);

// v_i v_j is an edge iff (j - i) mod (q+1) lies in S, over all i != j.
// Throws PreconditionError when g and lab come from different (ctx, a).
Verdict verify_circulant(const PaleyLikeGraph& g, const CirculantLabeling& lab);

}  // namespace char2paley
