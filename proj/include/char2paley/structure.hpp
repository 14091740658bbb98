#pragma once

// Structural certificates for G_k(a): shift isomorphisms between parameters,
// self-complementarity, automorphisms, tournament reversal, and the
// distance-class Hamiltonian decomposition when q+1 is prime.

#include <cstdint>
#include <utility>
#include <vector>

#include "char2paley/check.hpp"
#include "char2paley/construct.hpp"

namespace char2paley {

// Vertex permutation in the dense numbering (see vertex_index).
using VertexMap = std::vector<std::uint32_t>;

enum class IsoKind { isomorphism, complement };

// x -> x + b maps G_k(a') onto G_k(a) (kind isomorphism, tr(b) = 0) or onto
// its complement (kind complement, tr(b) = 1), where b^2 + b = a + a'.
struct ShiftIso {
  Elem b;
  IsoKind kind = IsoKind::isomorphism;
};

// For odd k the root with tr(b) = 0 is chosen; for even k both roots share a
// trace and the smaller encoding is returned.
ShiftIso shift_isomorphism(const FieldCtx& ctx, const ParamA& a, const ParamA& a_prime);

// x -> x + b, infinity fixed.
VertexMap shift_map(const FieldCtx& ctx, Elem b);
// z -> a/(z + 1).
VertexMap alpha_map(const FieldCtx& ctx, Elem a);
// v_i -> v_{2i mod (q+1)}.
VertexMap doubling_map(const CirculantLabeling& lab);
VertexMap compose(const VertexMap& outer, const VertexMap& inner);

// For every ordered pair u != v: to(map[u], map[v]) == from(u, v), or its
// negation when `complement` is set. Rejects maps that are not permutations.
Verdict verify_vertex_map(const BitMatrix& from, const BitMatrix& to, const VertexMap& map,
                          bool complement);

// g_prime = G_k(a'), g = G_k(a).
Verdict verify_shift_isomorphism(const PaleyLikeGraph& g_prime, const PaleyLikeGraph& g,
                                 const ShiftIso& iso);
Verdict verify_shift_isomorphism(const PaleyLikeTournament& t_prime, const PaleyLikeTournament& t,
                                 const ShiftIso& iso);

// A map G_k(a') -> G_k(a): the shift, composed with the doubling map of
// `lab` when the shift lands on the complement.
VertexMap isomorphism_to(const FieldCtx& ctx, const ShiftIso& iso, const CirculantLabeling& lab);

// The doubling map exchanges edges and non-edges.
Verdict verify_self_complementary(const PaleyLikeGraph& g, const CirculantLabeling& lab);

// alpha_a and z -> z+1 both preserve the edge set. Requires even k.
Verdict verify_automorphisms(const PaleyLikeGraph& g, const ParamA& a);

// x -> x+1 reverses every arc.
Verdict verify_tournament_reversal(const PaleyLikeTournament& t);

struct HamiltonianDecomposition {
  std::uint32_t p = 0;  // q + 1, prime
  std::vector<std::pair<std::uint32_t, std::uint32_t>> classes;  // {d, p - d}, d < p/2
  std::vector<std::vector<ProjPoint>> cycles;  // cycle c steps by classes[c].first from v_0
};

// Throws CapacityError when q+1 is composite.
HamiltonianDecomposition hamiltonian_decompose(const PaleyLikeGraph& g, const CirculantLabeling& lab);

// Each cycle spans all p vertices, uses only edges, cycles are pairwise
// edge-disjoint and together cover every edge.
Verdict certify_decomposition(const PaleyLikeGraph& g, const HamiltonianDecomposition& dec);

}  // namespace char2paley
