#include <doctest.h>

#include <algorithm>
#include <random>

#include "char2paley/chapman.hpp"
#include "char2paley/errors.hpp"
#include "char2paley/structure.hpp"

using namespace char2paley;

TEST_CASE("shift isomorphisms at k = 4") {
  const FieldCtx f(4);
  const ParamA a = default_param(f);
  const PaleyLikeGraph g = build_graph(f, a);
  const CirculantLabeling lab = circulant_labeling(f, a);
  int complements = 0;
  for (Elem e : f.trace_partition().second) {
    const ParamA ap = make_param(f, e);
    const PaleyLikeGraph gp = build_graph(f, ap);
    const ShiftIso iso = shift_isomorphism(f, a, ap);
    CHECK(FieldCtx::add(FieldCtx::add(f.square(iso.b), iso.b), a.a) == e);
    CHECK((iso.kind == IsoKind::complement) == (f.trace(iso.b) == kTrace1));
    CHECK(verify_shift_isomorphism(gp, g, iso).pass);
    CHECK(verify_vertex_map(gp.matrix(), g.matrix(), isomorphism_to(f, iso, lab), false).pass);
    complements += iso.kind == IsoKind::complement;
  }
  CHECK(complements > 0);
}

TEST_CASE("shift isomorphisms and reversal for tournaments") {
  for (unsigned k : {3u, 5u, 7u}) {
    const FieldCtx f(k);
    const ParamA a = default_param(f);
    const PaleyLikeTournament t = build_tournament(f, a);
    CHECK(verify_tournament_reversal(t).pass);
    for (Elem e : f.trace_partition().second) {
      const ParamA ap = make_param(f, e);
      const ShiftIso iso = shift_isomorphism(f, a, ap);
      CHECK(iso.kind == IsoKind::isomorphism);
      CHECK(f.trace(iso.b) == kTrace0);
      CHECK(verify_shift_isomorphism(build_tournament(f, ap), t, iso).pass);
    }
  }
}

TEST_CASE("self-complementary with automorphisms alpha and z + 1") {
  for (unsigned k = 2; k <= 8; k += 2) {
    const FieldCtx f(k);
    const ParamA a = default_param(f);
    const PaleyLikeGraph g = build_graph(f, a);
    CHECK(verify_self_complementary(g, circulant_labeling(f, a)).pass);
    CHECK(verify_automorphisms(g, a).pass);
    CHECK(verify_vertex_map(g.matrix(), g.matrix(), alpha_map(f, a.a), false).pass);
    CHECK(verify_vertex_map(g.matrix(), g.matrix(), shift_map(f, FieldCtx::one()), false).pass);
  }
}

TEST_CASE("negative controls for vertex maps") {
  const FieldCtx f(6);
  const ParamA a = default_param(f);
  const PaleyLikeGraph g = build_graph(f, a);
  const CirculantLabeling lab = circulant_labeling(f, a);
  VertexMap identity(g.order());
  for (std::uint32_t i = 0; i < g.order(); ++i) identity[i] = i;
  CHECK_FALSE(verify_vertex_map(g.matrix(), g.matrix(), identity, true).pass);
  CHECK_FALSE(verify_vertex_map(g.matrix(), g.matrix(), doubling_map(lab), false).pass);

  for (Elem e : f.trace_partition().second) {
    if (e == a.a) continue;
    const PaleyLikeGraph gp = build_graph(f, make_param(f, e));
    CHECK_FALSE(verify_vertex_map(gp.matrix(), g.matrix(), identity, false).pass);
    break;
  }

  VertexMap swapped = alpha_map(f, a.a);
  std::mt19937 rng(2);
  for (int t = 0; t < 20; ++t) {
    VertexMap m = swapped;
    const std::uint32_t i = rng() % m.size(), j = rng() % m.size();
    if (i == j) continue;
    std::swap(m[i], m[j]);
    CHECK_FALSE(verify_vertex_map(g.matrix(), g.matrix(), m, false).pass);
  }
  VertexMap not_perm = identity;
  not_perm[0] = 1;
  CHECK_FALSE(verify_vertex_map(g.matrix(), g.matrix(), not_perm, false).pass);
}

TEST_CASE("Hamiltonian decompositions") {
  for (auto [k, cycles] : {std::pair{4u, 4u}, std::pair{8u, 64u}, std::pair{2u, 1u}}) {
    const FieldCtx f(k);
    const ParamA a = default_param(f);
    const PaleyLikeGraph g = build_graph(f, a);
    const HamiltonianDecomposition dec = hamiltonian_decompose(g, circulant_labeling(f, a));
    CHECK(dec.p == f.order() + 1);
    CHECK(dec.cycles.size() == cycles);
    CHECK(certify_decomposition(g, dec).pass);

    HamiltonianDecomposition broken = dec;
    std::swap(broken.cycles[0][1], broken.cycles[0][2]);
    CHECK_FALSE(certify_decomposition(g, broken).pass);
    if (dec.cycles.size() > 1) {
      HamiltonianDecomposition dup = dec;
      dup.cycles[1] = dup.cycles[0];
      CHECK_FALSE(certify_decomposition(g, dup).pass);
    }
  }
  const FieldCtx f(6);
  const ParamA a = default_param(f);
  CHECK_THROWS_AS(hamiltonian_decompose(build_graph(f, a), circulant_labeling(f, a)), CapacityError);
}

TEST_CASE("Chapman model matches G at k = 2 and 4") {
  for (unsigned k : {2u, 4u}) {
    const FieldCtx f(k);
    const QuadExtCtx ext(f);
    const ChapmanGraph h = chapman_build(ext, QuadExtCtx::zeta());
    CHECK(h.order() == f.order() + 1);
    CHECK(h.diagnostics().zero_denominators == 0);
    CHECK(h.diagnostics().undefined_pairs.empty());
    CHECK(h.diagnostics().representatives_exhaustive);
    CHECK(h.diagnostics().representative_mismatches == 0);
    for (std::uint32_t u = 0; u < h.order(); ++u) {
      CHECK(h.matrix().row_count(u) == f.order() / 2);
      for (std::uint32_t v = 0; v < h.order(); ++v) CHECK(h.matrix().test(u, v) == h.matrix().test(v, u));
    }
    const PaleyLikeGraph g = build_graph(f, default_param(f));
    const ChapmanComparison cmp = chapman_compare(h, g);
    CHECK(cmp.isomorphic());
    CHECK(cmp.multiplier.has_value());
    CHECK(verify_vertex_map(g.matrix(), h.matrix(), cmp.map, false).pass);

    const ChapmanComparison bad = chapman_compare(h, g.with_edge_toggled(0, 1));
    CHECK(bad.verdict == ChapmanVerdict::not_isomorphic);
    CHECK_FALSE(bad.detail.empty());
  }
}

TEST_CASE("Chapman representatives and degenerate pairs") {
  const QuadExtCtx ext{FieldCtx(4)};
  const QuadElem u{Elem{3}, Elem{5}};
  const QuadElem rep = canonical_representative(ext, u);
  for (std::uint32_t c = 1; c < 16; ++c) {
    CHECK(canonical_representative(ext, ext.mul(QuadExtCtx::embed(Elem{c}), u)) == rep);
  }
  CHECK(!chapman_edge(ext, QuadExtCtx::zeta(), u, ext.mul(QuadExtCtx::embed(Elem{7}), u)).has_value());
  CHECK_THROWS_AS(chapman_build(ext, QuadExtCtx::one()), PreconditionError);
  CHECK_THROWS_AS(chapman_build(QuadExtCtx{FieldCtx(3)}, QuadExtCtx::zeta()), PreconditionError);
}
