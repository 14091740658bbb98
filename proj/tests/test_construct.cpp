#include <doctest.h>

#include <algorithm>
#include <random>

#include "char2paley/construct.hpp"
#include "char2paley/errors.hpp"

using namespace char2paley;

TEST_CASE("k = 2 is the 5-cycle") {
  const FieldCtx f(2);
  const ParamA a = default_param(f);
  const PaleyLikeGraph g = build_graph(f, a);
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 5);
  const CirculantLabeling lab = circulant_labeling(f, a);
  CHECK(lab.connection == std::vector<std::uint32_t>{1, 4});
  for (std::uint32_t i = 0; i < 5; ++i) {
    for (std::uint32_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      const bool cyclic = (i + 1) % 5 == j || (j + 1) % 5 == i;
      CHECK(g.has_edge(lab.at(i), lab.at(j)) == cyclic);
    }
  }
}

TEST_CASE("k = 2, a = w: 0 and 1 are not adjacent") {
  const FieldCtx f(2);
  const ParamA a = make_param(f, Elem{2});
  CHECK(adjacency_formula(f, Elem{2}, Elem{0}, Elem{1}) == kTrace1);
  CHECK(adjacency(f, a, ProjPoint::finite(Elem{0}), ProjPoint::finite(Elem{1})) == kTrace1);
  CHECK_FALSE(build_graph(f, a).has_edge(ProjPoint::finite(Elem{0}), ProjPoint::finite(Elem{1})));
}

TEST_CASE("graphs are symmetric and q/2-regular") {
  for (unsigned k = 2; k <= 10; k += 2) {
    const FieldCtx f(k);
    const PaleyLikeGraph g = build_graph(f, default_param(f));
    CHECK(g.order() == f.order() + 1);
    for (std::uint32_t u = 0; u < g.order(); ++u) {
      CHECK(g.degree(u) == f.order() / 2);
      CHECK_FALSE(g.has_edge(u, u));
      if (k <= 8) {
        for (std::uint32_t v = 0; v < g.order(); ++v) REQUIRE(g.has_edge(u, v) == g.has_edge(v, u));
      }
    }
  }
}

TEST_CASE("every trace-one parameter gives a regular graph") {
  const FieldCtx f(6);
  for (Elem a : f.trace_partition().second) {
    const PaleyLikeGraph g = build_graph(f, make_param(f, a));
    for (std::uint32_t u = 0; u < g.order(); ++u) CHECK(g.degree(u) == 32);
  }
}

TEST_CASE("dense matrix agrees with the beta-matrix predicate") {
  for (unsigned k : {2u, 3u, 4u, 5u, 6u}) {
    const FieldCtx f(k);
    for (Elem e : f.trace_partition().second) {
      const ParamA a = make_param(f, e);
      const BitMatrix m = k % 2 == 0 ? build_graph(f, a).matrix() : build_tournament(f, a).matrix();
      for (std::uint32_t u = 0; u <= f.order(); ++u) {
        for (std::uint32_t v = 0; v <= f.order(); ++v) {
          if (u == v) continue;
          REQUIRE(m.test(u, v) == (adjacency(f, a, vertex_at(u), vertex_at(v)) == kTrace0));
          if (u != 0 && v != 0) {
            REQUIRE(adjacency(f, a, vertex_at(u), vertex_at(v)) ==
                    adjacency_formula(f, e, Elem{u - 1}, Elem{v - 1}));
          }
        }
      }
    }
  }
}

TEST_CASE("tournaments: one arc per pair, arcs at infinity") {
  for (unsigned k : {3u, 5u, 7u}) {
    const FieldCtx f(k);
    const PaleyLikeTournament t = build_tournament(f, default_param(f));
    const std::uint32_t n = t.order();
    CHECK(t.arc_count() == std::size_t{n} * (n - 1) / 2);
    for (std::uint32_t u = 0; u < n; ++u) {
      CHECK_FALSE(t.has_arc(u, u));
      for (std::uint32_t v = u + 1; v < n; ++v) REQUIRE(t.has_arc(u, v) != t.has_arc(v, u));
    }
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      const ProjPoint p = ProjPoint::finite(Elem{x});
      CHECK(t.has_arc(p, ProjPoint::infinity()) == (f.trace(Elem{x}) == kTrace0));
      CHECK(t.has_arc(ProjPoint::infinity(), p) == (f.trace(Elem{x ^ 1u}) == kTrace0));
    }
  }
}

TEST_CASE("neighbourhood of 0 is infinity plus {y : tr(a/y) = 0}") {
  for (unsigned k : {4u, 6u, 8u}) {
    const FieldCtx f(k);
    const ParamA a = default_param(f);
    const PaleyLikeGraph g = build_graph(f, a);
    const ProjPoint zero = ProjPoint::finite(FieldCtx::zero());
    CHECK(g.has_edge(zero, ProjPoint::infinity()));
    for (std::uint32_t y = 1; y < f.order(); ++y) {
      CHECK(g.has_edge(zero, ProjPoint::finite(Elem{y})) == (f.trace(f.div(a.a, Elem{y})) == kTrace0));
    }
  }
}

TEST_CASE("streaming degree") {
  const FieldCtx f(8);
  const ParamA a = default_param(f);
  for (std::uint32_t v : {0u, 1u, 77u, 256u}) CHECK(degree_streaming(f, a, vertex_at(v)) == 128);
  const FieldCtx big(16);
  CHECK(degree_streaming(big, default_param(big), ProjPoint::finite(Elem{12345})) == 32768);
}

TEST_CASE("circulant labeling") {
  for (unsigned k = 2; k <= 10; k += 2) {
    const FieldCtx f(k);
    const ParamA a = default_param(f);
    const PaleyLikeGraph g = build_graph(f, a);
    const CirculantLabeling lab = circulant_labeling(f, a);
    CHECK(lab.connection.size() == f.order() / 2);
    CHECK(verify_circulant(g, lab).pass);
    for (std::uint32_t d : lab.connection) CHECK(lab.contains(lab.order() - d));
  }
}

TEST_CASE("a shuffled labeling is rejected") {
  const FieldCtx f(6);
  const ParamA a = default_param(f);
  const PaleyLikeGraph g = build_graph(f, a);
  CirculantLabeling lab = circulant_labeling(f, a);
  std::mt19937 rng(1);
  std::shuffle(lab.vertices.begin() + 1, lab.vertices.end(), rng);
  const Verdict v = verify_circulant(g, lab);
  CHECK_FALSE(v.pass);
  CHECK(v.witness.find("v_") != std::string::npos);
}

TEST_CASE("preconditions") {
  const FieldCtx f4(4), f5(5), f14(14);
  CHECK_THROWS_AS(make_param(f4, FieldCtx::one()), PreconditionError);
  CHECK_THROWS_AS(build_graph(f5, default_param(f5)), PreconditionError);
  CHECK_THROWS_AS(build_tournament(f4, default_param(f4)), PreconditionError);
  CHECK_THROWS_AS(build_graph(f14, default_param(f14)), CapacityError);
  const ParamA a = default_param(f4);
  CHECK_THROWS_AS(adjacency(f4, a, ProjPoint::infinity(), ProjPoint::infinity()), PreconditionError);
  const FieldCtx f6(6);
  ParamA short_orbit{};
  for (Elem e : f6.trace_partition().second) {
    const ParamA p = make_param(f6, e);
    if (!p.generator) short_orbit = p;
  }
  CHECK_THROWS_AS(circulant_labeling(f6, short_orbit), PreconditionError);
}
