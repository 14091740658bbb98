#include <doctest.h>

#include <bit>
#include <random>

#include "char2paley/analyze.hpp"
#include "char2paley/errors.hpp"
#include "char2paley/mobius.hpp"

using namespace char2paley;

namespace {

// Common neighbours counted pair by pair, without the bit-matrix popcount.
std::uint32_t slow_codegree(const PaleyLikeGraph& g, std::uint32_t u, std::uint32_t v) {
  std::uint32_t ell = 0;
  for (std::uint32_t w = 0; w < g.order(); ++w) ell += g.has_edge(u, w) && g.has_edge(v, w);
  return ell;
}

}  // namespace

TEST_CASE("k = 2 Kloosterman values") {
  const FieldCtx f(2);
  CHECK(kloosterman(f, Elem{1}).sum == 3);
  CHECK(kloosterman(f, Elem{2}).sum == -1);
  CHECK(kloosterman(f, Elem{3}).sum == -1);
  CHECK_THROWS_AS(kloosterman(f, FieldCtx::zero()), PreconditionError);
}

TEST_CASE("Kloosterman table, Weil bound and sum identity") {
  for (unsigned k = 2; k <= 10; ++k) {
    const FieldCtx f(k);
    const auto table = kloosterman_table(f);
    std::int64_t total = 0;
    for (std::uint32_t b = 1; b < f.order(); ++b) {
      const std::int64_t direct = kloosterman(f, Elem{b}).sum;
      CHECK(table[b] == direct);
      CHECK(within_weil_bound(f.order(), direct));
      CHECK(table[f.square(Elem{b}).bits] == direct);
      CHECK((direct + 1) % 4 == 0);
      total += direct;
    }
    CHECK(total == 1);
  }
  CHECK(within_weil_bound(16, 8));
  CHECK_FALSE(within_weil_bound(16, 9));
  CHECK_FALSE(within_weil_bound(16, -9));
}

TEST_CASE("sqrt and codegree cap") {
  CHECK(sqrt_q(FieldCtx(4)) == 4);
  CHECK(sqrt_q(FieldCtx(10)) == 32);
  CHECK(codegree_cap(FieldCtx(4)) == 6);
  CHECK(codegree_cap(FieldCtx(8)) == 72);
  CHECK_THROWS_AS(sqrt_q(FieldCtx(5)), PreconditionError);
}

TEST_CASE("codegree formula equals brute force on all pairs") {
  for (unsigned k = 2; k <= 8; k += 2) {
    const FieldCtx f(k);
    const ParamA a = default_param(f);
    const PaleyLikeGraph g = build_graph(f, a);
    const CodegreeFormula formula(f, circulant_labeling(f, a));
    for (std::uint32_t u = 0; u < g.order(); ++u) {
      for (std::uint32_t v = 0; v < g.order(); ++v) {
        if (u == v) continue;
        const CodegreePair p = codegree_direct(g, vertex_at(u), vertex_at(v));
        REQUIRE(p.ell == formula(vertex_at(u), vertex_at(v)));
        if (k <= 4) CHECK(p.ell == slow_codegree(g, u, v));
      }
    }
  }
}

TEST_CASE("untabulated formula and streaming codegrees") {
  const FieldCtx f(6);
  const ParamA a = default_param(f);
  const PaleyLikeGraph g = build_graph(f, a);
  const CirculantLabeling lab = circulant_labeling(f, a);
  std::mt19937 rng(4);
  for (int t = 0; t < 50; ++t) {
    const std::uint32_t u = rng() % 65, v = rng() % 65;
    if (u == v) continue;
    const CodegreePair direct = codegree_direct(g, vertex_at(u), vertex_at(v));
    const CodegreePair stream = codegree_streaming(f, a, vertex_at(u), vertex_at(v));
    CHECK(direct.ell == stream.ell);
    CHECK(direct.epsilon == stream.epsilon);
    CHECK(codegree_formula(f, lab, vertex_at(u), vertex_at(v)) == direct.ell);
  }
}

TEST_CASE("codegree is invariant under alpha") {
  const FieldCtx f(6);
  const ParamA a = default_param(f);
  const PaleyLikeGraph g = build_graph(f, a);
  const MobiusMap al = alpha_of(f, a.a);
  for (std::uint32_t u = 0; u < g.order(); ++u) {
    for (std::uint32_t v = u + 1; v < g.order(); ++v) {
      const ProjPoint x = vertex_at(u), y = vertex_at(v);
      CHECK(codegree_direct(g, x, y).ell ==
            codegree_direct(g, apply(f, al, x), apply(f, al, y)).ell);
    }
  }
}

TEST_CASE("codegree spectra") {
  using Hist = std::map<std::pair<int, std::uint32_t>, std::uint64_t>;
  {
    const FieldCtx f(2);
    const CodegreeSpectrum s = codegree_spectrum(build_graph(f, default_param(f)));
    CHECK(s.histogram == Hist{{{0, 1}, 5}, {{1, 0}, 5}});
    CHECK(s.pairs == 10);
  }
  {
    const FieldCtx f(4);
    const CodegreeSpectrum s = codegree_spectrum(build_graph(f, default_param(f)));
    CHECK(s.histogram == Hist{{{0, 3}, 34}, {{0, 5}, 34}, {{1, 2}, 34}, {{1, 4}, 34}});
    CHECK(s.max_ell == 5);
    CHECK(s.max_conference_deviation == 1);
  }
  for (unsigned k = 4; k <= 10; k += 2) {
    const FieldCtx f(k);
    const CodegreeSpectrum s = codegree_spectrum(build_graph(f, default_param(f)));
    CHECK(s.max_ell <= codegree_cap(f));
    CHECK(s.pairs == std::uint64_t{f.order() + 1} * f.order() / 2);
  }
}

TEST_CASE("exhaustive jumbledness at k = 2 and 4") {
  for (unsigned k : {2u, 4u}) {
    const FieldCtx f(k);
    const PaleyLikeGraph g = build_graph(f, default_param(f));
    const JumblednessAudit audit = jumbledness_audit(g, AuditMode::exhaustive, 0, 0);
    CHECK(audit.pass);
    CHECK(audit.samples == std::uint64_t{1} << g.order());
    // Recount the reported worst subset and compare against a brute-force maximum of D/h.
    const std::uint64_t mask = audit.worst_index;
    std::uint64_t e = 0;
    for (std::uint32_t u = 0; u < g.order(); ++u) {
      for (std::uint32_t v = u + 1; v < g.order(); ++v) {
        e += ((mask >> u) & 1) && ((mask >> v) & 1) && g.has_edge(u, v);
      }
    }
    const std::uint64_t h = std::popcount(mask);
    CHECK(h == audit.worst_size);
    const std::int64_t d = std::llabs(2 * static_cast<std::int64_t>(e) - static_cast<std::int64_t>(h * (h - 1) / 2));
    CHECK(static_cast<std::uint64_t>(d) == audit.worst_twice_deviation);
    if (k == 2) {
      double best = 0;
      for (std::uint64_t m = 1; m < 32; ++m) {
        std::int64_t edges = 0;
        for (std::uint32_t u = 0; u < 5; ++u) {
          for (std::uint32_t v = u + 1; v < 5; ++v) edges += ((m >> u) & 1) && ((m >> v) & 1) && g.has_edge(u, v);
        }
        const std::int64_t size = std::popcount(m);
        best = std::max(best, std::abs(2.0 * edges - size * (size - 1) / 2.0) / size);
      }
      CHECK(best == doctest::Approx(static_cast<double>(d) / h));
    }
  }
}

TEST_CASE("sampled jumbledness is seeded") {
  const FieldCtx f(6);
  const PaleyLikeGraph g = build_graph(f, default_param(f));
  const JumblednessAudit a1 = jumbledness_audit(g, AuditMode::sampled, 2000, 11);
  const JumblednessAudit a2 = jumbledness_audit(g, AuditMode::sampled, 2000, 11);
  CHECK(a1.pass);
  CHECK(a1.samples == 2000);
  CHECK(a1.worst_index == a2.worst_index);
  CHECK(a1.worst_ratio4_num == a2.worst_ratio4_num);
  CHECK(a1.worst_ratio < 1.0);
  CHECK_THROWS_AS(jumbledness_audit(g, AuditMode::exhaustive, 0, 0), CapacityError);
}
