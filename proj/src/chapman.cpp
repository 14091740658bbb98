#include "char2paley/chapman.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "char2paley/analyze.hpp"
#include "char2paley/errors.hpp"

namespace char2paley {

namespace {

constexpr std::uint64_t kExhaustiveRepresentativeBudget = 2'000'000;

}  // namespace

ChapmanGraph::ChapmanGraph(QuadExtCtx ext, QuadElem lambda, std::vector<QuadElem> reps,
                           BitMatrix adj, ChapmanDiagnostics diag)
    : ext_(std::move(ext)),
      lambda_(lambda),
      reps_(std::move(reps)),
      adj_(std::move(adj)),
      diag_(std::move(diag)) {}

std::uint32_t ChapmanGraph::index_of(QuadElem u) const {
  // Representatives are (1, 0) then (x, 1) in ascending x.
  const QuadElem c = canonical_representative(ext_, u);
  return QuadExtCtx::in_base(c) ? 0 : c.c0.bits + 1;
}

QuadElem canonical_representative(const QuadExtCtx& ext, QuadElem u) {
  if (u == QuadExtCtx::zero()) throw DivisionByZero("zero lies in no coset of F_q*");
  const FieldCtx& f = ext.base();
  // Encodings put c1 in the high bits, so the minimum has c1 = 1 when c1 != 0.
  if (u.c1 == FieldCtx::zero()) return QuadExtCtx::one();
  return QuadElem{f.div(u.c0, u.c1), FieldCtx::one()};
}

std::optional<bool> chapman_edge(const QuadExtCtx& ext, QuadElem lambda, QuadElem u, QuadElem v) {
  const FieldCtx& f = ext.base();
  const QuadElem uv = ext.mul(QuadExtCtx::conj(u), v);
  const Elem den = f.mul(QuadExtCtx::trace_to_base(lambda), QuadExtCtx::trace_to_base(uv));
  if (den == FieldCtx::zero()) return std::nullopt;
  const Elem num = QuadExtCtx::trace_to_base(ext.mul(lambda, uv));
  return f.trace(f.div(num, den)) == kTrace0;
}

ChapmanGraph chapman_build(const QuadExtCtx& ext, QuadElem lambda, std::uint64_t samples,
                           std::uint64_t seed) {
  const FieldCtx& f = ext.base();
  if (f.degree() % 2 != 0) throw PreconditionError("H_lambda is built for even k only");
  if (lambda == QuadExtCtx::zero()) throw PreconditionError("lambda must be nonzero");
  if (QuadExtCtx::trace_to_base(lambda) == FieldCtx::zero()) {
    throw PreconditionError("T(lambda) = 0: the H_lambda predicate is undefined for every pair");
  }

  const std::uint32_t q = f.order();
  const std::uint32_t n = q + 1;
  std::vector<QuadElem> reps;
  reps.reserve(n);
  reps.push_back(QuadExtCtx::one());
  for (std::uint32_t x = 0; x < q; ++x) reps.push_back(QuadElem{Elem{x}, FieldCtx::one()});

  ChapmanDiagnostics diag;
  BitMatrix adj(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      ++diag.pair_evaluations;
      const auto e = chapman_edge(ext, lambda, reps[i], reps[j]);
      if (!e) {
        ++diag.zero_denominators;
        diag.undefined_pairs.emplace_back(i, j);
        continue;
      }
      adj.set(i, j, *e);
    }
  }

  // Re-evaluate on scaled representatives c u, c' v.
  auto recheck = [&](std::uint32_t i, std::uint32_t j, Elem c, Elem c2) {
    ++diag.representative_checks;
    const auto e = chapman_edge(ext, lambda, ext.mul(QuadExtCtx::embed(c), reps[i]),
                                ext.mul(QuadExtCtx::embed(c2), reps[j]));
    const bool defined = e.has_value();
    const bool base_defined = chapman_edge(ext, lambda, reps[i], reps[j]).has_value();
    if (defined != base_defined || (defined && *e != adj.test(i, j))) ++diag.representative_mismatches;
  };
  const std::uint64_t units = q - 1;
  const std::uint64_t exhaustive_cost = std::uint64_t{n} * (n - 1) * units * units;
  if (exhaustive_cost <= kExhaustiveRepresentativeBudget) {
    diag.representatives_exhaustive = true;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (std::uint32_t c = 1; c < q; ++c) {
          for (std::uint32_t c2 = 1; c2 < q; ++c2) recheck(i, j, Elem{c}, Elem{c2});
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> vertex(0, n - 1);
    std::uniform_int_distribution<std::uint32_t> unit(1, q - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const std::uint32_t i = vertex(rng);
      std::uint32_t j = vertex(rng);
      if (i == j) j = (j + 1) % n;
      const Elem c{unit(rng)};
      const Elem c2{unit(rng)};
      recheck(i, j, c, c2);
    }
  }

  return ChapmanGraph(ext, lambda, std::move(reps), std::move(adj), std::move(diag));
}

const char* to_string(ChapmanVerdict v) {
  switch (v) {
    case ChapmanVerdict::certified:
      return "certified";
    case ChapmanVerdict::consistent_not_certified:
      return "consistent, not certified";
    case ChapmanVerdict::not_isomorphic:
      return "not isomorphic";
  }
  return "?";
}

ChapmanComparison chapman_compare(const ChapmanGraph& h, const PaleyLikeGraph& g) {
  ChapmanComparison out;
  const std::uint32_t n = g.order();
  if (h.order() != n) {
    out.detail = "orders differ: " + std::to_string(h.order()) + " vs " + std::to_string(n);
    return out;
  }
  std::vector<std::size_t> deg_h(n), deg_g(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    deg_h[u] = h.matrix().row_count(u);
    deg_g[u] = g.degree(u);
  }
  std::sort(deg_h.begin(), deg_h.end());
  std::sort(deg_g.begin(), deg_g.end());
  if (deg_h != deg_g) {
    out.detail = "degree sequences differ";
    return out;
  }
  const CodegreeSpectrum spec_h = codegree_spectrum(h.matrix());
  const CodegreeSpectrum spec_g = codegree_spectrum(g.matrix());
  if (spec_h.histogram != spec_g.histogram) {
    out.detail = "codegree spectra differ";
    return out;
  }
  out.verdict = ChapmanVerdict::consistent_not_certified;
  out.detail = "degree sequence and codegree spectrum agree";
  if (!h.diagnostics().undefined_pairs.empty()) {
    out.detail += "; H has undefined pairs";
    return out;
  }
  if (!g.param().generator) {
    out.detail += "; G has no circulant labeling for this a";
    return out;
  }
  const CirculantLabeling lab = circulant_labeling(g.field(), g.param());
  if (!verify_circulant(g, lab)) {
    out.detail += "; G failed its circulant certificate";
    return out;
  }

  // w_i = [gamma^i] for a primitive root gamma: its class generates the
  // cyclic quotient of order q+1, and [u] -> [gamma u] preserves H.
  const QuadExtCtx& ext = h.extension();
  const QuadElem gamma = ext.primitive_root();
  std::vector<std::uint32_t> w(n);
  QuadElem power = QuadExtCtx::one();
  for (std::uint32_t i = 0; i < n; ++i) {
    w[i] = h.index_of(power);
    power = ext.mul(power, gamma);
  }
  std::vector<std::uint8_t> in_s_h(n, 0);
  for (std::uint32_t i = 1; i < n; ++i) in_s_h[i] = h.matrix().test(w[0], w[i]) ? 1 : 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i != j && h.matrix().test(w[i], w[j]) != (in_s_h[(j + n - i) % n] != 0)) {
        out.detail += "; H is not circulant along [gamma^i]";
        return out;
      }
    }
  }

  for (std::uint64_t m = 1; m < n; ++m) {
    if (std::gcd(m, std::uint64_t{n}) != 1) continue;
    bool match = true;
    for (std::uint32_t d : lab.connection) {
      if (!in_s_h[(m * d) % n]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    VertexMap map(n);
    for (std::uint32_t i = 0; i < n; ++i) map[vertex_index(lab.vertices[i])] = w[(m * i) % n];
    const Verdict v = verify_vertex_map(g.matrix(), h.matrix(), map, false);
    if (!v) continue;
    out.verdict = ChapmanVerdict::certified;
    out.multiplier = m;
    out.map = std::move(map);
    out.detail = "multiplier " + std::to_string(m) + " maps S_G onto S_H";
    return out;
  }
  out.detail += "; no multiplier maps S_G onto S_H";
  return out;
}

}  // namespace char2paley
