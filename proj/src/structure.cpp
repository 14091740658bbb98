#include "char2paley/structure.hpp"

#include "char2paley/errors.hpp"
#include "char2paley/numtheory.hpp"

namespace char2paley {

ShiftIso shift_isomorphism(const FieldCtx& ctx, const ParamA& a, const ParamA& a_prime) {
  if (ctx.trace(a.a) != kTrace1 || ctx.trace(a_prime.a) != kTrace1) {
    throw PreconditionError("shift isomorphism needs tr(a) = tr(a') = 1");
  }
  const auto [b0, b1] = ctx.solve_artin_schreier(FieldCtx::add(a.a, a_prime.a));
  Elem b = b0;
  if (ctx.degree() % 2 == 1 && ctx.trace(b) == kTrace1) b = b1;
  return ShiftIso{b, ctx.trace(b) == kTrace0 ? IsoKind::isomorphism : IsoKind::complement};
}

VertexMap shift_map(const FieldCtx& ctx, Elem b) {
  VertexMap map(std::size_t{ctx.order()} + 1);
  map[0] = 0;
  for (std::uint32_t v = 0; v < ctx.order(); ++v) map[v + 1] = (v ^ b.bits) + 1;
  return map;
}

VertexMap alpha_map(const FieldCtx& ctx, Elem a) {
  const MobiusMap alpha = alpha_of(ctx, a);
  VertexMap map(std::size_t{ctx.order()} + 1);
  for (std::uint32_t u = 0; u < map.size(); ++u) {
    map[u] = vertex_index(apply(ctx, alpha, vertex_at(u)));
  }
  return map;
}

VertexMap doubling_map(const CirculantLabeling& lab) {
  const std::uint32_t n = lab.order();
  VertexMap map(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    map[vertex_index(lab.vertices[i])] = vertex_index(lab.at(2 * std::int64_t{i}));
  }
  return map;
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  VertexMap out(inner.size());
  for (std::size_t u = 0; u < inner.size(); ++u) out[u] = outer[inner[u]];
  return out;
}

Verdict verify_vertex_map(const BitMatrix& from, const BitMatrix& to, const VertexMap& map,
                          bool complement) {
  const std::size_t n = from.size();
  if (to.size() != n || map.size() != n) return Verdict::fail("size mismatch");
  std::vector<std::uint8_t> hit(n, 0);
  for (std::uint32_t u : map) {
    if (u >= n || hit[u]) return Verdict::fail("map is not a permutation at image " + std::to_string(u));
    hit[u] = 1;
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (to.test(map[u], map[v]) != (from.test(u, v) != complement)) {
        return Verdict::fail("pair (" + point_label(vertex_at(u)) + ", " +
                             point_label(vertex_at(v)) + ") -> (" + point_label(vertex_at(map[u])) +
                             ", " + point_label(vertex_at(map[v])) + ")");
      }
    }
  }
  return Verdict::ok();
}

namespace {

void require_shift_relation(const FieldCtx& ctx, Elem a, Elem a_prime, Elem b) {
  const Elem lifted = FieldCtx::add(FieldCtx::add(ctx.square(b), b), a);
  if (lifted != a_prime) {
    throw PreconditionError("b^2 + b + a != a' for b=" + to_hex(b.bits));
  }
}

}  // namespace

Verdict verify_shift_isomorphism(const PaleyLikeGraph& g_prime, const PaleyLikeGraph& g,
                                 const ShiftIso& iso) {
  require_shift_relation(g.field(), g.param().a, g_prime.param().a, iso.b);
  return verify_vertex_map(g_prime.matrix(), g.matrix(), shift_map(g.field(), iso.b),
                           iso.kind == IsoKind::complement);
}

Verdict verify_shift_isomorphism(const PaleyLikeTournament& t_prime, const PaleyLikeTournament& t,
                                 const ShiftIso& iso) {
  require_shift_relation(t.field(), t.param().a, t_prime.param().a, iso.b);
  return verify_vertex_map(t_prime.matrix(), t.matrix(), shift_map(t.field(), iso.b),
                           iso.kind == IsoKind::complement);
}

VertexMap isomorphism_to(const FieldCtx& ctx, const ShiftIso& iso, const CirculantLabeling& lab) {
  VertexMap map = shift_map(ctx, iso.b);
  if (iso.kind == IsoKind::complement) map = compose(doubling_map(lab), map);
  return map;
}

Verdict verify_self_complementary(const PaleyLikeGraph& g, const CirculantLabeling& lab) {
  if (g.param().a != lab.param.a || g.order() != lab.order()) {
    throw PreconditionError("graph and labeling come from different parameters");
  }
  return verify_vertex_map(g.matrix(), g.matrix(), doubling_map(lab), true);
}

Verdict verify_automorphisms(const PaleyLikeGraph& g, const ParamA& a) {
  if (g.field().degree() % 2 != 0) throw PreconditionError("automorphism check needs even k");
  Verdict alpha = verify_vertex_map(g.matrix(), g.matrix(), alpha_map(g.field(), a.a), false);
  if (!alpha) return Verdict::fail("alpha: " + alpha.witness);
  Verdict plus_one =
      verify_vertex_map(g.matrix(), g.matrix(), shift_map(g.field(), FieldCtx::one()), false);
  if (!plus_one) return Verdict::fail("z+1: " + plus_one.witness);
  return Verdict::ok();
}

Verdict verify_tournament_reversal(const PaleyLikeTournament& t) {
  return verify_vertex_map(t.matrix(), t.matrix(), shift_map(t.field(), FieldCtx::one()), true);
}

HamiltonianDecomposition hamiltonian_decompose(const PaleyLikeGraph& g, const CirculantLabeling& lab) {
  const std::uint32_t p = g.order();
  if (!is_prime(p)) {
    throw CapacityError("q+1=" + std::to_string(p) +
                        " is composite; explicit Hamiltonian decomposition is only provided "
                        "for prime q+1");
  }
  if (g.param().a != lab.param.a || lab.order() != p) {
    throw PreconditionError("graph and labeling come from different parameters");
  }
  HamiltonianDecomposition dec;
  dec.p = p;
  for (std::uint32_t d : lab.connection) {
    if (2 * d > p) continue;
    if (!lab.contains(p - d)) {
      throw InternalError("connection set not closed under negation at d=" + std::to_string(d));
    }
    dec.classes.emplace_back(d, p - d);
    std::vector<ProjPoint> cycle;
    cycle.reserve(p);
    for (std::uint32_t t = 0; t < p; ++t) cycle.push_back(lab.at(std::int64_t{t} * d));
    dec.cycles.push_back(std::move(cycle));
  }
  return dec;
}

Verdict certify_decomposition(const PaleyLikeGraph& g, const HamiltonianDecomposition& dec) {
  const std::uint32_t n = g.order();
  BitMatrix used(n);
  for (std::size_t c = 0; c < dec.cycles.size(); ++c) {
    const auto& cycle = dec.cycles[c];
    const std::string tag = "cycle " + std::to_string(c) + ": ";
    if (cycle.size() != n) return Verdict::fail(tag + "length " + std::to_string(cycle.size()));
    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
      const std::uint32_t u = vertex_index(cycle[t]);
      const std::uint32_t v = vertex_index(cycle[(t + 1) % n]);
      if (seen[u]) return Verdict::fail(tag + "repeats " + point_label(cycle[t]));
      seen[u] = 1;
      if (!g.has_edge(u, v)) {
        return Verdict::fail(tag + "non-edge " + point_label(cycle[t]) + " " +
                             point_label(cycle[(t + 1) % n]));
      }
      if (used.test(u, v)) {
        return Verdict::fail(tag + "reuses edge " + point_label(cycle[t]) + " " +
                             point_label(cycle[(t + 1) % n]));
      }
      used.set(u, v);
      used.set(v, u);
    }
  }
  if (used.count() / 2 != g.edge_count()) {
    return Verdict::fail("cycles cover " + std::to_string(used.count() / 2) + " of " +
                         std::to_string(g.edge_count()) + " edges");
  }
  return Verdict::ok();
}

}  // namespace char2paley
