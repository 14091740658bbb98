#include "char2paley/construct.hpp"

#include <algorithm>

#include "char2paley/errors.hpp"
#include "char2paley/parallel.hpp"

namespace char2paley {

namespace {

// Same totalization as adjacency(), without building the beta matrix.
TraceBit edge_trace(const FieldCtx& ctx, Elem a, ProjPoint x, ProjPoint y) {
  if (y.is_infinity()) return ctx.trace(x.value());
  if (x.is_infinity()) return ctx.trace(FieldCtx::add(y.value(), FieldCtx::one()));
  return adjacency_formula(ctx, a, x.value(), y.value());
}

void require_dense(const FieldCtx& ctx) {
  if (ctx.order() + 1 > kMaxDenseOrder) {
    throw CapacityError("dense adjacency capped at " + std::to_string(kMaxDenseOrder) +
                        " vertices; q+1=" + std::to_string(ctx.order() + 1));
  }
}

// Row x, with y = x + z: (xy + x + a)/(x + y) = c/z + x where c = x^2 + x + a,
// so the trace is tr(c * z^-1) + tr(x). w -> tr(c w) is linear, so it is a
// parity against the mask of tr(c z^i) over the basis.
BitMatrix fill_matrix(const FieldCtx& ctx, Elem a) {
  const std::uint32_t q = ctx.order();
  const std::uint32_t n = q + 1;
  std::vector<std::uint32_t> inverse(q, 0);
  for (std::uint32_t z = 1; z < q; ++z) inverse[z] = ctx.inv(Elem{z}).bits;
  BitMatrix m(n);
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u) {
      if (u == 0) {
        for (std::uint32_t v = 1; v < n; ++v) {
          if (edge_trace(ctx, a, ProjPoint::infinity(), vertex_at(v)) == kTrace0) m.set(0, v);
        }
        continue;
      }
      const Elem x{static_cast<std::uint32_t>(u - 1)};
      const Elem c = FieldCtx::add(FieldCtx::add(ctx.square(x), x), a);
      std::uint32_t mask = 0;
      for (unsigned i = 0; i < ctx.degree(); ++i) {
        if (ctx.trace(ctx.mul(c, Elem{1u << i})) == kTrace1) mask |= 1u << i;
      }
      const unsigned tr_x = ctx.trace(x).value;
      if (ctx.trace(x) == kTrace0) m.set(u, 0);
      for (std::uint32_t z = 1; z < q; ++z) {
        if ((__builtin_parity(inverse[z] & mask) ^ tr_x) == 0) m.set(u, (x.bits ^ z) + 1);
      }
    }
  });
  return m;
}

}  // namespace

ParamA make_param(const FieldCtx& ctx, Elem a) {
  const MobiusMap alpha = alpha_of(ctx, a);  // validates tr(a) = 1
  const bool gen = orbit_length(ctx, alpha, ProjPoint::infinity()) == std::uint64_t{ctx.order()} + 1;
  return ParamA{a, gen};
}

ParamA default_param(const FieldCtx& ctx) { return ParamA{find_generator_a(ctx), true}; }

TraceBit adjacency(const FieldCtx& ctx, const ParamA& a, ProjPoint x, ProjPoint y) {
  if (x == y) throw PreconditionError("adjacency of a vertex with itself");
  const ProjPoint image = apply(ctx, beta_of(ctx, y, a.a), x);
  return ctx.trace(image.value());
}

TraceBit adjacency_formula(const FieldCtx& ctx, Elem a, Elem x, Elem y) {
  const Elem num = FieldCtx::add(FieldCtx::add(ctx.mul(x, y), x), a);
  return ctx.trace(ctx.div(num, FieldCtx::add(x, y)));
}

PaleyLikeGraph::PaleyLikeGraph(FieldCtx ctx, ParamA a, BitMatrix adjacency)
    : ctx_(std::move(ctx)), a_(a), adj_(std::move(adjacency)) {
  if (adj_.size() != std::size_t{ctx_.order()} + 1) {
    throw PreconditionError("adjacency matrix size does not match q+1");
  }
}

PaleyLikeGraph PaleyLikeGraph::with_edge_toggled(std::uint32_t u, std::uint32_t v) const {
  if (u == v) throw PreconditionError("cannot toggle a loop");
  BitMatrix m = adj_;
  const bool now = !m.test(u, v);
  m.set(u, v, now);
  m.set(v, u, now);
  return PaleyLikeGraph(ctx_, a_, std::move(m));
}

PaleyLikeTournament::PaleyLikeTournament(FieldCtx ctx, ParamA a, BitMatrix arcs)
    : ctx_(std::move(ctx)), a_(a), arcs_(std::move(arcs)) {
  if (arcs_.size() != std::size_t{ctx_.order()} + 1) {
    throw PreconditionError("arc matrix size does not match q+1");
  }
}

PaleyLikeGraph build_graph(const FieldCtx& ctx, const ParamA& a) {
  if (ctx.degree() % 2 != 0) {
    throw PreconditionError("k=" + std::to_string(ctx.degree()) + " is odd: G_k is a tournament");
  }
  if (ctx.trace(a.a) != kTrace1) throw PreconditionError("parameter a must have trace 1");
  require_dense(ctx);
  return PaleyLikeGraph(ctx, a, fill_matrix(ctx, a.a));
}

PaleyLikeTournament build_tournament(const FieldCtx& ctx, const ParamA& a) {
  if (ctx.degree() % 2 == 0) {
    throw PreconditionError("k=" + std::to_string(ctx.degree()) + " is even: G_k is a graph");
  }
  if (ctx.trace(a.a) != kTrace1) throw PreconditionError("parameter a must have trace 1");
  require_dense(ctx);
  return PaleyLikeTournament(ctx, a, fill_matrix(ctx, a.a));
}

std::uint64_t degree_streaming(const FieldCtx& ctx, const ParamA& a, ProjPoint x) {
  std::uint64_t deg = 0;
  const std::uint32_t n = ctx.order() + 1;
  for (std::uint32_t v = 0; v < n; ++v) {
    const ProjPoint y = vertex_at(v);
    if (y != x && edge_trace(ctx, a.a, x, y) == kTrace0) ++deg;
  }
  return deg;
}

ProjPoint CirculantLabeling::at(std::int64_t i) const {
  const std::int64_t n = order();
  return vertices[static_cast<std::size_t>(((i % n) + n) % n)];
}

CirculantLabeling circulant_labeling(const FieldCtx& ctx, const ParamA& a) {
  if (!a.generator) {
    throw PreconditionError("a=" + to_hex(a.a.bits) + " does not generate an orbit of length q+1");
  }
  CirculantLabeling lab;
  lab.param = a;
  lab.vertices = orbit(ctx, alpha_of(ctx, a.a), ProjPoint::infinity());
  const std::uint32_t n = ctx.order() + 1;
  if (lab.vertices.size() != n) throw PreconditionError("orbit of infinity is shorter than q+1");
  lab.position.assign(n, 0);
  lab.in_connection.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    lab.position[vertex_index(lab.vertices[i])] = i;
    if (i != 0 && ctx.trace(lab.vertices[i].value()) == kTrace0) {
      lab.connection.push_back(i);
      lab.in_connection[i] = 1;
    }
  }
  return lab;
}

Verdict verify_circulant(const PaleyLikeGraph& g, const CirculantLabeling& lab) {
  if (g.param().a != lab.param.a || g.order() != lab.order()) {
    throw PreconditionError("graph and labeling come from different parameters");
  }
  const std::uint32_t n = g.order();
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t u = vertex_index(lab.vertices[i]);
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool expect = lab.contains((j + n - i) % n);
      if (g.has_edge(u, vertex_index(lab.vertices[j])) != expect) {
        return Verdict::fail("v_" + std::to_string(i) + "=" + point_label(lab.vertices[i]) +
                             ", v_" + std::to_string(j) + "=" + point_label(lab.vertices[j]) +
                             ": edge " + (expect ? "missing" : "unexpected"));
      }
    }
  }
  return Verdict::ok();
}

}  // namespace char2paley
