#include "char2paley/analyze.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "char2paley/errors.hpp"
#include "char2paley/parallel.hpp"

namespace char2paley {

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u128 pow4(u128 v) { return v * v * v * v; }

void require_even(const FieldCtx& ctx, const char* what) {
  if (ctx.degree() % 2 != 0) {
    throw PreconditionError(std::string(what) + " needs even k, got k=" +
                            std::to_string(ctx.degree()));
  }
}

struct SubsetScore {
  std::uint64_t twice_dev = 0;
  std::uint64_t size = 1;
  std::uint64_t index = 0;
  bool violated = false;
  std::uint64_t first_violation = 0;
  std::uint64_t first_violation_size = 0;
  std::uint64_t first_violation_edges = 0;
};

// True when (d1, h1) has strictly larger d/h than (d2, h2).
bool worse(std::uint64_t d1, std::uint64_t h1, std::uint64_t d2, std::uint64_t h2) {
  return u128{d1} * h2 > u128{d2} * h1;
}

// Folds one subset with e edges and h vertices into the running score.
void score_subset(SubsetScore& s, std::uint64_t index, std::uint64_t e, std::uint64_t h,
                  std::uint64_t q) {
  if (h == 0) return;
  const std::int64_t pairs = static_cast<std::int64_t>(h * (h - 1) / 2);
  const std::uint64_t d = static_cast<std::uint64_t>(std::llabs(2 * static_cast<std::int64_t>(e) - pairs));
  if (worse(d, h, s.twice_dev, s.size)) {
    s.twice_dev = d;
    s.size = h;
    s.index = index;
  }
  const u128 lhs = pow4(d);
  const u128 rhs = 16 * u128{q} * q * q * pow4(h);
  if (lhs > rhs && !s.violated) {
    s.violated = true;
    s.first_violation = index;
    s.first_violation_size = h;
    s.first_violation_edges = e;
  }
}

void merge(SubsetScore& into, const SubsetScore& from) {
  // Partials arrive in ascending index order, so strict improvement keeps the
  // earliest subset among ties.
  if (worse(from.twice_dev, from.size, into.twice_dev, into.size)) {
    into.twice_dev = from.twice_dev;
    into.size = from.size;
    into.index = from.index;
  }
  if (from.violated && (!into.violated || from.first_violation < into.first_violation)) {
    into.violated = true;
    into.first_violation = from.first_violation;
    into.first_violation_size = from.first_violation_size;
    into.first_violation_edges = from.first_violation_edges;
  }
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) {
  return seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
}

}  // namespace

CodegreePair codegree_direct(const PaleyLikeGraph& g, ProjPoint x, ProjPoint y) {
  if (x == y) throw PreconditionError("codegree of a vertex with itself");
  const std::uint32_t u = vertex_index(x);
  const std::uint32_t v = vertex_index(y);
  return CodegreePair{x, y, g.has_edge(u, v) ? 1 : 0,
                      static_cast<std::uint32_t>(g.matrix().common(u, v))};
}

CodegreePair codegree_streaming(const FieldCtx& ctx, const ParamA& a, ProjPoint x, ProjPoint y) {
  if (x == y) throw PreconditionError("codegree of a vertex with itself");
  CodegreePair out{x, y, adjacency(ctx, a, x, y) == kTrace0 ? 1 : 0, 0};
  const std::uint32_t n = ctx.order() + 1;
  for (std::uint32_t w = 0; w < n; ++w) {
    const ProjPoint z = vertex_at(w);
    if (z == x || z == y) continue;
    if (adjacency(ctx, a, x, z) == kTrace0 && adjacency(ctx, a, y, z) == kTrace0) ++out.ell;
  }
  return out;
}

KloostermanValue kloosterman(const FieldCtx& ctx, Elem b) {
  if (b == FieldCtx::zero()) throw PreconditionError("Kloosterman sum needs b != 0");
  std::int64_t sum = 0;
  for (std::uint32_t v = 1; v < ctx.order(); ++v) {
    const Elem z{v};
    sum += ctx.trace(FieldCtx::add(z, ctx.div(b, z))) == kTrace0 ? 1 : -1;
  }
  return KloostermanValue{b, sum};
}

std::vector<std::int64_t> kloosterman_table(const FieldCtx& ctx) {
  // psi(z + b/z) = psi(z) psi(b z^-1), and w -> tr(b w) is a parity against
  // the mask of tr(b z^i) over the basis.
  const std::uint32_t q = ctx.order();
  std::vector<std::uint32_t> inverses(q, 0);
  std::vector<std::uint8_t> trace_of(q, 0);
  for (std::uint32_t v = 1; v < q; ++v) {
    inverses[v] = ctx.inv(Elem{v}).bits;
    trace_of[v] = ctx.trace(Elem{v}).value;
  }
  std::vector<std::int64_t> table(q, 0);
  parallel_for(q, [&](std::size_t begin, std::size_t end) {
    for (std::size_t bv = std::max<std::size_t>(begin, 1); bv < end; ++bv) {
      const Elem b{static_cast<std::uint32_t>(bv)};
      std::uint32_t mask = 0;
      for (unsigned i = 0; i < ctx.degree(); ++i) {
        if (ctx.trace(ctx.mul(b, Elem{1u << i})) == kTrace1) mask |= 1u << i;
      }
      std::int64_t ones = 0;
      for (std::uint32_t v = 1; v < q; ++v) {
        ones += __builtin_parity(inverses[v] & mask) ^ trace_of[v];
      }
      table[bv] = static_cast<std::int64_t>(q - 1) - 2 * ones;
    }
  });
  return table;
}

std::uint64_t sqrt_q(const FieldCtx& ctx) {
  require_even(ctx, "sqrt(q)");
  return std::uint64_t{1} << (ctx.degree() / 2);
}

std::uint64_t codegree_cap(const FieldCtx& ctx) { return ctx.order() / 4 + sqrt_q(ctx) / 2; }

CodegreeFormula::CodegreeFormula(FieldCtx ctx, CirculantLabeling lab, bool tabulate)
    : ctx_(std::move(ctx)), lab_(std::move(lab)) {
  require_even(ctx_, "codegree formula");
  if (lab_.order() != ctx_.order() + 1) throw PreconditionError("labeling order is not q+1");
  if (tabulate) table_ = kloosterman_table(ctx_);
}

std::pair<Elem, int> CodegreeFormula::reduce_to_infinity(ProjPoint x, ProjPoint y) const {
  if (x == y) throw PreconditionError("codegree of a vertex with itself");
  const std::int64_t i = lab_.position[vertex_index(x)];
  const std::int64_t j = lab_.position[vertex_index(y)];
  const Elem rotated = lab_.at(i - j).value();
  return {rotated, ctx_.trace(rotated) == kTrace0 ? 1 : 0};
}

std::int64_t CodegreeFormula::kloosterman_at(Elem b) const {
  return table_.empty() ? kloosterman(ctx_, b).sum : table_[b.bits];
}

std::uint32_t CodegreeFormula::operator()(ProjPoint x, ProjPoint y) const {
  const auto [xr, eps] = reduce_to_infinity(x, y);
  const Elem b = FieldCtx::add(FieldCtx::add(ctx_.square(xr), xr), lab_.param.a);
  const std::int64_t numerator =
      static_cast<std::int64_t>(ctx_.order()) - 4 * eps + kloosterman_at(b) + 1;
  if (numerator < 0 || numerator % 4 != 0) {
    throw InternalError("codegree formula is not a non-negative integer at b=" + to_hex(b.bits));
  }
  return static_cast<std::uint32_t>(numerator / 4);
}

std::uint32_t codegree_formula(const FieldCtx& ctx, const CirculantLabeling& lab, ProjPoint x,
                               ProjPoint y) {
  return CodegreeFormula(ctx, lab, false)(x, y);
}

CodegreeSpectrum codegree_spectrum(const BitMatrix& adj) {
  CodegreeSpectrum s;
  const std::size_t n = adj.size();
  if (n == 0) return s;
  const std::int64_t quarter = static_cast<std::int64_t>((n - 1) / 4);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      const int eps = adj.test(u, v) ? 1 : 0;
      const auto ell = static_cast<std::uint32_t>(adj.common(u, v));
      ++s.histogram[{eps, ell}];
      ++s.pairs;
      if (ell > s.max_ell || s.pairs == 1) {
        s.max_ell = ell;
        s.max_pair = {u, v};
      }
      const auto dev = static_cast<std::uint32_t>(std::llabs(ell - (quarter - eps)));
      s.max_conference_deviation = std::max(s.max_conference_deviation, dev);
    }
  }
  return s;
}

JumblednessAudit jumbledness_audit(const PaleyLikeGraph& g, AuditMode mode, std::uint64_t samples,
                                   std::uint64_t seed) {
  const BitMatrix& adj = g.matrix();
  const std::uint32_t n = g.order();
  const std::uint64_t q = g.field().order();
  JumblednessAudit out;
  out.mode = mode;
  out.seed = seed;
  SubsetScore total;

  if (mode == AuditMode::exhaustive) {
    if (n > kMaxExhaustiveAuditOrder) {
      throw CapacityError("exhaustive jumbledness audit capped at " +
                          std::to_string(kMaxExhaustiveAuditOrder) + " vertices");
    }
    std::vector<std::uint64_t> rows(n);
    for (std::uint32_t u = 0; u < n; ++u) rows[u] = adj.row(u)[0];
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      std::uint64_t twice_e = 0;
      for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        twice_e += std::popcount(rows[std::countr_zero(m)] & mask);
      }
      score_subset(total, mask, twice_e / 2, std::popcount(mask), q);
    }
    out.samples = subsets;
  } else {
    const std::size_t words = adj.words_per_row();
    const std::uint64_t tail_mask =
        n % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n % 64)) - 1;
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(samples, 256));
    std::vector<SubsetScore> partial(chunks);
    parallel_for(chunks, [&](std::size_t cb, std::size_t ce) {
      std::vector<std::uint64_t> subset(words);
      for (std::size_t c = cb; c < ce; ++c) {
        const std::uint64_t lo = samples * c / chunks;
        const std::uint64_t hi = samples * (c + 1) / chunks;
        for (std::uint64_t i = lo; i < hi; ++i) {
          std::mt19937_64 rng(sample_seed(seed, i));
          for (auto& w : subset) w = rng();
          subset[words - 1] &= tail_mask;
          std::uint64_t h = 0;
          std::uint64_t twice_e = 0;
          for (std::size_t wi = 0; wi < words; ++wi) {
            h += std::popcount(subset[wi]);
            for (std::uint64_t m = subset[wi]; m != 0; m &= m - 1) {
              const auto row = adj.row(wi * 64 + std::countr_zero(m));
              for (std::size_t x = 0; x < words; ++x) twice_e += std::popcount(row[x] & subset[x]);
            }
          }
          score_subset(partial[c], i, twice_e / 2, h, q);
        }
      }
    });
    for (const auto& p : partial) merge(total, p);
    out.samples = samples;
  }

  out.pass = !total.violated;
  out.worst_twice_deviation = total.twice_dev;
  out.worst_size = total.size;
  out.worst_index = total.index;
  const u128 num = pow4(total.twice_dev);
  const u128 den = 16 * u128{q} * q * q * pow4(total.size);
  const u128 g128 = num == 0 ? den : gcd128(num, den);
  out.worst_ratio4_num = u128_to_string(num / g128);
  out.worst_ratio4_den = u128_to_string(den / g128);
  out.worst_ratio = static_cast<double>(total.twice_dev) /
                    (2.0 * std::pow(static_cast<double>(q), 0.75) * static_cast<double>(total.size));
  if (total.violated) {
    out.witness = (mode == AuditMode::exhaustive ? "subset mask " : "sample ") +
                  std::to_string(total.first_violation) + ": |H|=" +
                  std::to_string(total.first_violation_size) +
                  " e(H)=" + std::to_string(total.first_violation_edges);
  }
  return out;
}

}  // namespace char2paley
