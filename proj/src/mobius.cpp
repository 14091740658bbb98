#include "char2paley/mobius.hpp"

#include <random>

#include "char2paley/errors.hpp"
#include "char2paley/numtheory.hpp"

namespace char2paley {

namespace {

void require_trace_one(const FieldCtx& ctx, Elem a, const char* what) {
  if (ctx.trace(a) != kTrace1) {
    throw PreconditionError(std::string(what) + ": parameter a=" + to_hex(a.bits) +
                            " has trace 0, need trace 1");
  }
}

}  // namespace

Elem ProjPoint::value() const {
  if (infinity_) throw PreconditionError("point at infinity has no field value");
  return value_;
}

std::string point_label(ProjPoint p) {
  return p.is_infinity() ? std::string("inf") : to_hex(p.value().bits);
}

ProjPoint parse_point_label(const FieldCtx& ctx, const std::string& text) {
  if (text == "inf") return ProjPoint::infinity();
  return ProjPoint::finite(ctx.elem(parse_hex(text)));
}

MobiusMap MobiusMap::make(const FieldCtx& ctx, Elem m00, Elem m01, Elem m10, Elem m11) {
  for (Elem e : {m00, m01, m10, m11}) {
    if (!ctx.contains(e)) throw PreconditionError("matrix entry outside the field");
  }
  const Elem det = FieldCtx::add(ctx.mul(m00, m11), ctx.mul(m01, m10));
  if (det == FieldCtx::zero()) throw PreconditionError("singular Mobius matrix");
  return MobiusMap(m00, m01, m10, m11);
}

ProjPoint apply(const FieldCtx& ctx, const MobiusMap& m, ProjPoint p) {
  Elem num, den;
  if (p.is_infinity()) {
    num = m.m00();
    den = m.m10();
  } else {
    const Elem z = p.value();
    num = FieldCtx::add(ctx.mul(m.m00(), z), m.m01());
    den = FieldCtx::add(ctx.mul(m.m10(), z), m.m11());
  }
  if (den == FieldCtx::zero()) return ProjPoint::infinity();
  return ProjPoint::finite(ctx.div(num, den));
}

MobiusMap compose(const FieldCtx& ctx, const MobiusMap& outer, const MobiusMap& inner) {
  auto dot = [&](Elem a, Elem b, Elem c, Elem d) {
    return FieldCtx::add(ctx.mul(a, b), ctx.mul(c, d));
  };
  return MobiusMap::make(ctx, dot(outer.m00(), inner.m00(), outer.m01(), inner.m10()),
                         dot(outer.m00(), inner.m01(), outer.m01(), inner.m11()),
                         dot(outer.m10(), inner.m00(), outer.m11(), inner.m10()),
                         dot(outer.m10(), inner.m01(), outer.m11(), inner.m11()));
}

MobiusMap inverse(const FieldCtx& ctx, const MobiusMap& m) {
  // Adjugate; signs vanish in characteristic two.
  return MobiusMap::make(ctx, m.m11(), m.m01(), m.m10(), m.m00());
}

MobiusMap alpha_of(const FieldCtx& ctx, Elem a) {
  require_trace_one(ctx, a, "alpha_of");
  return MobiusMap::make(ctx, FieldCtx::zero(), a, FieldCtx::one(), FieldCtx::one());
}

MobiusMap beta_of(const FieldCtx& ctx, ProjPoint y, Elem a) {
  require_trace_one(ctx, a, "beta_of");
  if (y.is_infinity()) return MobiusMap::identity();
  const Elem yv = y.value();
  return MobiusMap::make(ctx, FieldCtx::add(yv, FieldCtx::one()), a, FieldCtx::one(), yv);
}

std::vector<ProjPoint> orbit(const FieldCtx& ctx, const MobiusMap& m, ProjPoint start) {
  std::vector<ProjPoint> out{start};
  for (ProjPoint p = apply(ctx, m, start); p != start; p = apply(ctx, m, p)) out.push_back(p);
  return out;
}

std::uint64_t orbit_length(const FieldCtx& ctx, const MobiusMap& m, ProjPoint start) {
  std::uint64_t n = 1;
  for (ProjPoint p = apply(ctx, m, start); p != start; p = apply(ctx, m, p)) ++n;
  return n;
}

Elem find_generator_a(const FieldCtx& ctx) {
  const std::uint64_t full = std::uint64_t{ctx.order()} + 1;
  for (std::uint32_t v = 1; v < ctx.order(); ++v) {
    const Elem a{v};
    if (ctx.trace(a) != kTrace1) continue;
    if (orbit_length(ctx, alpha_of(ctx, a), ProjPoint::infinity()) == full) return a;
  }
  throw InternalError("no trace-one a generates an orbit of length q+1");
}

QuadExtCtx::QuadExtCtx(FieldCtx base) : QuadExtCtx(base, base.first_trace_one()) {}

QuadExtCtx::QuadExtCtx(FieldCtx base, Elem a0) : base_(std::move(base)), a0_(a0) {
  require_trace_one(base_, a0_, "QuadExtCtx");
}

std::uint64_t QuadExtCtx::group_order() const {
  const std::uint64_t q = base_.order();
  return q * q - 1;
}

std::uint64_t QuadExtCtx::encode(QuadElem x) const {
  return std::uint64_t{x.c0.bits} | (std::uint64_t{x.c1.bits} << base_.degree());
}

QuadElem QuadExtCtx::decode(std::uint64_t v) const {
  const std::uint64_t mask = base_.order() - 1;
  return {base_.elem(v & mask), base_.elem(v >> base_.degree())};
}

QuadElem QuadExtCtx::mul(QuadElem x, QuadElem y) const {
  const Elem hi = base_.mul(x.c1, y.c1);
  return {FieldCtx::add(base_.mul(x.c0, y.c0), base_.mul(a0_, hi)),
          FieldCtx::add(FieldCtx::add(base_.mul(x.c0, y.c1), base_.mul(x.c1, y.c0)), hi)};
}

QuadElem QuadExtCtx::pow(QuadElem x, std::uint64_t e) const {
  QuadElem result = one();
  while (e != 0) {
    if (e & 1u) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

Elem QuadExtCtx::norm(QuadElem x) const {
  const QuadElem n = mul(x, conj(x));
  if (!in_base(n)) throw InternalError("norm left the base field");
  return n.c0;
}

QuadElem QuadExtCtx::inv(QuadElem x) const {
  if (x == zero()) throw DivisionByZero("inverse of zero in GF(q^2)");
  const Elem n_inv = base_.inv(norm(x));
  const QuadElem c = conj(x);
  return {base_.mul(c.c0, n_inv), base_.mul(c.c1, n_inv)};
}

std::uint64_t QuadExtCtx::order_of(QuadElem x) const {
  if (x == zero()) throw DivisionByZero("zero has no multiplicative order");
  std::uint64_t n = group_order();
  for (std::uint64_t p : prime_factors(n)) {
    while (n % p == 0 && pow(x, n / p) == one()) n /= p;
  }
  return n;
}

QuadElem QuadExtCtx::primitive_root() const {
  const std::uint64_t full = group_order();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> pick(1, full);
  for (int trial = 0; trial < 64; ++trial) {
    const QuadElem g = decode(pick(rng));
    if (order_of(g) == full) return g;
  }
  for (std::uint64_t v = 1; v <= full; ++v) {
    const QuadElem g = decode(v);
    if (order_of(g) == full) return g;
  }
  throw InternalError("GF(q^2) has no primitive root");
}

QuadElem QuadExtCtx::lambda_of(Elem a) const {
  if (base_.trace(a) != kTrace1) {
    throw NoSolution("z^2+z+" + to_hex(a.bits) + " splits over the base field (trace 0)");
  }
  const Elem b = base_.solve_artin_schreier(FieldCtx::add(a, a0_)).first;
  const QuadElem lambda{b, Elem{1}};
  const QuadElem check = add(add(mul(lambda, lambda), lambda), embed(a));
  if (check != zero()) throw InternalError("lambda is not a root of z^2+z+a");
  return lambda;
}

std::uint64_t QuadExtCtx::lambda_ratio_order(Elem a) const {
  const QuadElem lambda = lambda_of(a);
  const QuadElem ratio = div(conj(lambda), lambda);
  std::uint64_t n = std::uint64_t{base_.order()} + 1;
  if (pow(ratio, n) != one()) throw InternalError("conj(lambda)/lambda has order not dividing q+1");
  for (std::uint64_t p : prime_factors(n)) {
    while (n % p == 0 && pow(ratio, n / p) == one()) n /= p;
  }
  if (n <= 2) throw InternalError("conj(lambda)/lambda has order <= 2");
  return n;
}

Elem QuadExtCtx::construct_a_for_order(std::uint64_t m) const {
  const std::uint64_t q1 = std::uint64_t{base_.order()} + 1;
  if (m <= 2 || q1 % m != 0) {
    throw PreconditionError("order m=" + std::to_string(m) + " must exceed 2 and divide q+1=" +
                            std::to_string(q1));
  }
  const QuadElem g = primitive_root();
  // nu^(q-1) = g^((q^2-1)/m) has order exactly m.
  const QuadElem nu = pow(g, q1 / m);
  const QuadElem b = embed(trace_to_base(nu));
  const QuadElem lambda = div(nu, b);
  const QuadElem a = mul(lambda, conj(lambda));
  if (!in_base(a) || base_.trace(a.c0) != kTrace1 || lambda_ratio_order(a.c0) != m) {
    throw InternalError("constructed a fails its order postcondition");
  }
  return a.c0;
}

}  // namespace char2paley
