#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "char2paley/errors.hpp"
#include "char2paley/mobius.hpp"

using namespace char2paley;

namespace {

ProjPoint fin(std::uint32_t v) { return ProjPoint::finite(Elem{v}); }

// Affine evaluation with the usual conventions at infinity.
ProjPoint naive_apply(const FieldCtx& f, const MobiusMap& m, ProjPoint p) {
  if (p.is_infinity()) {
    return m.m10().bits == 0 ? ProjPoint::infinity() : ProjPoint::finite(f.div(m.m00(), m.m10()));
  }
  const Elem num = FieldCtx::add(f.mul(m.m00(), p.value()), m.m01());
  const Elem den = FieldCtx::add(f.mul(m.m10(), p.value()), m.m11());
  return den.bits == 0 ? ProjPoint::infinity() : ProjPoint::finite(f.div(num, den));
}

ProjPoint plus_one(ProjPoint p) {
  return p.is_infinity() ? p : ProjPoint::finite(FieldCtx::add(p.value(), FieldCtx::one()));
}

}  // namespace

TEST_CASE("vertex numbering and labels") {
  const FieldCtx f(4);
  CHECK(vertex_index(ProjPoint::infinity()) == 0);
  CHECK(vertex_index(fin(0)) == 1);
  for (std::uint32_t v = 0; v <= f.order(); ++v) {
    CHECK(vertex_index(vertex_at(v)) == v);
    CHECK(parse_point_label(f, point_label(vertex_at(v))) == vertex_at(v));
  }
  CHECK(point_label(ProjPoint::infinity()) == "inf");
  CHECK(point_label(fin(0xa)) == "0xa");
  CHECK_THROWS_AS(ProjPoint::infinity().value(), PreconditionError);
  CHECK_THROWS_AS(parse_point_label(f, "0x10"), PreconditionError);
}

TEST_CASE("apply matches affine evaluation") {
  const FieldCtx f(3);
  std::minstd_rand rng(5);
  for (int t = 0; t < 200; ++t) {
    const Elem a = f.elem(rng() % 8), b = f.elem(rng() % 8), c = f.elem(rng() % 8), d = f.elem(rng() % 8);
    if (FieldCtx::add(f.mul(a, d), f.mul(b, c)).bits == 0) {
      CHECK_THROWS_AS(MobiusMap::make(f, a, b, c, d), PreconditionError);
      continue;
    }
    const MobiusMap m = MobiusMap::make(f, a, b, c, d);
    for (std::uint32_t v = 0; v <= f.order(); ++v) {
      CHECK(apply(f, m, vertex_at(v)) == naive_apply(f, m, vertex_at(v)));
    }
  }
}

TEST_CASE("composition and inverse") {
  const FieldCtx f(4);
  std::minstd_rand rng(9);
  auto random_map = [&] {
    for (;;) {
      const Elem a = f.elem(rng() % 16), b = f.elem(rng() % 16), c = f.elem(rng() % 16), d = f.elem(rng() % 16);
      if (FieldCtx::add(f.mul(a, d), f.mul(b, c)).bits != 0) return MobiusMap::make(f, a, b, c, d);
    }
  };
  for (int t = 0; t < 50; ++t) {
    const MobiusMap m1 = random_map(), m2 = random_map();
    const MobiusMap both = compose(f, m1, m2);
    const MobiusMap inv = inverse(f, m1);
    for (std::uint32_t v = 0; v <= f.order(); ++v) {
      const ProjPoint p = vertex_at(v);
      CHECK(apply(f, both, p) == apply(f, m1, apply(f, m2, p)));
      CHECK(apply(f, inv, apply(f, m1, p)) == p);
    }
  }
}

TEST_CASE("alpha is fixed-point free and inverts to 1 + a/z") {
  for (unsigned k = 2; k <= 8; ++k) {
    const FieldCtx f(k);
    for (Elem a : f.trace_partition().second) {
      const MobiusMap al = alpha_of(f, a);
      const MobiusMap back = MobiusMap::make(f, FieldCtx::one(), a, FieldCtx::one(), FieldCtx::zero());
      for (std::uint32_t v = 0; v <= f.order(); ++v) {
        const ProjPoint p = vertex_at(v);
        CHECK(apply(f, al, p) != p);
        CHECK(apply(f, back, apply(f, al, p)) == p);
      }
    }
  }
  const FieldCtx f(4);
  CHECK_THROWS_AS(alpha_of(f, FieldCtx::one()), PreconditionError);
}

TEST_CASE("k = 2 orbit of infinity") {
  const FieldCtx f(2);
  const auto orb = orbit(f, alpha_of(f, Elem{2}), ProjPoint::infinity());
  const std::vector<ProjPoint> expect = {ProjPoint::infinity(), fin(0), fin(2), fin(3), fin(1)};
  CHECK(orb == expect);
  CHECK(find_generator_a(f) == Elem{2});
}

TEST_CASE("generator parameters") {
  CHECK(find_generator_a(FieldCtx(4)) == Elem{0x8});
  CHECK(find_generator_a(FieldCtx(6)) == Elem{0x21});
  CHECK(find_generator_a(FieldCtx(8)) == Elem{0x20});
}

TEST_CASE("orbit identities v_{-i} = 1 + v_i and v_{2i} = v_i^2 + a") {
  for (unsigned k = 2; k <= 10; ++k) {
    const FieldCtx f(k);
    const Elem a = find_generator_a(f);
    const auto v = orbit(f, alpha_of(f, a), ProjPoint::infinity());
    const std::size_t n = f.order() + 1;
    REQUIRE(v.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(v[(n - i) % n] == plus_one(v[i]));
      const ProjPoint sq = v[i].is_infinity()
                               ? v[i]
                               : ProjPoint::finite(FieldCtx::add(f.square(v[i].value()), a));
      CHECK(v[(2 * i) % n] == sq);
    }
  }
}

TEST_CASE("beta sends v_i to v_{i-j}") {
  for (unsigned k : {2u, 4u, 6u, 5u}) {
    const FieldCtx f(k);
    const Elem a = find_generator_a(f);
    const auto v = orbit(f, alpha_of(f, a), ProjPoint::infinity());
    const std::size_t n = v.size();
    for (std::size_t j = 0; j < n; ++j) {
      const MobiusMap b = beta_of(f, v[j], a);
      for (std::size_t i = 0; i < n; ++i) CHECK(apply(f, b, v[i]) == v[(i + n - j) % n]);
    }
  }
}

TEST_CASE("lambda is a root of z^2 + z + a") {
  for (unsigned k : {2u, 4u, 6u, 8u}) {
    const QuadExtCtx ext{FieldCtx(k)};
    const FieldCtx& f = ext.base();
    CHECK(ext.group_order() == std::uint64_t{f.order()} * f.order() - 1);
    for (Elem a : f.trace_partition().second) {
      const QuadElem l = ext.lambda_of(a);
      CHECK(QuadExtCtx::add(QuadExtCtx::add(ext.mul(l, l), l), QuadExtCtx::embed(a)) ==
            QuadExtCtx::zero());
      CHECK(QuadExtCtx::conj(l) == QuadExtCtx::add(l, QuadExtCtx::one()));
      CHECK(ext.norm(l) == a);
      CHECK(QuadExtCtx::trace_to_base(l) == FieldCtx::one());
      CHECK(ext.pow(l, f.order()) == QuadExtCtx::conj(l));
    }
    CHECK_THROWS_AS(ext.lambda_of(FieldCtx::zero()), NoSolution);
  }
}

TEST_CASE("extension arithmetic") {
  const QuadExtCtx ext{FieldCtx(4)};
  const QuadElem g = ext.primitive_root();
  CHECK(ext.order_of(g) == ext.group_order());
  std::set<std::uint64_t> seen;
  QuadElem x = QuadExtCtx::one();
  for (std::uint64_t i = 0; i < ext.group_order(); ++i) {
    seen.insert(ext.encode(x));
    CHECK(ext.decode(ext.encode(x)) == x);
    CHECK(ext.mul(x, ext.inv(x)) == QuadExtCtx::one());
    x = ext.mul(x, g);
  }
  CHECK(seen.size() == ext.group_order());
  CHECK_THROWS_AS(ext.inv(QuadExtCtx::zero()), DivisionByZero);
}

TEST_CASE("ratio order equals the alpha-orbit length") {
  for (unsigned k = 2; k <= 8; ++k) {
    const QuadExtCtx ext{FieldCtx(k)};
    const FieldCtx& f = ext.base();
    for (Elem a : f.trace_partition().second) {
      const std::uint64_t m = ext.lambda_ratio_order(a);
      CHECK(m == orbit_length(f, alpha_of(f, a), ProjPoint::infinity()));
      CHECK((f.order() + 1) % m == 0);
    }
  }
}

TEST_CASE("k = 6 orders and their construction") {
  const QuadExtCtx ext{FieldCtx(6)};
  std::map<std::uint64_t, int> census;
  for (Elem a : ext.base().trace_partition().second) ++census[ext.lambda_ratio_order(a)];
  CHECK(census == std::map<std::uint64_t, int>{{5, 2}, {13, 6}, {65, 24}});
  for (std::uint64_t m : {5u, 13u, 65u}) {
    const Elem a = ext.construct_a_for_order(m);
    CHECK(ext.base().trace(a) == kTrace1);
    CHECK(ext.lambda_ratio_order(a) == m);
  }
  CHECK_THROWS_AS(ext.construct_a_for_order(2), PreconditionError);
  CHECK_THROWS_AS(ext.construct_a_for_order(7), PreconditionError);
}
