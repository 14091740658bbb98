#pragma once

// The projective line PG(1,q), linear fractional maps acting on it, and the
// quadratic extension F_{q^2} used to classify the map z -> a/(z+1).

#include <cstdint>
#include <string>
#include <vector>

#include "char2paley/gf2k.hpp"

namespace char2paley {

// A point of PG(1,q): infinity or a field element.
class ProjPoint {
 public:
  static constexpr ProjPoint infinity() { return ProjPoint(true, Elem{}); }
  static constexpr ProjPoint finite(Elem x) { return ProjPoint(false, x); }

  constexpr bool is_infinity() const { return infinity_; }
  // Throws PreconditionError at infinity.
  Elem value() const;

  friend constexpr bool operator==(ProjPoint, ProjPoint) = default;

 private:
  constexpr ProjPoint(bool inf, Elem x) : infinity_(inf), value_(inf ? Elem{} : x) {}

  bool infinity_;
  Elem value_;
};

// Vertex numbering shared by every dense structure: infinity is 0, the field
// element with encoding e is e + 1.
inline std::uint32_t vertex_index(ProjPoint p) { return p.is_infinity() ? 0 : p.value().bits + 1; }
inline ProjPoint vertex_at(std::uint32_t index) {
  return index == 0 ? ProjPoint::infinity() : ProjPoint::finite(Elem{index - 1});
}

// "inf" or the hex encoding of the element.
std::string point_label(ProjPoint p);
ProjPoint parse_point_label(const FieldCtx& ctx, const std::string& text);

// z -> (m00 z + m01) / (m10 z + m11) with nonzero determinant.
class MobiusMap {
 public:
  // Throws PreconditionError for a singular matrix.
  static MobiusMap make(const FieldCtx& ctx, Elem m00, Elem m01, Elem m10, Elem m11);
  static constexpr MobiusMap identity() {
    return MobiusMap(Elem{1}, Elem{0}, Elem{0}, Elem{1});
  }

  Elem m00() const { return m00_; }
  Elem m01() const { return m01_; }
  Elem m10() const { return m10_; }
  Elem m11() const { return m11_; }

  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;

 private:
  constexpr MobiusMap(Elem a, Elem b, Elem c, Elem d) : m00_(a), m01_(b), m10_(c), m11_(d) {}

  Elem m00_, m01_, m10_, m11_;
};

// Homogeneous evaluation: total on PG(1,q).
ProjPoint apply(const FieldCtx& ctx, const MobiusMap& m, ProjPoint p);
// (outer o inner)(p) = outer(inner(p)).
MobiusMap compose(const FieldCtx& ctx, const MobiusMap& outer, const MobiusMap& inner);
MobiusMap inverse(const FieldCtx& ctx, const MobiusMap& m);

// alpha_a : z -> a/(z+1), matrix (0 a; 1 1). Requires tr(a) = 1.
MobiusMap alpha_of(const FieldCtx& ctx, Elem a);

// beta_y : z -> (zy + z + a)/(z + y), matrix (y+1 a; 1 y). For y = infinity
// this is the identity, the homogeneous limit. Requires tr(a) = 1.
MobiusMap beta_of(const FieldCtx& ctx, ProjPoint y, Elem a);

// start, m(start), m^2(start), ... up to the first repeat.
std::vector<ProjPoint> orbit(const FieldCtx& ctx, const MobiusMap& m, ProjPoint start);
std::uint64_t orbit_length(const FieldCtx& ctx, const MobiusMap& m, ProjPoint start);

// Smallest a of trace one whose alpha-orbit of infinity has length q+1.
Elem find_generator_a(const FieldCtx& ctx);

// Element c0 + c1*zeta of F_{q^2} = F_q[zeta]/(zeta^2 + zeta + a0).
struct QuadElem {
  Elem c0;
  Elem c1;

  friend constexpr bool operator==(QuadElem, QuadElem) = default;
};

class QuadExtCtx {
 public:
  // a0 defaults to the smallest trace-one element of the base field.
  explicit QuadExtCtx(FieldCtx base);
  QuadExtCtx(FieldCtx base, Elem a0);

  const FieldCtx& base() const { return base_; }
  Elem a0() const { return a0_; }
  // q^2 - 1.
  std::uint64_t group_order() const;

  static constexpr QuadElem zero() { return {}; }
  static constexpr QuadElem one() { return {Elem{1}, Elem{0}}; }
  static constexpr QuadElem zeta() { return {Elem{0}, Elem{1}}; }
  static constexpr QuadElem embed(Elem x) { return {x, Elem{0}}; }
  static constexpr bool in_base(QuadElem x) { return x.c1.bits == 0; }

  // c0 | c1 << k; total order used for canonical representatives.
  std::uint64_t encode(QuadElem x) const;
  QuadElem decode(std::uint64_t v) const;

  static constexpr QuadElem add(QuadElem x, QuadElem y) {
    return {FieldCtx::add(x.c0, y.c0), FieldCtx::add(x.c1, y.c1)};
  }
  QuadElem mul(QuadElem x, QuadElem y) const;
  QuadElem pow(QuadElem x, std::uint64_t e) const;
  // Throws DivisionByZero for zero.
  QuadElem inv(QuadElem x) const;
  QuadElem div(QuadElem x, QuadElem y) const { return mul(x, inv(y)); }
  // x^q; zeta^q = zeta + 1.
  static constexpr QuadElem conj(QuadElem x) { return {FieldCtx::add(x.c0, x.c1), x.c1}; }
  // T(x) = x + x^q, lands in F_q.
  static constexpr Elem trace_to_base(QuadElem x) { return x.c1; }
  // x * x^q, lands in F_q.
  Elem norm(QuadElem x) const;

  std::uint64_t order_of(QuadElem x) const;
  // Deterministic: seeded random trials, then an ordered scan.
  QuadElem primitive_root() const;

  // Root of z^2 + z + a (tr(a) = 1); its conjugate is the root plus one.
  // Throws NoSolution for tr(a) = 0.
  QuadElem lambda_of(Elem a) const;
  // Multiplicative order of conj(lambda)/lambda; divides q+1.
  std::uint64_t lambda_ratio_order(Elem a) const;
  // An a of trace one with lambda_ratio_order(a) == m. Requires m | q+1, m > 2.
  Elem construct_a_for_order(std::uint64_t m) const;

 private:
  FieldCtx base_;
  Elem a0_;
};

}  // namespace char2paley
