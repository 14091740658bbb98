#pragma once

// Arithmetic in GF(2^k) for 2 <= k <= 20 in a polynomial basis.
//
// Elements are bit-vectors: bit i is the coefficient of z^i, so 0x1 is the
// multiplicative identity and 0x2 is the class of z. A FieldCtx owns the
// reduction polynomial and every operation; elements carry no back-pointer,
// so an element is only meaningful next to the context that produced it.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace char2paley {

inline constexpr unsigned kMaxFieldDegree = 20;

struct Elem {
  std::uint32_t bits = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

// A value of F_2 = {0, 1}; addition is XOR.
struct TraceBit {
  std::uint8_t value = 0;

  friend constexpr TraceBit operator+(TraceBit x, TraceBit y) {
    return TraceBit{static_cast<std::uint8_t>(x.value ^ y.value)};
  }
  friend constexpr bool operator==(TraceBit, TraceBit) = default;
};

inline constexpr TraceBit kTrace0{0};
inline constexpr TraceBit kTrace1{1};

// Carry-less product of two bit-polynomials (no reduction).
std::uint64_t clmul(std::uint64_t x, std::uint64_t y);

// Remainder of a bit-polynomial modulo another (modulus != 0).
std::uint64_t poly_mod(std::uint64_t value, std::uint64_t modulus);

// Degree of a nonzero bit-polynomial.
int poly_degree(std::uint64_t p);

// Irreducibility over F_2 by trial division with every polynomial of degree
// 1 .. deg/2. Intended for deg <= 2 * kMaxFieldDegree.
bool is_irreducible(std::uint64_t p);

// The lexicographically smallest (smallest integer encoding) irreducible
// polynomial of degree k, from a fixed table. Throws for k out of range.
std::uint64_t default_modulus(unsigned k);

// "0x13" style hex I/O shared by the CLI and file formats.
std::string to_hex(std::uint64_t v);
std::uint64_t parse_hex(std::string_view text);

class FieldCtx {
 public:
  // Throws PreconditionError when k is outside [2, kMaxFieldDegree] or when
  // the supplied modulus is not an irreducible polynomial of degree k.
  explicit FieldCtx(unsigned k, std::optional<std::uint64_t> modulus = std::nullopt);

  unsigned degree() const { return k_; }
  std::uint64_t modulus() const { return modulus_; }
  // q = 2^k.
  std::uint32_t order() const { return q_; }

  // Validated conversion from an integer encoding.
  Elem elem(std::uint64_t bits) const;
  bool contains(Elem x) const { return x.bits < q_; }
  static constexpr Elem zero() { return Elem{0}; }
  static constexpr Elem one() { return Elem{1}; }

  static constexpr Elem add(Elem x, Elem y) { return Elem{x.bits ^ y.bits}; }
  Elem mul(Elem x, Elem y) const;
  Elem square(Elem x) const { return mul(x, x); }
  Elem pow(Elem x, std::uint64_t e) const;
  // Throws DivisionByZero for x == 0.
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

  // tr(x) = x + x^2 + ... + x^(q/2). Uses the precomputed trace functional
  // (trace of each basis vector), so the cost is one masked parity.
  TraceBit trace(Elem x) const {
    return TraceBit{static_cast<std::uint8_t>(__builtin_parity(x.bits & trace_mask_))};
  }
  // Reference route: k-1 squarings summed. Throws InternalError if the sum
  // is not in F_2.
  TraceBit trace_by_squaring(Elem x) const;

  // (T0, T1), each listed in ascending encoding.
  std::pair<std::vector<Elem>, std::vector<Elem>> trace_partition() const;

  // Smallest-encoding element of trace one.
  Elem first_trace_one() const;

  // The two roots {b, b+1} of x^2 + x = c, smaller encoding first. Solved as a
  // k x k linear system over F_2 eliminated once per context. Throws
  // NoSolution when tr(c) = 1.
  std::pair<Elem, Elem> solve_artin_schreier(Elem c) const;

  friend bool operator==(const FieldCtx& x, const FieldCtx& y) {
    return x.k_ == y.k_ && x.modulus_ == y.modulus_;
  }

 private:
  struct Tables;

  Elem inv_euclid(Elem x) const;

  unsigned k_;
  std::uint64_t modulus_;
  std::uint32_t q_;
  std::uint32_t trace_mask_ = 0;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace char2paley
