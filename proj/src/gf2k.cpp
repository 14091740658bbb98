#include "char2paley/gf2k.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <sstream>

#include "char2paley/errors.hpp"

namespace char2paley {

namespace {

// Smallest irreducible of each degree, indexed by k. Entry 0 and 1 unused.
constexpr std::array<std::uint64_t, kMaxFieldDegree + 1> kDefaultModuli = {
    0,       0,       0x7,     0xb,      0x13,     0x25,     0x43,
    0x83,    0x11b,   0x203,   0x409,    0x805,    0x1009,   0x201b,
    0x4021,  0x8003,  0x1002b, 0x20009,  0x40009,  0x80027,  0x100009,
};

constexpr std::uint32_t kInverseTableMaxOrder = 1u << 16;

}  // namespace

struct FieldCtx::Tables {
  std::vector<std::uint32_t> inverse;  // empty when q > kInverseTableMaxOrder

  // Row-reduced form of the matrix of x -> x^2 + x. `ops[r]` records which
  // original rows were summed into row r; rows >= rank are zero rows of the
  // reduced matrix.
  std::vector<std::uint32_t> ops;
  std::vector<unsigned> pivot_col;
  unsigned rank = 0;
};

std::uint64_t clmul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = 0;
  while (y != 0) {
    if (y & 1) r ^= x;
    x <<= 1;
    y >>= 1;
  }
  return r;
}

int poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t value, std::uint64_t modulus) {
  const int dm = poly_degree(modulus);
  while (value != 0) {
    const int dv = poly_degree(value);
    if (dv < dm) break;
    value ^= modulus << (dv - dm);
  }
  return value;
}

bool is_irreducible(std::uint64_t p) {
  if (p < 2) return false;
  const int d = poly_degree(p);
  if (d == 0) return false;
  const std::uint64_t limit = std::uint64_t{1} << (d / 2 + 1);
  for (std::uint64_t f = 2; f < limit; ++f) {
    if (poly_mod(p, f) == 0) return false;
  }
  return true;
}

std::uint64_t default_modulus(unsigned k) {
  if (k < 2 || k > kMaxFieldDegree) {
    throw PreconditionError("field degree k=" + std::to_string(k) + " outside [2, " +
                            std::to_string(kMaxFieldDegree) + "]");
  }
  return kDefaultModuli[k];
}

std::string to_hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

std::uint64_t parse_hex(std::string_view text) {
  std::string_view digits = text;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
  }
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, 16);
  if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) {
    throw PreconditionError("not a hex value: '" + std::string(text) + "'");
  }
  return v;
}

FieldCtx::FieldCtx(unsigned k, std::optional<std::uint64_t> modulus)
    : k_(k), modulus_(0), q_(0) {
  const std::uint64_t fallback = default_modulus(k);  // also range-checks k
  modulus_ = modulus.value_or(fallback);
  if (modulus_ == 0 || poly_degree(modulus_) != static_cast<int>(k)) {
    throw PreconditionError("modulus " + to_hex(modulus_) + " does not have degree " +
                            std::to_string(k));
  }
  if (!is_irreducible(modulus_)) {
    throw PreconditionError("modulus " + to_hex(modulus_) + " is reducible over F2");
  }
  q_ = std::uint32_t{1} << k;

  for (unsigned i = 0; i < k; ++i) {
    if (trace_by_squaring(Elem{1u << i}) == kTrace1) trace_mask_ |= 1u << i;
  }

  auto tables = std::make_shared<Tables>();
  if (q_ <= kInverseTableMaxOrder) {
    tables->inverse.assign(q_, 0);
    for (std::uint32_t x = 1; x < q_; ++x) tables->inverse[x] = inv_euclid(Elem{x}).bits;
  }

  // Row r of the matrix holds, over the columns i, bit r of (z^i)^2 + z^i.
  std::vector<std::uint32_t> rows(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    const Elem basis{1u << i};
    const std::uint32_t image = add(square(basis), basis).bits;
    for (unsigned r = 0; r < k; ++r) {
      if ((image >> r) & 1u) rows[r] |= 1u << i;
    }
  }
  tables->ops.resize(k);
  for (unsigned r = 0; r < k; ++r) tables->ops[r] = 1u << r;
  unsigned rank = 0;
  for (unsigned col = 0; col < k && rank < k; ++col) {
    unsigned pivot = rank;
    while (pivot < k && !((rows[pivot] >> col) & 1u)) ++pivot;
    if (pivot == k) continue;
    std::swap(rows[pivot], rows[rank]);
    std::swap(tables->ops[pivot], tables->ops[rank]);
    for (unsigned r = 0; r < k; ++r) {
      if (r != rank && ((rows[r] >> col) & 1u)) {
        rows[r] ^= rows[rank];
        tables->ops[r] ^= tables->ops[rank];
      }
    }
    tables->pivot_col.push_back(col);
    ++rank;
  }
  tables->rank = rank;
  if (rank != k - 1) {
    throw InternalError("x^2+x has rank " + std::to_string(rank) + ", expected k-1");
  }
  tables_ = std::move(tables);
}

Elem FieldCtx::elem(std::uint64_t bits) const {
  if (bits >= q_) {
    throw PreconditionError(to_hex(bits) + " is not an element of GF(2^" + std::to_string(k_) +
                            ")");
  }
  return Elem{static_cast<std::uint32_t>(bits)};
}

Elem FieldCtx::mul(Elem x, Elem y) const {
  std::uint64_t prod = clmul(x.bits, y.bits);
  for (int bit = 2 * static_cast<int>(k_) - 2; bit >= static_cast<int>(k_); --bit) {
    if ((prod >> bit) & 1u) prod ^= modulus_ << (bit - k_);
  }
  return Elem{static_cast<std::uint32_t>(prod)};
}

Elem FieldCtx::pow(Elem x, std::uint64_t e) const {
  Elem result = one();
  while (e != 0) {
    if (e & 1u) result = mul(result, x);
    x = square(x);
    e >>= 1;
  }
  return result;
}

Elem FieldCtx::inv(Elem x) const {
  if (x.bits == 0) throw DivisionByZero("inverse of zero in GF(2^" + std::to_string(k_) + ")");
  if (!tables_->inverse.empty()) return Elem{tables_->inverse[x.bits]};
  return inv_euclid(x);
}

Elem FieldCtx::inv_euclid(Elem x) const {
  std::uint64_t u = x.bits;
  std::uint64_t v = modulus_;
  std::uint64_t g1 = 1;
  std::uint64_t g2 = 0;
  while (u != 1) {
    int j = poly_degree(u) - poly_degree(v);
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    u ^= v << j;
    g1 ^= g2 << j;
  }
  return Elem{static_cast<std::uint32_t>(poly_mod(g1, modulus_))};
}

TraceBit FieldCtx::trace_by_squaring(Elem x) const {
  Elem sum = x;
  Elem power = x;
  for (unsigned i = 1; i < k_; ++i) {
    power = square(power);
    sum = add(sum, power);
  }
  if (sum.bits > 1) throw InternalError("trace left F2: " + to_hex(sum.bits));
  return TraceBit{static_cast<std::uint8_t>(sum.bits)};
}

std::pair<std::vector<Elem>, std::vector<Elem>> FieldCtx::trace_partition() const {
  std::pair<std::vector<Elem>, std::vector<Elem>> parts;
  parts.first.reserve(q_ / 2);
  parts.second.reserve(q_ / 2);
  for (std::uint32_t v = 0; v < q_; ++v) {
    (trace(Elem{v}) == kTrace0 ? parts.first : parts.second).push_back(Elem{v});
  }
  return parts;
}

Elem FieldCtx::first_trace_one() const {
  for (std::uint32_t v = 1; v < q_; ++v) {
    if (trace(Elem{v}) == kTrace1) return Elem{v};
  }
  throw InternalError("trace is identically zero");
}

std::pair<Elem, Elem> FieldCtx::solve_artin_schreier(Elem c) const {
  if (trace(c) == kTrace1) {
    throw NoSolution("x^2+x=" + to_hex(c.bits) + " has no solution: tr(c)=1");
  }
  const Tables& t = *tables_;
  std::uint32_t b = 0;
  for (unsigned r = 0; r < k_; ++r) {
    const bool bit = __builtin_parity(t.ops[r] & c.bits);
    if (r < t.rank) {
      if (bit) b |= 1u << t.pivot_col[r];
    } else if (bit) {
      throw InternalError("inconsistent Artin-Schreier system for c=" + to_hex(c.bits));
    }
  }
  const Elem root{b};
  const Elem other = add(root, one());
  return root < other ? std::pair{root, other} : std::pair{other, root};
}

}  // namespace char2paley
