#pragma once

// Codegrees, Kloosterman sums and the jumbledness audit. Every certified
// inequality is checked in exact integer arithmetic.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "char2paley/bitmatrix.hpp"
#include "char2paley/construct.hpp"

namespace char2paley {

struct CodegreePair {
  ProjPoint x;
  ProjPoint y;
  int epsilon = 0;     // 1 when x and y are adjacent
  std::uint32_t ell = 0;  // common neighbours
};

CodegreePair codegree_direct(const PaleyLikeGraph& g, ProjPoint x, ProjPoint y);

// Same count from the predicate alone, for orders above the dense cap.
CodegreePair codegree_streaming(const FieldCtx& ctx, const ParamA& a, ProjPoint x, ProjPoint y);

struct KloostermanValue {
  Elem b;
  std::int64_t sum = 0;
};

// K(b) = sum over z != 0 of (-1)^tr(z + b/z). Throws PreconditionError for b = 0.
KloostermanValue kloosterman(const FieldCtx& ctx, Elem b);

// K(b) for every b, indexed by encoding; entry 0 is left at 0.
std::vector<std::int64_t> kloosterman_table(const FieldCtx& ctx);

// |K| <= 2 sqrt(q), as K^2 <= 4q.
constexpr bool within_weil_bound(std::uint64_t q, std::int64_t k_sum) {
  return static_cast<std::uint64_t>(k_sum * k_sum) <= 4 * q;
}

// Exact integer square root of q = 2^k for even k.
std::uint64_t sqrt_q(const FieldCtx& ctx);
// q/4 + sqrt(q)/2 for even k.
std::uint64_t codegree_cap(const FieldCtx& ctx);

// l = q/4 - eps + (K(b) + 1)/4 for the pair (x', inf), where x' is x after
// the rotation v_i -> v_{i-j} that sends y = v_j to infinity, and
// b = x'^2 + x' + a. Requires even k.
class CodegreeFormula {
 public:
  // Precomputes K for all b when `tabulate` is set (q^2 work, then O(1) per
  // pair); otherwise each call sums K directly.
  CodegreeFormula(FieldCtx ctx, CirculantLabeling lab, bool tabulate = true);

  std::uint32_t operator()(ProjPoint x, ProjPoint y) const;
  // The rotated pair's finite end and epsilon, exposed for tests.
  std::pair<Elem, int> reduce_to_infinity(ProjPoint x, ProjPoint y) const;
  std::int64_t kloosterman_at(Elem b) const;

  const FieldCtx& field() const { return ctx_; }
  const CirculantLabeling& labeling() const { return lab_; }

 private:
  FieldCtx ctx_;
  CirculantLabeling lab_;
  std::vector<std::int64_t> table_;
};

std::uint32_t codegree_formula(const FieldCtx& ctx, const CirculantLabeling& lab, ProjPoint x,
                               ProjPoint y);

struct CodegreeSpectrum {
  // (epsilon, ell) -> number of unordered pairs
  std::map<std::pair<int, std::uint32_t>, std::uint64_t> histogram;
  std::uint64_t pairs = 0;
  std::uint32_t max_ell = 0;
  std::pair<std::uint32_t, std::uint32_t> max_pair{0, 0};  // vertex indices
  // max |ell - (q/4 - eps)|, the distance from the conference-graph ideal
  std::uint32_t max_conference_deviation = 0;
};

// Exact census over all unordered pairs of an undirected simple graph.
CodegreeSpectrum codegree_spectrum(const BitMatrix& adj);
inline CodegreeSpectrum codegree_spectrum(const PaleyLikeGraph& g) { return codegree_spectrum(g.matrix()); }

enum class AuditMode { exhaustive, sampled };

inline constexpr std::uint32_t kMaxExhaustiveAuditOrder = 17;

struct JumblednessAudit {
  AuditMode mode = AuditMode::exhaustive;
  std::uint64_t samples = 0;  // subsets examined
  std::uint64_t seed = 0;
  bool pass = true;
  // The worst subset maximizes |2e(H) - C(|H|,2)| / |H|.
  std::uint64_t worst_twice_deviation = 0;  // |2e(H) - C(|H|,2)|
  std::uint64_t worst_size = 0;             // |H|
  std::uint64_t worst_index = 0;            // subset mask (exhaustive) or sample number
  // worst_ratio^4 = D^4 / (16 q^3 |H|^4) in lowest terms, as decimal strings,
  // where worst_ratio = |e(H) - C(|H|,2)/2| / (q^{3/4} |H|).
  std::string worst_ratio4_num = "0";
  std::string worst_ratio4_den = "1";
  double worst_ratio = 0.0;
  std::string witness;  // first violating subset, if any
};

// Checks |e(H) - C(|H|,2)/2| <= q^{3/4} |H| as D^4 <= 16 q^3 |H|^4.
// Exhaustive mode needs order <= kMaxExhaustiveAuditOrder (CapacityError).
// Sampled subsets include each vertex with probability 1/2; sample i uses its
// own generator seeded from (seed, i).
JumblednessAudit jumbledness_audit(const PaleyLikeGraph& g, AuditMode mode, std::uint64_t samples,
                                   std::uint64_t seed);

}  // namespace char2paley
