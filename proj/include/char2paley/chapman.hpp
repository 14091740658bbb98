#pragma once

// Field-theoretic model H_lambda of G_k: vertices are the cosets of F_q* in
// F_{q^2}*, and [u] ~ [v] when tr( T(lambda u^q v) / (T(lambda) T(u^q v)) ) = 0
// with T(x) = x + x^q. Used as an independent cross-check of the projective
// construction.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "char2paley/bitmatrix.hpp"
#include "char2paley/construct.hpp"
#include "char2paley/mobius.hpp"
#include "char2paley/structure.hpp"

namespace char2paley {

struct ChapmanDiagnostics {
  std::uint64_t pair_evaluations = 0;
  // T(u^q v) = 0 for distinct cosets; the pair is left undefined, not guessed.
  std::uint64_t zero_denominators = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> undefined_pairs;
  bool representatives_exhaustive = false;
  std::uint64_t representative_checks = 0;
  std::uint64_t representative_mismatches = 0;
};

class ChapmanGraph {
 public:
  ChapmanGraph(QuadExtCtx ext, QuadElem lambda, std::vector<QuadElem> reps, BitMatrix adj,
               ChapmanDiagnostics diag);

  const QuadExtCtx& extension() const { return ext_; }
  QuadElem lambda() const { return lambda_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(reps_.size()); }
  const std::vector<QuadElem>& representatives() const { return reps_; }
  const BitMatrix& matrix() const { return adj_; }
  const ChapmanDiagnostics& diagnostics() const { return diag_; }
  // Dense index of the coset containing u (u != 0).
  std::uint32_t index_of(QuadElem u) const;

 private:
  QuadExtCtx ext_;
  QuadElem lambda_;
  std::vector<QuadElem> reps_;
  BitMatrix adj_;
  ChapmanDiagnostics diag_;
};

// Smallest encoding in {c u : c in F_q*}.
QuadElem canonical_representative(const QuadExtCtx& ext, QuadElem u);

// The edge predicate on arbitrary representatives; nullopt when a trace in
// the denominator vanishes.
std::optional<bool> chapman_edge(const QuadExtCtx& ext, QuadElem lambda, QuadElem u, QuadElem v);

// Requires even k, lambda != 0 and T(lambda) != 0. Representative
// independence is checked over every scalar pair when that is at most
// ~2M evaluations, otherwise on `samples` seeded random draws.
ChapmanGraph chapman_build(const QuadExtCtx& ext, QuadElem lambda, std::uint64_t samples = 100000,
                           std::uint64_t seed = 0);

enum class ChapmanVerdict { certified, consistent_not_certified, not_isomorphic };

struct ChapmanComparison {
  ChapmanVerdict verdict = ChapmanVerdict::not_isomorphic;
  std::optional<std::uint64_t> multiplier;  // v_i -> w_{m i}
  VertexMap map;                            // G index -> H index when certified
  std::string detail;

  bool isomorphic() const { return verdict == ChapmanVerdict::certified; }
};

// Compares degree sequences and codegree spectra, then searches multipliers
// m in Z_{q+1}* with m S_G = S_H between the two circulant labelings. A found
// multiplier is verified edge by edge before being reported as certified.
ChapmanComparison chapman_compare(const ChapmanGraph& h, const PaleyLikeGraph& g);

const char* to_string(ChapmanVerdict v);

}  // namespace char2paley
