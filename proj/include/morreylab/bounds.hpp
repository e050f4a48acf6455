// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "morreylab/dyadic.hpp"
#include "morreylab/exponents.hpp"
#include "morreylab/grid.hpp"
#include "morreylab/report.hpp"

namespace morrey {

/// One atom of a block decomposition: supp(profile) inside cube, weight >= 0.
struct Block {
  DyadicCube cube;
  GridFunction profile;
  double weight;
};

/// Finite family {(Q_j, a_j, lambda_j)}; all profiles share one lattice.
class BlockDecomposition {
 public:
  BlockDecomposition(int dim, int extent, int gen);
  /// Validates the lattice, lambda >= 0, and supp(a) inside Q.
  void add(const DyadicCube& cube, GridFunction profile, double weight);

  int dim() const { return dim_; }
  int extent() const { return extent_; }
  int gen() const { return gen_; }
  const std::vector<Block>& blocks() const { return blocks_; }

 private:
  int dim_, extent_, gen_;
  std::vector<Block> blocks_;
};

/// Ratio of ||sum lambda_j a_j||_{M^p_q} against
/// ||sum lambda_j (||a_j||_{M^s_t} / |Q_j|^{1/s}) chi_{Q_j}||_{M^p_q}.
/// Parameter regime: (1<q<=p, 1<t<=s, q<t, p<s) or (q=t=1, p<s).
CheckReport block_lemma_check(const BlockDecomposition& d, double p, double q,
                              double s, double t);

/// Per-pair cache for the scale-split quantities.
struct SplitContext {
  GridFunction max1, max2;  // uncentered maximal functions
  double norm1, norm2;      // Morrey norms at (p1,q1), (p2,q2)
};

SplitContext make_split_context(const GridFunction& f1, const GridFunction& f2,
                                const ExponentTuple& tuple);

/// S1 = surrogate terms with l(Q) <= L at one anchor, S2 = the rest, and the
/// two candidate bounds the proof balances.
struct SplitResult {
  double s1 = 0.0;
  double s2 = 0.0;
  double bound_small = 0.0;  // L^alpha M f1(x) M f2(x)
  double bound_large = 0.0;  // L^{-n/s} ||f1|| ||f2||
};

SplitResult s1_s2_split(const GridFunction& f1, const GridFunction& f2,
                        const ExponentTuple& tuple, const SplitContext& ctx,
                        std::int64_t cell, double scale);
SplitResult s1_s2_split(const GridFunction& f1, const GridFunction& f2,
                        const ExponentTuple& tuple, std::int64_t cell,
                        double scale);

/// L = (||f1|| ||f2|| / (M f1(x) M f2(x)))^{p/n}; balances the two bounds.
double optimal_scale(const ExponentTuple& tuple, const SplitContext& ctx,
                     std::int64_t cell);
double optimal_scale(const GridFunction& f1, const GridFunction& f2,
                     const ExponentTuple& tuple, std::int64_t cell);

/// R = ||J_alpha[f1,f2]||_{M^s_t} / (||f1||_{M^{p1}_{q1}} ||f2||_{M^{p2}_{q2}}).
CheckReport theorem_ratio(const GridFunction& f1, const GridFunction& f2,
                          const ExponentTuple& tuple, std::uint64_t seed = 0);

/// ||J||_{M^s_t} versus ||I_a^{(u)} f1||_{M^{s1}_{t1}} ||I_a^{(u')} f2||_{M^{s2}_{t2}}
/// with the He-Yan witness u; requires the alternative-route condition.
CheckReport holder_route_ratio(const GridFunction& f1, const GridFunction& f2,
                               const ExponentTuple& tuple,
                               const HeYanReport& heyan, std::uint64_t seed = 0);

}  // namespace morrey
