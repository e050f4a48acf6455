// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "morreylab/dyadic.hpp"
#include "morreylab/errors.hpp"

namespace morrey {

/// Morrey exponents: global p, local q with 0 < q <= p < inf.
struct MorreyParams {
  double p;
  double q;
  MorreyParams(double p_, double q_);
};

/// Nonnegative piecewise-constant function on the cells of generation `gen`
/// over the domain [-2^extent, 2^extent)^dim; identically 0 outside.
///
/// Cell i along an axis covers [(o+i) 2^{-gen}, (o+i+1) 2^{-gen}) where
/// o = -2^{extent+gen}. Operator fields produced from a GridFunction carry,
/// per cell, the operator value at the cell's *anchor* (its left/lower
/// corner), which is a lattice point; anchors keep every kernel breakpoint
/// and window edge grid-aligned, so 1-D evaluations are exact.
class GridFunction {
 public:
  GridFunction(int dim, int extent, int gen, std::vector<double> values);

  static GridFunction zeros(int dim, int extent, int gen);
  /// Indicator of a grid-aligned region; exact, rejects misaligned endpoints.
  static GridFunction indicator(const Region& r, int extent, int gen);
  /// Cell-exact averages of |x|^{-beta} (sup-norm |x| in 2-D); 0 < beta < dim.
  static GridFunction power_profile(double beta, int dim, int extent, int gen);

  int dim() const { return dim_; }
  int extent() const { return extent_; }
  int gen() const { return gen_; }

  std::int64_t cells_per_axis() const { return cells_per_axis_; }
  std::int64_t cell_count() const { return static_cast<std::int64_t>(values_.size()); }
  double cell_side() const;
  double cell_volume() const;
  /// Global integer coordinate (units 2^{-gen}) of the first cell's corner.
  std::int64_t origin() const { return origin_; }

  std::span<const double> values() const { return values_; }
  double operator[](std::int64_t flat) const { return values_[flat]; }
  double& mutable_value(std::int64_t flat) { return values_[flat]; }
  double at(std::int64_t ix) const;
  double at(std::int64_t ix, std::int64_t iy) const;

  /// Anchor coordinate (left/lower corner) of cell index i along one axis.
  double anchor(std::int64_t i) const;

  bool same_lattice(const GridFunction& o) const {
    return dim_ == o.dim_ && extent_ == o.extent_ && gen_ == o.gen_;
  }

  /// x -> f(2^m x): pure re-indexing to (extent - m, gen + m); exact.
  GridFunction dilate(int m) const;

  /// Point lookup; 0 outside the domain.
  double value_at(std::span<const double> x) const;

  /// this += c * other (same lattice); keeps nonnegativity (c >= 0).
  GridFunction& add_scaled(const GridFunction& other, double c);
  GridFunction scaled(double c) const;
  GridFunction pow_values(double e) const;

  /// Per-axis half-open cell index range covered by a grid-aligned region,
  /// clamped to the domain.
  struct CellRange {
    std::int64_t lo[kMaxDim];
    std::int64_t hi[kMaxDim];
  };
  CellRange cell_range(const Region& r) const;

 private:
  int dim_;
  int extent_;
  int gen_;
  std::int64_t cells_per_axis_;
  std::int64_t origin_;
  std::vector<double> values_;
};

/// (sum_{cells in Q} v^q |cell|)^{1/q}; exact for piecewise constants.
double lq_norm_on(const GridFunction& f, double q, const Region& q_region);

/// sup over dyadic cubes, generations [-extent-2, gen], of
/// |Q|^{1/p-1/q} ||f||_{L^q(Q)}.  Coarser and finer scales provably cannot
/// increase the sup for compactly supported piecewise constants.
double morrey_norm_dyadic(const GridFunction& f, const MorreyParams& mp);

/// Same score maximized over every grid-aligned cube (any side multiple of
/// the cell side, any aligned offset); always >= the dyadic norm.
double morrey_norm_general(const GridFunction& f, const MorreyParams& mp);

/// Uncentered Hardy-Littlewood maximal function at cell anchors: sup of
/// averages over grid-aligned closed cubes containing the anchor.
GridFunction hl_maximal(const GridFunction& f);

/// Centered powered maximal M^{(eta)} f = (M(f^eta))^{1/eta} at anchors,
/// radii = integer multiples of the cell side.
GridFunction powered_maximal(const GridFunction& f, double eta);

}  // namespace morrey
