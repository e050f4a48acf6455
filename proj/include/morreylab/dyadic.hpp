// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "morreylab/errors.hpp"

namespace morrey {

inline constexpr int kMaxDim = 2;

/// Floor division for possibly negative numerators.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

/// Exact dyadic rational: value = num / 2^log2_den with log2_den >= 0.
/// Cube corners, region endpoints and cell anchors are all of this form,
/// so containment and alignment tests never touch floating point.
struct DyadicRational {
  std::int64_t num = 0;
  int log2_den = 0;

  static DyadicRational from_int(std::int64_t v) { return {v, 0}; }
  /// k * 2^{-j}; j may be negative (coarse scales give integers).
  static DyadicRational scaled(std::int64_t k, int j);

  DyadicRational normalized() const;
  double to_double() const;
  bool is_zero() const { return num == 0; }

  /// True when the value is an integer multiple of 2^{-gen}.
  bool aligned_to(int gen) const;
  /// value * 2^gen as an exact integer; requires aligned_to(gen).
  std::int64_t scale_to(int gen) const;

  DyadicRational operator+(const DyadicRational& o) const;
  DyadicRational operator-(const DyadicRational& o) const;
  DyadicRational operator-() const { return {-num, log2_den}; }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.compare(b) == 0;
  }
  friend bool operator<(const DyadicRational& a, const DyadicRational& b) {
    return a.compare(b) < 0;
  }
  friend bool operator<=(const DyadicRational& a, const DyadicRational& b) {
    return a.compare(b) <= 0;
  }

  int compare(const DyadicRational& o) const;
};

/// Half-open interval [lo, hi) with dyadic endpoints.
struct DyadicInterval {
  DyadicRational lo, hi;
  double length() const { return (hi - lo).to_double(); }
};

/// Axis-aligned half-open box with dyadic corners (1-D or 2-D).
class Region {
 public:
  explicit Region(DyadicInterval x);
  Region(DyadicInterval x, DyadicInterval y);
  /// Convenience: [lo, hi) on every axis, endpoints integer multiples of 2^{-gen}.
  static Region box(int dim, DyadicRational lo, DyadicRational hi);

  int dim() const { return dim_; }
  const DyadicInterval& axis(int a) const { return axes_[a]; }
  double volume() const;
  bool contains(std::span<const double> x) const;

 private:
  int dim_;
  std::array<DyadicInterval, kMaxDim> axes_;
};

/// Dyadic cube Q_{jk} = prod_i [k_i 2^{-j}, (k_i+1) 2^{-j}), side 2^{-j}.
class DyadicCube {
 public:
  DyadicCube(int dim, int generation, std::array<std::int64_t, kMaxDim> index);
  static DyadicCube line(int generation, std::int64_t k) {
    return DyadicCube(1, generation, {k, 0});
  }

  int dim() const { return dim_; }
  int generation() const { return generation_; }
  std::int64_t index(int axis) const { return index_[axis]; }

  DyadicRational side() const { return DyadicRational::scaled(1, generation_); }
  DyadicRational lo(int axis) const {
    return DyadicRational::scaled(index_[axis], generation_);
  }
  double volume() const;

  Region bounds() const;
  /// Concentric triple 3Q = [lo - side, hi + side) on every axis.
  Region triple() const;

  DyadicCube parent() const;
  /// The 2^dim children, lexicographic in the index vector.
  std::vector<DyadicCube> children() const;

  bool contains(std::span<const double> x) const;
  bool contains(const DyadicCube& other) const;

  friend bool operator==(const DyadicCube& a, const DyadicCube& b) {
    return a.dim_ == b.dim_ && a.generation_ == b.generation_ &&
           a.index_ == b.index_;
  }

 private:
  int dim_;
  int generation_;
  std::array<std::int64_t, kMaxDim> index_;
};

/// The unique Q in D_j with x in Q (half-open convention).
DyadicCube containing_cube(std::span<const double> x, int generation);

/// All cubes of D_j intersecting the domain, lexicographic in the index.
std::vector<DyadicCube> cubes_of_generation(int generation, const Region& domain);

}  // namespace morrey
