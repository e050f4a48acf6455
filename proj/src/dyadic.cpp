// SPDX-License-Identifier: Apache-2.0
#include "morreylab/dyadic.hpp"

#include <cmath>

namespace morrey {

DyadicRational DyadicRational::scaled(std::int64_t k, int j) {
  if (j >= 0) return DyadicRational{k, j}.normalized();
  return {k << (-j), 0};
}

DyadicRational DyadicRational::normalized() const {
  DyadicRational r = *this;
  while (r.log2_den > 0 && (r.num & 1) == 0) {
    r.num >>= 1;
    --r.log2_den;
  }
  if (r.num == 0) r.log2_den = 0;
  return r;
}

double DyadicRational::to_double() const {
  return std::ldexp(static_cast<double>(num), -log2_den);
}

bool DyadicRational::aligned_to(int gen) const {
  DyadicRational r = normalized();
  return r.log2_den <= gen || r.num == 0;
}

std::int64_t DyadicRational::scale_to(int gen) const {
  DyadicRational r = normalized();
  if (!r.aligned_to(gen))
    throw AlignmentError("dyadic rational not aligned to generation " +
                         std::to_string(gen));
  return r.num << (gen - r.log2_den);
}

DyadicRational DyadicRational::operator+(const DyadicRational& o) const {
  int d = std::max(log2_den, o.log2_den);
  return DyadicRational{(num << (d - log2_den)) + (o.num << (d - o.log2_den)), d}
      .normalized();
}

DyadicRational DyadicRational::operator-(const DyadicRational& o) const {
  return *this + (-o);
}

int DyadicRational::compare(const DyadicRational& o) const {
  int d = std::max(log2_den, o.log2_den);
  std::int64_t a = num << (d - log2_den);
  std::int64_t b = o.num << (d - o.log2_den);
  return a < b ? -1 : (a > b ? 1 : 0);
}

Region::Region(DyadicInterval x) : dim_(1), axes_{x, {}} {
  if (!(x.lo < x.hi)) throw DomainError("empty region");
}

Region::Region(DyadicInterval x, DyadicInterval y) : dim_(2), axes_{x, y} {
  if (!(x.lo < x.hi) || !(y.lo < y.hi)) throw DomainError("empty region");
}

Region Region::box(int dim, DyadicRational lo, DyadicRational hi) {
  if (dim == 1) return Region(DyadicInterval{lo, hi});
  if (dim == 2) return Region(DyadicInterval{lo, hi}, DyadicInterval{lo, hi});
  throw DomainError("dim must be 1 or 2");
}

double Region::volume() const {
  double v = 1.0;
  for (int a = 0; a < dim_; ++a) v *= axes_[a].length();
  return v;
}

bool Region::contains(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) return false;
  for (int a = 0; a < dim_; ++a) {
    if (x[a] < axes_[a].lo.to_double() || x[a] >= axes_[a].hi.to_double())
      return false;
  }
  return true;
}

DyadicCube::DyadicCube(int dim, int generation,
                       std::array<std::int64_t, kMaxDim> index)
    : dim_(dim), generation_(generation), index_(index) {
  if (dim < 1 || dim > kMaxDim) throw DomainError("cube dim must be 1 or 2");
}

double DyadicCube::volume() const {
  return std::exp2(static_cast<double>(-generation_ * dim_));
}

Region DyadicCube::bounds() const {
  DyadicInterval ix{lo(0), lo(0) + side()};
  if (dim_ == 1) return Region(ix);
  return Region(ix, DyadicInterval{lo(1), lo(1) + side()});
}

Region DyadicCube::triple() const {
  auto expand = [&](int a) {
    return DyadicInterval{lo(a) - side(), lo(a) + side() + side()};
  };
  if (dim_ == 1) return Region(expand(0));
  return Region(expand(0), expand(1));
}

DyadicCube DyadicCube::parent() const {
  std::array<std::int64_t, kMaxDim> k{};
  for (int a = 0; a < dim_; ++a) k[a] = floor_div(index_[a], 2);
  return DyadicCube(dim_, generation_ - 1, k);
}

std::vector<DyadicCube> DyadicCube::children() const {
  std::vector<DyadicCube> out;
  int count = 1 << dim_;
  out.reserve(count);
  for (int bits = 0; bits < count; ++bits) {
    std::array<std::int64_t, kMaxDim> k{};
    for (int a = 0; a < dim_; ++a)
      k[a] = 2 * index_[a] + ((bits >> (dim_ - 1 - a)) & 1);
    out.emplace_back(dim_, generation_ + 1, k);
  }
  return out;
}

bool DyadicCube::contains(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) return false;
  for (int a = 0; a < dim_; ++a) {
    double l = lo(a).to_double();
    if (x[a] < l || x[a] >= l + side().to_double()) return false;
  }
  return true;
}

bool DyadicCube::contains(const DyadicCube& other) const {
  if (other.generation_ < generation_) return false;
  int shift = other.generation_ - generation_;
  for (int a = 0; a < dim_; ++a) {
    if (floor_div(other.index_[a], std::int64_t{1} << shift) != index_[a])
      return false;
  }
  return true;
}

DyadicCube containing_cube(std::span<const double> x, int generation) {
  int dim = static_cast<int>(x.size());
  if (dim < 1 || dim > kMaxDim) throw DomainError("point dim must be 1 or 2");
  std::array<std::int64_t, kMaxDim> k{};
  for (int a = 0; a < dim; ++a) {
    if (!std::isfinite(x[a])) throw DomainError("point must be finite");
    k[a] = static_cast<std::int64_t>(std::floor(std::ldexp(x[a], generation)));
  }
  return DyadicCube(dim, generation, k);
}

std::vector<DyadicCube> cubes_of_generation(int generation, const Region& domain) {
  int dim = domain.dim();
  // Index range per axis: k with [k 2^{-j}, (k+1) 2^{-j}) meeting [lo, hi).
  std::array<std::int64_t, kMaxDim> kmin{}, kmax{};
  for (int a = 0; a < dim; ++a) {
    const auto& iv = domain.axis(a);
    // k_min = floor(lo * 2^j), k_max = smallest k with (k+1) 2^{-j} > hi... i.e.
    // last cube is the one containing sup; use ceil(hi*2^j) - 1.
    auto scale_floor = [&](DyadicRational v) {
      DyadicRational n = v.normalized();
      if (generation >= n.log2_den) return n.num << (generation - n.log2_den);
      return floor_div(n.num, std::int64_t{1} << (n.log2_den - generation));
    };
    auto scale_ceil = [&](DyadicRational v) {
      DyadicRational n = v.normalized();
      if (generation >= n.log2_den) return n.num << (generation - n.log2_den);
      std::int64_t d = std::int64_t{1} << (n.log2_den - generation);
      return -floor_div(-n.num, d);
    };
    kmin[a] = scale_floor(iv.lo);
    kmax[a] = scale_ceil(iv.hi) - 1;
  }
  std::vector<DyadicCube> out;
  if (dim == 1) {
    for (std::int64_t k = kmin[0]; k <= kmax[0]; ++k)
      out.push_back(DyadicCube(1, generation, {k, 0}));
  } else {
    for (std::int64_t k0 = kmin[0]; k0 <= kmax[0]; ++k0)
      for (std::int64_t k1 = kmin[1]; k1 <= kmax[1]; ++k1)
        out.push_back(DyadicCube(2, generation, {k0, k1}));
  }
  return out;
}

}  // namespace morrey
