// SPDX-License-Identifier: Apache-2.0
#include "morreylab/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace morrey {

namespace {

constexpr std::int64_t kMaxTotalCells = std::int64_t{1} << 22;

double checked_pow(double base, double e) { return base == 0.0 ? 0.0 : std::pow(base, e); }

// Antiderivative pieces for the power profile.
double anti_p0(double x, double beta) {
  // integral of x^{-beta}
  if (beta == 1.0) return std::log(x);
  return std::pow(x, 1.0 - beta) / (1.0 - beta);
}
double anti_p1(double x, double beta) {
  // integral of x^{1-beta}
  return std::pow(x, 2.0 - beta) / (2.0 - beta);
}

// integral over x in [ax,bx) of x^{-beta} * |{y in [ay,by): y <= x}|,
// all endpoints >= 0, ax < bx, ay < by.
double quadrant_piece(double ax, double bx, double ay, double by, double beta) {
  double acc = 0.0;
  double u = std::max(ax, ay), v = std::min(bx, by);
  if (u < v) {
    acc += anti_p1(v, beta) - anti_p1(u, beta);
    if (ay > 0.0) acc -= ay * (anti_p0(v, beta) - anti_p0(u, beta));
  }
  double u2 = std::max(ax, by);
  if (u2 < bx) acc += (by - ay) * (anti_p0(bx, beta) - anti_p0(u2, beta));
  return acc;
}

}  // namespace

MorreyParams::MorreyParams(double p_, double q_) : p(p_), q(q_) {
  if (!(q > 0.0) || !(q <= p) || !std::isfinite(p))
    throw ParamError("Morrey exponents require 0 < q <= p < inf");
}

GridFunction::GridFunction(int dim, int extent, int gen, std::vector<double> values)
    : dim_(dim), extent_(extent), gen_(gen), values_(std::move(values)) {
  if (dim < 1 || dim > kMaxDim) throw DomainError("dim must be 1 or 2");
  if (gen < 0) throw DomainError("finest generation must be >= 0");
  if (extent + gen < 0) throw DomainError("extent + gen must be >= 0");
  int log2n = extent + 1 + gen;
  if (log2n < 1 || log2n > 40) throw DomainError("grid size out of range");
  cells_per_axis_ = std::int64_t{1} << log2n;
  origin_ = -(std::int64_t{1} << (extent + gen));
  std::int64_t total = cells_per_axis_;
  for (int a = 1; a < dim; ++a) total *= cells_per_axis_;
  if (total > kMaxTotalCells) throw DomainError("grid too large");
  if (static_cast<std::int64_t>(values_.size()) != total)
    throw DomainError("value count does not match the cell lattice");
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw DomainError("grid values must be finite and nonnegative");
  }
}

GridFunction GridFunction::zeros(int dim, int extent, int gen) {
  std::int64_t n = std::int64_t{1} << (extent + 1 + gen);
  std::int64_t total = dim == 1 ? n : n * n;
  return GridFunction(dim, extent, gen, std::vector<double>(total, 0.0));
}

double GridFunction::cell_side() const { return std::exp2(static_cast<double>(-gen_)); }

double GridFunction::cell_volume() const {
  return std::exp2(static_cast<double>(-gen_ * dim_));
}

double GridFunction::at(std::int64_t ix) const { return values_[ix]; }

double GridFunction::at(std::int64_t ix, std::int64_t iy) const {
  return values_[ix * cells_per_axis_ + iy];
}

double GridFunction::anchor(std::int64_t i) const {
  return std::ldexp(static_cast<double>(origin_ + i), -gen_);
}

GridFunction::CellRange GridFunction::cell_range(const Region& r) const {
  if (r.dim() != dim_) throw LatticeMismatchError("region dim mismatch");
  CellRange out{};
  for (int a = 0; a < dim_; ++a) {
    std::int64_t lo = r.axis(a).lo.scale_to(gen_) - origin_;
    std::int64_t hi = r.axis(a).hi.scale_to(gen_) - origin_;
    out.lo[a] = std::clamp<std::int64_t>(lo, 0, cells_per_axis_);
    out.hi[a] = std::clamp<std::int64_t>(hi, 0, cells_per_axis_);
  }
  return out;
}

GridFunction GridFunction::indicator(const Region& r, int extent, int gen) {
  GridFunction f = zeros(r.dim(), extent, gen);
  for (int a = 0; a < r.dim(); ++a) {
    std::int64_t lo = r.axis(a).lo.scale_to(gen);  // throws AlignmentError
    std::int64_t hi = r.axis(a).hi.scale_to(gen);
    if (lo < f.origin_ || hi > f.origin_ + f.cells_per_axis_)
      throw DomainError("indicator region exceeds the domain");
  }
  CellRange cr = f.cell_range(r);
  if (r.dim() == 1) {
    for (std::int64_t i = cr.lo[0]; i < cr.hi[0]; ++i) f.values_[i] = 1.0;
  } else {
    for (std::int64_t i = cr.lo[0]; i < cr.hi[0]; ++i)
      for (std::int64_t j = cr.lo[1]; j < cr.hi[1]; ++j)
        f.values_[i * f.cells_per_axis_ + j] = 1.0;
  }
  return f;
}

GridFunction GridFunction::power_profile(double beta, int dim, int extent, int gen) {
  if (!(beta > 0.0)) throw ParamError("power profile requires beta > 0");
  if (beta >= static_cast<double>(dim))
    throw DivergentCellError("|x|^{-beta} cell averages diverge for beta >= dim");
  GridFunction f = zeros(dim, extent, gen);
  std::int64_t n = f.cells_per_axis_;
  double h = f.cell_side();
  // Mirror a cell interval to the nonnegative half-line; cells never straddle 0.
  auto mirrored = [&](std::int64_t i, double& a, double& b) {
    a = f.anchor(i);
    b = a + h;
    if (b <= 0.0) {
      double t = a;
      a = -b;
      b = -t;
    }
  };
  if (dim == 1) {
    for (std::int64_t i = 0; i < n; ++i) {
      double a, b;
      mirrored(i, a, b);
      f.values_[i] = (anti_p0(b, beta - 1.0) - anti_p0(a, beta - 1.0)) / h;
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      double a1, b1;
      mirrored(i, a1, b1);
      for (std::int64_t j = 0; j < n; ++j) {
        double a2, b2;
        mirrored(j, a2, b2);
        double t = quadrant_piece(a1, b1, a2, b2, beta) +
                   quadrant_piece(a2, b2, a1, b1, beta);
        f.values_[i * n + j] = t / (h * h);
      }
    }
  }
  return f;
}

GridFunction GridFunction::dilate(int m) const {
  if (gen_ + m < 0) throw DomainError("dilation would need sub-unit generation");
  return GridFunction(dim_, extent_ - m, gen_ + m, values_);
}

double GridFunction::value_at(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw LatticeMismatchError("point dim mismatch");
  std::int64_t idx[kMaxDim] = {0, 0};
  for (int a = 0; a < dim_; ++a) {
    double scaled = std::ldexp(x[a], gen_);
    std::int64_t k = static_cast<std::int64_t>(std::floor(scaled)) - origin_;
    if (k < 0 || k >= cells_per_axis_) return 0.0;
    idx[a] = k;
  }
  return dim_ == 1 ? values_[idx[0]] : values_[idx[0] * cells_per_axis_ + idx[1]];
}

GridFunction& GridFunction::add_scaled(const GridFunction& other, double c) {
  if (!same_lattice(other)) throw LatticeMismatchError("lattice mismatch in add");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += c * other.values_[i];
  return *this;
}

GridFunction GridFunction::scaled(double c) const {
  GridFunction out = *this;
  for (double& v : out.values_) v *= c;
  return out;
}

GridFunction GridFunction::pow_values(double e) const {
  GridFunction out = *this;
  if (e == 1.0) return out;
  for (double& v : out.values_) v = checked_pow(v, e);
  return out;
}

double lq_norm_on(const GridFunction& f, double q, const Region& q_region) {
  if (!(q > 0.0)) throw ParamError("lq norm requires q > 0");
  auto cr = f.cell_range(q_region);
  double vol = f.cell_volume();
  double acc = 0.0;
  if (f.dim() == 1) {
    for (std::int64_t i = cr.lo[0]; i < cr.hi[0]; ++i)
      acc += (q == 1.0 ? f[i] : checked_pow(f[i], q)) * vol;
  } else {
    for (std::int64_t i = cr.lo[0]; i < cr.hi[0]; ++i)
      for (std::int64_t j = cr.lo[1]; j < cr.hi[1]; ++j) {
        double v = f.at(i, j);
        acc += (q == 1.0 ? v : checked_pow(v, q)) * vol;
      }
  }
  return q == 1.0 ? acc : checked_pow(acc, 1.0 / q);
}

namespace {

// One level of the dyadic mass pyramid: masses of all cubes of one
// generation meeting the domain, with their per-axis index ranges.
struct MassLevel {
  std::int64_t kmin[kMaxDim];
  std::int64_t kmax[kMaxDim];  // inclusive
  std::vector<double> mass;
  std::int64_t width(int a) const { return kmax[a] - kmin[a] + 1; }
};

MassLevel coarsen(const MassLevel& fine, int dim) {
  MassLevel c{};
  for (int a = 0; a < dim; ++a) {
    c.kmin[a] = floor_div(fine.kmin[a], 2);
    c.kmax[a] = floor_div(fine.kmax[a], 2);
  }
  if (dim == 1) {
    c.mass.assign(c.width(0), 0.0);
    for (std::int64_t k = fine.kmin[0]; k <= fine.kmax[0]; ++k)
      c.mass[floor_div(k, 2) - c.kmin[0]] += fine.mass[k - fine.kmin[0]];
  } else {
    c.mass.assign(c.width(0) * c.width(1), 0.0);
    for (std::int64_t k0 = fine.kmin[0]; k0 <= fine.kmax[0]; ++k0)
      for (std::int64_t k1 = fine.kmin[1]; k1 <= fine.kmax[1]; ++k1) {
        std::int64_t p0 = floor_div(k0, 2) - c.kmin[0];
        std::int64_t p1 = floor_div(k1, 2) - c.kmin[1];
        c.mass[p0 * c.width(1) + p1] +=
            fine.mass[(k0 - fine.kmin[0]) * fine.width(1) + (k1 - fine.kmin[1])];
      }
  }
  return c;
}

}  // namespace

double morrey_norm_dyadic(const GridFunction& f, const MorreyParams& mp) {
  const int dim = f.dim();
  const double expo = 1.0 / mp.p - 1.0 / mp.q;  // <= 0
  const double invq = 1.0 / mp.q;
  const double vol = f.cell_volume();
  MassLevel level{};
  for (int a = 0; a < dim; ++a) {
    level.kmin[a] = f.origin();
    level.kmax[a] = f.origin() + f.cells_per_axis() - 1;
  }
  level.mass.assign(f.cell_count(), 0.0);
  if (dim == 1) {
    for (std::int64_t i = 0; i < f.cell_count(); ++i)
      level.mass[i] = checked_pow(f[i], mp.q) * vol;
  } else {
    for (std::int64_t i = 0; i < f.cell_count(); ++i)
      level.mass[i] = checked_pow(f.values()[i], mp.q) * vol;
  }
  double best = 0.0;
  for (int j = f.gen(); j >= -f.extent() - 2; --j) {
    double volfact = expo == 0.0 ? 1.0 : std::exp2(-static_cast<double>(j) * dim * expo);
    for (double m : level.mass) {
      if (m <= 0.0) continue;
      best = std::max(best, volfact * checked_pow(m, invq));
    }
    if (j > -f.extent() - 2) level = coarsen(level, dim);
  }
  return best;
}

double morrey_norm_general(const GridFunction& f, const MorreyParams& mp) {
  const double expo = 1.0 / mp.p - 1.0 / mp.q;
  const double invq = 1.0 / mp.q;
  const std::int64_t n = f.cells_per_axis();
  const double h = f.cell_side();
  double best = 0.0;
  if (f.dim() == 1) {
    std::vector<double> prefix(n + 1, 0.0);
    for (std::int64_t i = 0; i < n; ++i)
      prefix[i + 1] = prefix[i] + checked_pow(f[i], mp.q);
    for (std::int64_t s = 1; s <= n; ++s) {
      double volfact =
          expo == 0.0 ? 1.0 : std::pow(static_cast<double>(s) * h, expo);
      for (std::int64_t a = 0; a + s <= n; ++a) {
        double mass = (prefix[a + s] - prefix[a]) * h;
        if (mass <= 0.0) continue;
        best = std::max(best, volfact * checked_pow(mass, invq));
      }
    }
  } else {
    std::vector<double> prefix((n + 1) * (n + 1), 0.0);
    auto P = [&](std::int64_t i, std::int64_t j) -> double& {
      return prefix[i * (n + 1) + j];
    };
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = 0; j < n; ++j)
        P(i + 1, j + 1) = checked_pow(f.at(i, j), mp.q) + P(i, j + 1) +
                          P(i + 1, j) - P(i, j);
    double cellvol = h * h;
    for (std::int64_t s = 1; s <= n; ++s) {
      double side = static_cast<double>(s) * h;
      double volfact = expo == 0.0 ? 1.0 : std::pow(side * side, expo);
      for (std::int64_t a = 0; a + s <= n; ++a)
        for (std::int64_t b = 0; b + s <= n; ++b) {
          double mass =
              (P(a + s, b + s) - P(a, b + s) - P(a + s, b) + P(a, b)) * cellvol;
          if (mass <= 0.0) continue;
          best = std::max(best, volfact * checked_pow(mass, invq));
        }
    }
  }
  // The scan set contains every dyadic candidate (coarse dyadic cubes are
  // dominated by their in-domain clip), so the general norm is >= the
  // dyadic one; taking the max makes that exact in floating point too.
  return std::max(best, morrey_norm_dyadic(f, mp));
}

namespace {

// Range-chmax / point-query over anchors via canonical segment-tree marks.
class ChmaxMarks {
 public:
  explicit ChmaxMarks(std::int64_t n)
      : size_(std::bit_ceil(static_cast<std::uint64_t>(n))), mark_(2 * size_, 0.0) {}
  void update(std::int64_t l, std::int64_t r, double v) {
    for (l += size_, r += size_; l < r; l >>= 1, r >>= 1) {
      if (l & 1) mark_[l] = std::max(mark_[l], v), ++l;
      if (r & 1) --r, mark_[r] = std::max(mark_[r], v);
    }
  }
  double query(std::int64_t i) const {
    double acc = 0.0;
    for (std::int64_t x = i + size_; x >= 1; x >>= 1) acc = std::max(acc, mark_[x]);
    return acc;
  }

 private:
  std::int64_t size_;
  std::vector<double> mark_;
};

}  // namespace

GridFunction hl_maximal(const GridFunction& f) {
  const std::int64_t n = f.cells_per_axis();
  GridFunction out = GridFunction::zeros(f.dim(), f.extent(), f.gen());
  if (f.dim() == 1) {
    std::vector<double> prefix(n + 1, 0.0);
    for (std::int64_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + f[i];
    ChmaxMarks marks(n);
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = a + 1; b <= n; ++b) {
        double avg = (prefix[b] - prefix[a]) / static_cast<double>(b - a);
        if (avg <= 0.0) continue;
        // the closed window [a h, b h] contains anchors a..b
        marks.update(a, std::min(b, n - 1) + 1, avg);
      }
    }
    for (std::int64_t i = 0; i < n; ++i) out.mutable_value(i) = marks.query(i);
  } else {
    std::vector<double> prefix((n + 1) * (n + 1), 0.0);
    auto P = [&](std::int64_t i, std::int64_t j) -> double& {
      return prefix[i * (n + 1) + j];
    };
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = 0; j < n; ++j)
        P(i + 1, j + 1) = f.at(i, j) + P(i, j + 1) + P(i + 1, j) - P(i, j);
    for (std::int64_t s = 1; s <= n; ++s) {
      double area = static_cast<double>(s) * static_cast<double>(s);
      for (std::int64_t a = 0; a + s <= n; ++a)
        for (std::int64_t b = 0; b + s <= n; ++b) {
          double avg =
              (P(a + s, b + s) - P(a, b + s) - P(a + s, b) + P(a, b)) / area;
          if (avg <= 0.0) continue;
          std::int64_t i_hi = std::min(a + s, n - 1), j_hi = std::min(b + s, n - 1);
          for (std::int64_t i = a; i <= i_hi; ++i)
            for (std::int64_t j = b; j <= j_hi; ++j) {
              double& o = out.mutable_value(i * n + j);
              o = std::max(o, avg);
            }
        }
    }
  }
  return out;
}

GridFunction powered_maximal(const GridFunction& f, double eta) {
  if (!(eta > 0.0)) throw ParamError("powered maximal requires eta > 0");
  const std::int64_t n = f.cells_per_axis();
  GridFunction out = GridFunction::zeros(f.dim(), f.extent(), f.gen());
  if (f.dim() == 1) {
    std::vector<double> prefix(n + 1, 0.0);
    for (std::int64_t i = 0; i < n; ++i)
      prefix[i + 1] = prefix[i] + (eta == 1.0 ? f[i] : checked_pow(f[i], eta));
    for (std::int64_t i = 0; i < n; ++i) {
      double best = 0.0;
      for (std::int64_t m = 1; m <= n; ++m) {
        std::int64_t lo = std::max<std::int64_t>(i - m, 0);
        std::int64_t hi = std::min<std::int64_t>(i + m, n);
        double avg = (prefix[hi] - prefix[lo]) / static_cast<double>(2 * m);
        best = std::max(best, avg);
      }
      out.mutable_value(i) = eta == 1.0 ? best : checked_pow(best, 1.0 / eta);
    }
  } else {
    std::vector<double> prefix((n + 1) * (n + 1), 0.0);
    auto P = [&](std::int64_t i, std::int64_t j) -> double& {
      return prefix[i * (n + 1) + j];
    };
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = 0; j < n; ++j)
        P(i + 1, j + 1) = (eta == 1.0 ? f.at(i, j) : checked_pow(f.at(i, j), eta)) +
                          P(i, j + 1) + P(i + 1, j) - P(i, j);
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = 0; j < n; ++j) {
        double best = 0.0;
        for (std::int64_t m = 1; m <= n; ++m) {
          std::int64_t i0 = std::max<std::int64_t>(i - m, 0);
          std::int64_t i1 = std::min<std::int64_t>(i + m, n);
          std::int64_t j0 = std::max<std::int64_t>(j - m, 0);
          std::int64_t j1 = std::min<std::int64_t>(j + m, n);
          double mass = P(i1, j1) - P(i0, j1) - P(i1, j0) + P(i0, j0);
          double avg = mass / (4.0 * static_cast<double>(m) * static_cast<double>(m));
          best = std::max(best, avg);
        }
        out.mutable_value(i * n + j) = eta == 1.0 ? best : checked_pow(best, 1.0 / eta);
      }
  }
  return out;
}

}  // namespace morrey
