// SPDX-License-Identifier: Apache-2.0
#include "morreylab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace morrey {

namespace {

void require_same_lattice(const GridFunction& a, const GridFunction& b) {
  if (!a.same_lattice(b)) throw LatticeMismatchError("operands on different lattices");
}

void require_alpha(double alpha, double n, const char* what) {
  if (!(alpha > 0.0) || !(alpha < n))
    throw ParamError(std::string(what) + ": alpha out of range");
}

// 1-D kernel piece weights for anchors: K[m] = int_{m h}^{(m+1) h} |y|^{alpha-1} dy
// for m >= 0; pieces with m < 0 mirror as K[-1-m].
std::vector<double> kernel_pieces_1d(double alpha, double h, std::int64_t count) {
  std::vector<double> k(count);
  double ha = std::pow(h, alpha);
  for (std::int64_t m = 0; m < count; ++m) {
    double a = static_cast<double>(m), b = static_cast<double>(m + 1);
    k[m] = ha * (std::pow(b, alpha) - std::pow(a, alpha)) / alpha;
  }
  return k;
}

// 2-D kernel piece weights indexed by the per-axis piece offset m in
// [-n, n-1]^2: midpoint |(m+1/2) h|^{alpha-2} h^2, except the four pieces
// touching the origin, which use the equal-area quarter-disc value.
struct Kernel2d {
  std::int64_t n;
  double h, alpha;
  double corner;  // shared by m0, m1 in {-1, 0}
  double operator()(std::int64_t m0, std::int64_t m1) const {
    if ((m0 == -1 || m0 == 0) && (m1 == -1 || m1 == 0)) return corner;
    double y0 = (static_cast<double>(m0) + 0.5) * h;
    double y1 = (static_cast<double>(m1) + 0.5) * h;
    return std::pow(std::hypot(y0, y1), alpha - 2.0) * h * h;
  }
};

Kernel2d make_kernel_2d(double alpha, double h, std::int64_t n) {
  double rho = 2.0 * h / std::sqrt(std::numbers::pi);  // pi rho^2 / 4 = h^2
  double corner = (std::numbers::pi / 2.0) * std::pow(rho, alpha) / alpha;
  return Kernel2d{n, h, alpha, corner};
}

}  // namespace

GridFunction frac_integral(const GridFunction& f, double alpha) {
  require_alpha(alpha, f.dim(), "frac_integral");
  const std::int64_t n = f.cells_per_axis();
  GridFunction out = GridFunction::zeros(f.dim(), f.extent(), f.gen());
  if (f.dim() == 1) {
    auto kernel = kernel_pieces_1d(alpha, f.cell_side(), n + 1);
    auto k = [&](std::int64_t m) { return kernel[m >= 0 ? m : -1 - m]; };
    for (std::int64_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::int64_t c = 0; c < n; ++c) {
        if (f[c] == 0.0) continue;
        acc += f[c] * k(c - i);
      }
      out.mutable_value(i) = acc;
    }
  } else {
    Kernel2d k2 = make_kernel_2d(alpha, f.cell_side(), n);
    for (std::int64_t i0 = 0; i0 < n; ++i0)
      for (std::int64_t i1 = 0; i1 < n; ++i1) {
        double acc = 0.0;
        for (std::int64_t c0 = 0; c0 < n; ++c0)
          for (std::int64_t c1 = 0; c1 < n; ++c1) {
            double v = f.at(c0, c1);
            if (v == 0.0) continue;
            acc += v * k2(c0 - i0, c1 - i1);
          }
        out.mutable_value(i0 * n + i1) = acc;
      }
  }
  return out;
}

GridFunction powered_frac(const GridFunction& f, double alpha, double u) {
  if (!(u >= 1.0)) throw ParamError("powered_frac requires u >= 1");
  if (u == 1.0) return frac_integral(f, alpha);
  GridFunction powered = frac_integral(f.pow_values(u), alpha);
  return powered.pow_values(1.0 / u);
}

GridFunction bilinear_grafakos(const GridFunction& f1, const GridFunction& f2,
                               double alpha) {
  require_same_lattice(f1, f2);
  require_alpha(alpha, f1.dim(), "bilinear_grafakos");
  const std::int64_t n = f1.cells_per_axis();
  GridFunction out = GridFunction::zeros(f1.dim(), f1.extent(), f1.gen());
  if (f1.dim() == 1) {
    // For anchor x = corner of cell i, y in [m h, (m+1) h) gives
    // f1(x+y) = f1[i+m] and f2(x-y) = f2[i-1-m] a.e.
    auto kernel = kernel_pieces_1d(alpha, f1.cell_side(), n + 1);
    auto k = [&](std::int64_t m) { return kernel[m >= 0 ? m : -1 - m]; };
    for (std::int64_t i = 0; i < n; ++i) {
      double acc = 0.0;
      std::int64_t m_lo = std::max<std::int64_t>(-i, i - n);
      std::int64_t m_hi = std::min<std::int64_t>(n - 1 - i, i - 1);
      for (std::int64_t m = m_lo; m <= m_hi; ++m) {
        double prod = f1[i + m] * f2[i - 1 - m];
        if (prod == 0.0) continue;
        acc += prod * k(m);
      }
      out.mutable_value(i) = acc;
    }
  } else {
    Kernel2d k2 = make_kernel_2d(alpha, f1.cell_side(), n);
    for (std::int64_t i0 = 0; i0 < n; ++i0)
      for (std::int64_t i1 = 0; i1 < n; ++i1) {
        double acc = 0.0;
        std::int64_t a_lo = std::max<std::int64_t>(-i0, i0 - n);
        std::int64_t a_hi = std::min<std::int64_t>(n - 1 - i0, i0 - 1);
        std::int64_t b_lo = std::max<std::int64_t>(-i1, i1 - n);
        std::int64_t b_hi = std::min<std::int64_t>(n - 1 - i1, i1 - 1);
        for (std::int64_t m0 = a_lo; m0 <= a_hi; ++m0)
          for (std::int64_t m1 = b_lo; m1 <= b_hi; ++m1) {
            double prod = f1.at(i0 + m0, i1 + m1) * f2.at(i0 - 1 - m0, i1 - 1 - m1);
            if (prod == 0.0) continue;
            acc += prod * k2(m0, m1);
          }
        out.mutable_value(i0 * n + i1) = acc;
      }
  }
  return out;
}

GridFunction bilinear_ks(const GridFunction& f1, const GridFunction& f2,
                         double alpha) {
  require_same_lattice(f1, f2);
  require_alpha(alpha, 2.0 * f1.dim(), "bilinear_ks");
  const std::int64_t n = f1.cells_per_axis();
  const double h = f1.cell_side();
  GridFunction out = GridFunction::zeros(f1.dim(), f1.extent(), f1.gen());
  if (f1.dim() == 1) {
    // Distances from an anchor to cell midpoints are odd multiples of h/2;
    // bucket cells by that distance, so the kernel argument becomes
    // (t1 + t2 + 1) h with bucket indices t >= 0.  The four cell pairs
    // touching the anchor (t1 = t2 = 0) get the exact pair integral.
    double corner;
    if (alpha == 1.0)
      corner = 2.0 * h * std::numbers::ln2;
    else
      corner = std::pow(h, alpha) * (std::exp2(alpha) - 2.0) / (alpha * (alpha - 1.0));
    std::vector<double> w(2 * n + 1);
    for (std::size_t u = 1; u < w.size(); ++u)
      w[u] = std::pow(static_cast<double>(u + 1) * h, alpha - 2.0) * h * h;
    w[0] = corner;
    std::vector<double> a(n), b(n);
    for (std::int64_t i = 0; i < n; ++i) {
      std::int64_t tmax = std::max(i, n - i) + 1;
      a.assign(tmax, 0.0);
      b.assign(tmax, 0.0);
      for (std::int64_t t = 0; t < tmax; ++t) {
        if (i + t < n) {
          a[t] += f1[i + t];
          b[t] += f2[i + t];
        }
        if (i - 1 - t >= 0) {
          a[t] += f1[i - 1 - t];
          b[t] += f2[i - 1 - t];
        }
      }
      double acc = 0.0;
      for (std::int64_t t1 = 0; t1 < tmax; ++t1) {
        if (a[t1] == 0.0) continue;
        double row = 0.0;
        for (std::int64_t t2 = 0; t2 < tmax; ++t2) {
          if (b[t2] == 0.0) continue;
          row += b[t2] * w[t1 + t2];
        }
        acc += a[t1] * row;
      }
      out.mutable_value(i) = acc;
    }
  } else {
    // Joint radial correction for the 16 cell pairs touching the anchor,
    // shared equally; everything else by midpoint quadrature.
    double rho = 2.0 * h * std::pow(6.0 / (std::numbers::pi * std::numbers::pi), 0.25);
    double joint = (2.0 * std::numbers::pi * std::numbers::pi / 3.0) *
                   std::pow(rho, alpha) / alpha;
    double corner_share = joint / 16.0;
    double h4 = h * h * h * h;
    for (std::int64_t i0 = 0; i0 < n; ++i0)
      for (std::int64_t i1 = 0; i1 < n; ++i1) {
        double acc = 0.0;
        for (std::int64_t c0 = 0; c0 < n; ++c0)
          for (std::int64_t c1 = 0; c1 < n; ++c1) {
            double v1 = f1.at(c0, c1);
            if (v1 == 0.0) continue;
            double d1 = std::hypot((static_cast<double>(c0 - i0) + 0.5) * h,
                                   (static_cast<double>(c1 - i1) + 0.5) * h);
            bool touch1 = (c0 == i0 || c0 == i0 - 1) && (c1 == i1 || c1 == i1 - 1);
            for (std::int64_t d0 = 0; d0 < n; ++d0)
              for (std::int64_t e1 = 0; e1 < n; ++e1) {
                double v2 = f2.at(d0, e1);
                if (v2 == 0.0) continue;
                bool touch2 =
                    (d0 == i0 || d0 == i0 - 1) && (e1 == i1 || e1 == i1 - 1);
                if (touch1 && touch2) {
                  acc += v1 * v2 * corner_share;
                  continue;
                }
                double d2 = std::hypot((static_cast<double>(d0 - i0) + 0.5) * h,
                                       (static_cast<double>(e1 - i1) + 0.5) * h);
                acc += v1 * v2 * std::pow(d1 + d2, alpha - 4.0) * h4;
              }
          }
        out.mutable_value(i0 * n + i1) = acc;
      }
  }
  return out;
}

GridFunction dyadic_majorant(const GridFunction& f1, const GridFunction& f2,
                             double alpha) {
  require_same_lattice(f1, f2);
  require_alpha(alpha, f1.dim(), "dyadic_majorant");
  const int dim = f1.dim();
  const int gen = f1.gen();
  const int l_min = -f1.extent() - 2;
  const std::int64_t n = f1.cells_per_axis();
  const double h = f1.cell_side();
  GridFunction out = GridFunction::zeros(dim, f1.extent(), gen);
  const double tail_factor = std::exp2(-(gen + 1.0) * alpha) / (1.0 - std::exp2(-alpha));
  if (dim == 1) {
    for (std::int64_t i = 0; i < n; ++i) {
      double total = 0.0;
      double inner = 0.0;  // running sum of f1[i+m] f2[i-1-m] over |m| < M
      std::int64_t covered = 0;
      std::int64_t m_lo = std::max<std::int64_t>(-i, i - n);
      std::int64_t m_hi = std::min<std::int64_t>(n - 1 - i, i - 1);
      for (int l = gen; l >= l_min; --l) {
        std::int64_t m_cap = std::int64_t{1} << (gen - l);
        for (std::int64_t m = covered; m < m_cap; ++m) {
          if (m >= m_lo && m <= m_hi) inner += f1[i + m] * f2[i - 1 - m];
          std::int64_t neg = -1 - m;
          if (neg >= m_lo && neg <= m_hi) inner += f1[i + neg] * f2[i - 1 - neg];
        }
        covered = m_cap;
        total += std::exp2(l * (1.0 - alpha)) * h * inner;
      }
      double s = 0.0;
      if (i < n) s += f1[i] * (i >= 1 ? f2[i - 1] : 0.0);
      if (i >= 1) s += f1[i - 1] * f2[i];
      total += s * tail_factor;
      out.mutable_value(i) = total;
    }
  } else {
    auto get = [&](const GridFunction& f, std::int64_t a, std::int64_t b) {
      return (a < 0 || a >= n || b < 0 || b >= n) ? 0.0 : f.at(a, b);
    };
    for (std::int64_t i0 = 0; i0 < n; ++i0)
      for (std::int64_t i1 = 0; i1 < n; ++i1) {
        double total = 0.0;
        for (int l = gen; l >= l_min; --l) {
          std::int64_t m_cap = std::min(std::int64_t{1} << (gen - l), n);
          double inner = 0.0;
          for (std::int64_t m0 = -m_cap; m0 < m_cap; ++m0)
            for (std::int64_t m1 = -m_cap; m1 < m_cap; ++m1) {
              double prod = get(f1, i0 + m0, i1 + m1) *
                            get(f2, i0 - 1 - m0, i1 - 1 - m1);
              inner += prod;
            }
          total += std::exp2(l * (2.0 - alpha)) * h * h * inner;
        }
        double s = get(f1, i0, i1) * get(f2, i0 - 1, i1 - 1) +
                   get(f1, i0, i1 - 1) * get(f2, i0 - 1, i1) +
                   get(f1, i0 - 1, i1) * get(f2, i0, i1 - 1) +
                   get(f1, i0 - 1, i1 - 1) * get(f2, i0, i1);
        total += s * tail_factor;
        out.mutable_value(i0 * n + i1) = total;
      }
  }
  return out;
}

GridFunction surrogate_sigma(const GridFunction& f1, const GridFunction& f2,
                             double alpha) {
  require_same_lattice(f1, f2);
  require_alpha(alpha, 2.0 * f1.dim(), "surrogate_sigma");
  const int dim = f1.dim();
  const int gen = f1.gen();
  const int l_min = -f1.extent() - 2;
  const std::int64_t n = f1.cells_per_axis();
  GridFunction out = GridFunction::zeros(dim, f1.extent(), gen);
  if (dim == 1) {
    const double h = f1.cell_side();
    std::vector<double> p1(n + 1, 0.0), p2(n + 1, 0.0);
    for (std::int64_t i = 0; i < n; ++i) {
      p1[i + 1] = p1[i] + f1[i];
      p2[i + 1] = p2[i] + f2[i];
    }
    for (int l = gen; l >= l_min; --l) {
      std::int64_t sc = std::int64_t{1} << (gen - l);
      double weight = std::exp2(l * (2.0 - alpha));
      for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t k = floor_div(f1.origin() + i, sc);
        std::int64_t a = std::clamp<std::int64_t>((k - 1) * sc - f1.origin(), 0, n);
        std::int64_t b = std::clamp<std::int64_t>((k + 2) * sc - f1.origin(), 0, n);
        double m1 = (p1[b] - p1[a]) * h;
        double m2 = (p2[b] - p2[a]) * h;
        out.mutable_value(i) += weight * m1 * m2;
      }
    }
  } else {
    const double cellvol = f1.cell_volume();
    std::vector<double> p1((n + 1) * (n + 1), 0.0), p2((n + 1) * (n + 1), 0.0);
    auto fill = [&](const GridFunction& f, std::vector<double>& p) {
      auto P = [&](std::int64_t i, std::int64_t j) -> double& {
        return p[i * (n + 1) + j];
      };
      for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
          P(i + 1, j + 1) = f.at(i, j) + P(i, j + 1) + P(i + 1, j) - P(i, j);
    };
    fill(f1, p1);
    fill(f2, p2);
    auto box = [&](const std::vector<double>& p, std::int64_t a0, std::int64_t b0,
                   std::int64_t a1, std::int64_t b1) {
      auto P = [&](std::int64_t i, std::int64_t j) { return p[i * (n + 1) + j]; };
      return P(b0, b1) - P(a0, b1) - P(b0, a1) + P(a0, a1);
    };
    for (int l = gen; l >= l_min; --l) {
      std::int64_t sc = std::int64_t{1} << (gen - l);
      double weight = std::exp2(l * (4.0 - alpha));
      for (std::int64_t i0 = 0; i0 < n; ++i0) {
        std::int64_t k0 = floor_div(f1.origin() + i0, sc);
        std::int64_t a0 = std::clamp<std::int64_t>((k0 - 1) * sc - f1.origin(), 0, n);
        std::int64_t b0 = std::clamp<std::int64_t>((k0 + 2) * sc - f1.origin(), 0, n);
        for (std::int64_t i1 = 0; i1 < n; ++i1) {
          std::int64_t k1 = floor_div(f1.origin() + i1, sc);
          std::int64_t a1 = std::clamp<std::int64_t>((k1 - 1) * sc - f1.origin(), 0, n);
          std::int64_t b1 = std::clamp<std::int64_t>((k1 + 2) * sc - f1.origin(), 0, n);
          double m1 = box(p1, a0, b0, a1, b1) * cellvol;
          double m2 = box(p2, a0, b0, a1, b1) * cellvol;
          out.mutable_value(i0 * n + i1) += weight * m1 * m2;
        }
      }
    }
  }
  return out;
}

GridFunction pair_window_integral(const GridFunction& f1, const GridFunction& f2,
                                  int l) {
  require_same_lattice(f1, f2);
  if (l > f1.gen()) throw DomainError("window finer than the grid");
  const std::int64_t n = f1.cells_per_axis();
  const std::int64_t m_cap = std::int64_t{1} << (f1.gen() - l);
  GridFunction out = GridFunction::zeros(f1.dim(), f1.extent(), f1.gen());
  if (f1.dim() == 1) {
    const double h = f1.cell_side();
    for (std::int64_t i = 0; i < n; ++i) {
      double inner = 0.0;
      std::int64_t m_lo = std::max({-m_cap, -i, i - n});
      std::int64_t m_hi = std::min({m_cap - 1, n - 1 - i, i - 1});
      for (std::int64_t m = m_lo; m <= m_hi; ++m)
        inner += f1[i + m] * f2[i - 1 - m];
      out.mutable_value(i) = h * inner;
    }
  } else {
    auto get = [&](const GridFunction& f, std::int64_t a, std::int64_t b) {
      return (a < 0 || a >= n || b < 0 || b >= n) ? 0.0 : f.at(a, b);
    };
    const double cellvol = f1.cell_volume();
    for (std::int64_t i0 = 0; i0 < n; ++i0)
      for (std::int64_t i1 = 0; i1 < n; ++i1) {
        double inner = 0.0;
        for (std::int64_t m0 = -m_cap; m0 < m_cap; ++m0)
          for (std::int64_t m1 = -m_cap; m1 < m_cap; ++m1)
            inner += get(f1, i0 + m0, i1 + m1) * get(f2, i0 - 1 - m0, i1 - 1 - m1);
        out.mutable_value(i0 * n + i1) = cellvol * inner;
      }
  }
  return out;
}

LocalAverage local_average(const GridFunction& f1, const GridFunction& f2,
                           int l, double v, const DyadicCube& q_cube) {
  require_same_lattice(f1, f2);
  if (q_cube.generation() != l) throw DomainError("cube not in generation l");
  if (q_cube.dim() != f1.dim()) throw LatticeMismatchError("cube dim mismatch");
  if (!(v >= 1.0)) throw ParamError("local_average requires v >= 1");
  if (l > f1.gen()) throw DomainError("cube finer than the grid");
  GridFunction window = pair_window_integral(f1, f2, l);
  auto cr = window.cell_range(q_cube.bounds());
  const double vol = f1.cell_volume();
  double acc = 0.0;
  if (f1.dim() == 1) {
    for (std::int64_t i = cr.lo[0]; i < cr.hi[0]; ++i)
      acc += std::pow(window[i], v) * vol;
  } else {
    for (std::int64_t i = cr.lo[0]; i < cr.hi[0]; ++i)
      for (std::int64_t j = cr.lo[1]; j < cr.hi[1]; ++j)
        acc += std::pow(window.at(i, j), v) * vol;
  }
  double lhs = std::pow(acc, 1.0 / v);

  GridFunction m1 = powered_maximal(f1, v);
  GridFunction m2 = powered_maximal(f2, v);
  auto inf_on = [&](const GridFunction& g) {
    double best = std::numeric_limits<double>::infinity();
    if (g.dim() == 1) {
      for (std::int64_t i = cr.lo[0]; i < cr.hi[0]; ++i) best = std::min(best, g[i]);
    } else {
      for (std::int64_t i = cr.lo[0]; i < cr.hi[0]; ++i)
        for (std::int64_t j = cr.lo[1]; j < cr.hi[1]; ++j)
          best = std::min(best, g.at(i, j));
    }
    return std::isfinite(best) ? best : 0.0;
  };
  double ball = std::pow(std::exp2(1.0 - l), f1.dim());  // |B(2^{-l})| as a cube
  double rhs = std::pow(ball, 1.0 + 1.0 / v) * inf_on(m1) * inf_on(m2);
  return LocalAverage{lhs, rhs};
}

}  // namespace morrey
