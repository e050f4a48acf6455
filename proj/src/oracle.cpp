// SPDX-License-Identifier: Apache-2.0
#include "morreylab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "morreylab/dyadic.hpp"

namespace morrey {

namespace {

void oracle_guard(const GridFunction& f) {
  if (f.gen() > 7) throw DomainError("oracle evaluation limited to gen <= 7");
}

// integral of |y|^{alpha-1} over [a, b], split at 0.
double abs_kernel_integral(double a, double b, double alpha) {
  if (a >= b) return 0.0;
  auto one_sided = [&](double lo, double hi) {  // 0 <= lo < hi
    return (std::pow(hi, alpha) - std::pow(lo, alpha)) / alpha;
  };
  if (a >= 0.0) return one_sided(a, b);
  if (b <= 0.0) return one_sided(-b, -a);
  return one_sided(0.0, -a) + one_sided(0.0, b);
}

double probe(const GridFunction& f, double x) { return f.value_at(std::span(&x, 1)); }
double probe(const GridFunction& f, double x0, double x1) {
  double pt[2] = {x0, x1};
  return f.value_at(pt);
}

// 2-D: does the half-open cell with lower corner (a0, a1) touch the point x
// at one of its corners?
bool touches_corner(double a0, double a1, double h, double x0, double x1) {
  return (a0 == x0 || a0 + h == x0) && (a1 == x1 || a1 + h == x1);
}

}  // namespace

GridFunction oracle_frac_integral(const GridFunction& f, double alpha) {
  oracle_guard(f);
  if (!(alpha > 0.0 && alpha < f.dim()))
    throw ParamError("oracle_frac_integral: alpha out of range");
  const std::int64_t n = f.cells_per_axis();
  const double h = f.cell_side();
  GridFunction out = GridFunction::zeros(f.dim(), f.extent(), f.gen());
  if (f.dim() == 1) {
    for (std::int64_t i = 0; i < n; ++i) {
      double x = f.anchor(i);
      double acc = 0.0;
      for (std::int64_t c = 0; c < n; ++c) {
        double v = f[c];
        if (v == 0.0) continue;
        double a = f.anchor(c) - x;
        acc += v * abs_kernel_integral(a, a + h, alpha);
      }
      out.mutable_value(i) = acc;
    }
  } else {
    double rho = 2.0 * h / std::sqrt(std::numbers::pi);
    double corner = (std::numbers::pi / 2.0) * std::pow(rho, alpha) / alpha;
    for (std::int64_t i0 = 0; i0 < n; ++i0)
      for (std::int64_t i1 = 0; i1 < n; ++i1) {
        double x0 = f.anchor(i0), x1 = f.anchor(i1);
        double acc = 0.0;
        for (std::int64_t c0 = 0; c0 < n; ++c0)
          for (std::int64_t c1 = 0; c1 < n; ++c1) {
            double v = f.at(c0, c1);
            if (v == 0.0) continue;
            double a0 = f.anchor(c0), a1 = f.anchor(c1);
            if (touches_corner(a0, a1, h, x0, x1)) {
              acc += v * corner;
            } else {
              double d = std::hypot(a0 + 0.5 * h - x0, a1 + 0.5 * h - x1);
              acc += v * std::pow(d, alpha - 2.0) * h * h;
            }
          }
        out.mutable_value(i0 * n + i1) = acc;
      }
  }
  return out;
}

GridFunction oracle_bilinear_grafakos(const GridFunction& f1,
                                      const GridFunction& f2, double alpha) {
  oracle_guard(f1);
  if (!f1.same_lattice(f2)) throw LatticeMismatchError("oracle: lattice mismatch");
  if (!(alpha > 0.0 && alpha < f1.dim()))
    throw ParamError("oracle_bilinear_grafakos: alpha out of range");
  const std::int64_t n = f1.cells_per_axis();
  const double h = f1.cell_side();
  GridFunction out = GridFunction::zeros(f1.dim(), f1.extent(), f1.gen());
  if (f1.dim() == 1) {
    for (std::int64_t i = 0; i < n; ++i) {
      double x = f1.anchor(i);
      double acc = 0.0;
      // y-pieces are images of the f1 cells; the integrand is constant on
      // each because the anchors sit on the lattice.
      for (std::int64_t c = 0; c < n; ++c) {
        double a = f1.anchor(c) - x;
        double mid = a + 0.5 * h;
        double v = probe(f1, x + mid) * probe(f2, x - mid);
        if (v == 0.0) continue;
        acc += v * abs_kernel_integral(a, a + h, alpha);
      }
      out.mutable_value(i) = acc;
    }
  } else {
    double rho = 2.0 * h / std::sqrt(std::numbers::pi);
    double corner = (std::numbers::pi / 2.0) * std::pow(rho, alpha) / alpha;
    for (std::int64_t i0 = 0; i0 < n; ++i0)
      for (std::int64_t i1 = 0; i1 < n; ++i1) {
        double x0 = f1.anchor(i0), x1 = f1.anchor(i1);
        double acc = 0.0;
        for (std::int64_t c0 = 0; c0 < n; ++c0)
          for (std::int64_t c1 = 0; c1 < n; ++c1) {
            double a0 = f1.anchor(c0) - x0, a1 = f1.anchor(c1) - x1;
            double m0 = a0 + 0.5 * h, m1 = a1 + 0.5 * h;
            double v = probe(f1, x0 + m0, x1 + m1) * probe(f2, x0 - m0, x1 - m1);
            if (v == 0.0) continue;
            if ((a0 == 0.0 || a0 + h == 0.0) && (a1 == 0.0 || a1 + h == 0.0))
              acc += v * corner;
            else
              acc += v * std::pow(std::hypot(m0, m1), alpha - 2.0) * h * h;
          }
        out.mutable_value(i0 * n + i1) = acc;
      }
  }
  return out;
}

GridFunction oracle_bilinear_ks(const GridFunction& f1, const GridFunction& f2,
                                double alpha) {
  oracle_guard(f1);
  if (!f1.same_lattice(f2)) throw LatticeMismatchError("oracle: lattice mismatch");
  if (!(alpha > 0.0 && alpha < 2.0 * f1.dim()))
    throw ParamError("oracle_bilinear_ks: alpha out of range");
  const std::int64_t n = f1.cells_per_axis();
  const double h = f1.cell_side();
  GridFunction out = GridFunction::zeros(f1.dim(), f1.extent(), f1.gen());
  if (f1.dim() == 1) {
    double corner;
    if (alpha == 1.0)
      corner = 2.0 * h * std::numbers::ln2;
    else
      corner = std::pow(h, alpha) * (std::exp2(alpha) - 2.0) / (alpha * (alpha - 1.0));
    std::vector<double> kernel(2 * n + 2, -1.0);
    auto kernel_at = [&](double dist_sum) {
      auto u = static_cast<std::int64_t>(std::llround(dist_sum / h));
      if (kernel[u] < 0.0) kernel[u] = std::pow(dist_sum, alpha - 2.0) * h * h;
      return kernel[u];
    };
    for (std::int64_t i = 0; i < n; ++i) {
      double x = f1.anchor(i);
      double acc = 0.0;
      for (std::int64_t c1 = 0; c1 < n; ++c1) {
        double v1 = f1[c1];
        if (v1 == 0.0) continue;
        double y1 = f1.anchor(c1);
        bool touch1 = (y1 == x || y1 + h == x);
        double d1 = std::abs(y1 + 0.5 * h - x);
        for (std::int64_t c2 = 0; c2 < n; ++c2) {
          double v2 = f2[c2];
          if (v2 == 0.0) continue;
          double y2 = f2.anchor(c2);
          if (touch1 && (y2 == x || y2 + h == x)) {
            acc += v1 * v2 * corner;
            continue;
          }
          double d2 = std::abs(y2 + 0.5 * h - x);
          acc += v1 * v2 * kernel_at(d1 + d2);
        }
      }
      out.mutable_value(i) = acc;
    }
  } else {
    double rho = 2.0 * h * std::pow(6.0 / (std::numbers::pi * std::numbers::pi), 0.25);
    double corner_share = (2.0 * std::numbers::pi * std::numbers::pi / 3.0) *
                          std::pow(rho, alpha) / alpha / 16.0;
    double h4 = h * h * h * h;
    for (std::int64_t i0 = 0; i0 < n; ++i0)
      for (std::int64_t i1 = 0; i1 < n; ++i1) {
        double x0 = f1.anchor(i0), x1 = f1.anchor(i1);
        double acc = 0.0;
        for (std::int64_t c0 = 0; c0 < n; ++c0)
          for (std::int64_t c1 = 0; c1 < n; ++c1) {
            double v1 = f1.at(c0, c1);
            if (v1 == 0.0) continue;
            double a0 = f1.anchor(c0), a1 = f1.anchor(c1);
            bool touch1 = touches_corner(a0, a1, h, x0, x1);
            double d1 = std::hypot(a0 + 0.5 * h - x0, a1 + 0.5 * h - x1);
            for (std::int64_t e0 = 0; e0 < n; ++e0)
              for (std::int64_t e1 = 0; e1 < n; ++e1) {
                double v2 = f2.at(e0, e1);
                if (v2 == 0.0) continue;
                double b0 = f2.anchor(e0), b1 = f2.anchor(e1);
                if (touch1 && touches_corner(b0, b1, h, x0, x1)) {
                  acc += v1 * v2 * corner_share;
                  continue;
                }
                double d2 = std::hypot(b0 + 0.5 * h - x0, b1 + 0.5 * h - x1);
                acc += v1 * v2 * std::pow(d1 + d2, alpha - 4.0) * h4;
              }
          }
        out.mutable_value(i0 * n + i1) = acc;
      }
  }
  return out;
}

namespace {

// Window integral int_{[-R, R]^dim} f1(x+y) f2(x-y) dy by direct piece
// clipping and midpoint probes.
double window_integral_1d(const GridFunction& f1, const GridFunction& f2,
                          double x, double r) {
  const std::int64_t n = f1.cells_per_axis();
  const double h = f1.cell_side();
  if (r < h) {  // sub-cell window: one constant quadrant on each side
    return r * (probe(f1, x + 0.5 * r) * probe(f2, x - 0.5 * r) +
                probe(f1, x - 0.5 * r) * probe(f2, x + 0.5 * r));
  }
  double acc = 0.0;
  for (std::int64_t c = 0; c < n; ++c) {
    double a = f1.anchor(c) - x;
    double lo = std::max(a, -r), hi = std::min(a + h, r);
    if (lo >= hi) continue;
    double mid = 0.5 * (lo + hi);
    acc += (hi - lo) * probe(f1, x + mid) * probe(f2, x - mid);
  }
  return acc;
}

double window_integral_2d(const GridFunction& f1, const GridFunction& f2,
                          double x0, double x1, double r) {
  const std::int64_t n = f1.cells_per_axis();
  const double h = f1.cell_side();
  if (r < h) {
    double q = 0.0;
    for (int s0 : {-1, 1})
      for (int s1 : {-1, 1}) {
        double m0 = 0.5 * r * s0, m1 = 0.5 * r * s1;
        q += probe(f1, x0 + m0, x1 + m1) * probe(f2, x0 - m0, x1 - m1);
      }
    return r * r * q;
  }
  double acc = 0.0;
  for (std::int64_t c0 = 0; c0 < n; ++c0) {
    double a0 = f1.anchor(c0) - x0;
    double lo0 = std::max(a0, -r), hi0 = std::min(a0 + h, r);
    if (lo0 >= hi0) continue;
    for (std::int64_t c1 = 0; c1 < n; ++c1) {
      double a1 = f1.anchor(c1) - x1;
      double lo1 = std::max(a1, -r), hi1 = std::min(a1 + h, r);
      if (lo1 >= hi1) continue;
      double m0 = 0.5 * (lo0 + hi0), m1 = 0.5 * (lo1 + hi1);
      double v = probe(f1, x0 + m0, x1 + m1) * probe(f2, x0 - m0, x1 - m1);
      acc += v * (hi0 - lo0) * (hi1 - lo1);
    }
  }
  return acc;
}

}  // namespace

GridFunction oracle_majorant(const GridFunction& f1, const GridFunction& f2,
                             double alpha) {
  oracle_guard(f1);
  if (!f1.same_lattice(f2)) throw LatticeMismatchError("oracle: lattice mismatch");
  const int dim = f1.dim();
  if (!(alpha > 0.0 && alpha < dim))
    throw ParamError("oracle_majorant: alpha out of range");
  const int gen = f1.gen();
  const int l_min = -f1.extent() - 2;
  const std::int64_t n = f1.cells_per_axis();
  GridFunction out = GridFunction::zeros(dim, f1.extent(), gen);
  auto window = [&](double x0, double x1, double r) {
    return dim == 1 ? window_integral_1d(f1, f2, x0, r)
                    : window_integral_2d(f1, f2, x0, x1, r);
  };
  auto eval = [&](double x0, double x1) {
    double total = 0.0;
    for (int l = l_min; l <= gen; ++l)
      total += std::exp2(l * (dim - alpha)) * window(x0, x1, std::exp2(-l));
    // fine scales: sum until the geometric terms stop mattering
    for (int l = gen + 1; l <= gen + 20000; ++l) {
      double term = std::exp2(l * (dim - alpha)) * window(x0, x1, std::exp2(-l));
      total += term;
      if (term <= total * 1e-17) break;
    }
    return total;
  };
  if (dim == 1) {
    for (std::int64_t i = 0; i < n; ++i)
      out.mutable_value(i) = eval(f1.anchor(i), 0.0);
  } else {
    for (std::int64_t i0 = 0; i0 < n; ++i0)
      for (std::int64_t i1 = 0; i1 < n; ++i1)
        out.mutable_value(i0 * n + i1) = eval(f1.anchor(i0), f1.anchor(i1));
  }
  return out;
}

GridFunction oracle_sigma(const GridFunction& f1, const GridFunction& f2,
                          double alpha) {
  oracle_guard(f1);
  if (!f1.same_lattice(f2)) throw LatticeMismatchError("oracle: lattice mismatch");
  const int dim = f1.dim();
  if (!(alpha > 0.0 && alpha < 2.0 * dim))
    throw ParamError("oracle_sigma: alpha out of range");
  const int gen = f1.gen();
  const int l_min = -f1.extent() - 2;
  const std::int64_t n = f1.cells_per_axis();
  const double h = f1.cell_side();
  auto domain = Region::box(dim, DyadicRational::scaled(f1.origin(), gen),
                            DyadicRational::scaled(f1.origin() + n, gen));
  auto integrate_over = [&](const GridFunction& f, const Region& r) {
    double acc = 0.0;
    if (dim == 1) {
      for (std::int64_t c = 0; c < n; ++c) {
        double mid = f.anchor(c) + 0.5 * h;
        if (r.contains(std::span(&mid, 1))) acc += f[c] * h;
      }
    } else {
      for (std::int64_t c0 = 0; c0 < n; ++c0)
        for (std::int64_t c1 = 0; c1 < n; ++c1) {
          double pt[2] = {f.anchor(c0) + 0.5 * h, f.anchor(c1) + 0.5 * h};
          if (r.contains(pt)) acc += f.at(c0, c1) * h * h;
        }
    }
    return acc;
  };
  GridFunction out = GridFunction::zeros(dim, f1.extent(), gen);
  for (int l = l_min; l <= gen; ++l) {
    auto cubes = cubes_of_generation(l, domain);
    double weight = std::exp2(l * (2.0 * dim - alpha));
    auto term_at = [&](std::span<const double> x) {
      for (const auto& q : cubes) {
        if (!q.contains(x)) continue;
        Region tq = q.triple();
        return weight * integrate_over(f1, tq) * integrate_over(f2, tq);
      }
      return 0.0;
    };
    if (dim == 1) {
      for (std::int64_t i = 0; i < n; ++i) {
        double x = f1.anchor(i);
        out.mutable_value(i) += term_at(std::span(&x, 1));
      }
    } else {
      for (std::int64_t i0 = 0; i0 < n; ++i0)
        for (std::int64_t i1 = 0; i1 < n; ++i1) {
          double pt[2] = {f1.anchor(i0), f1.anchor(i1)};
          out.mutable_value(i0 * n + i1) += term_at(pt);
        }
    }
  }
  return out;
}

GridFunction oracle_hl_maximal(const GridFunction& f) {
  oracle_guard(f);
  const std::int64_t n = f.cells_per_axis();
  GridFunction out = GridFunction::zeros(f.dim(), f.extent(), f.gen());
  if (f.dim() == 1) {
    for (std::int64_t i = 0; i < n; ++i) {
      double best = 0.0;
      for (std::int64_t a = 0; a <= i; ++a) {
        double sum = 0.0;
        for (std::int64_t b = a + 1; b <= n; ++b) {
          sum += f[b - 1];
          if (b >= i) best = std::max(best, sum / static_cast<double>(b - a));
        }
      }
      out.mutable_value(i) = best;
    }
  } else {
    for (std::int64_t i0 = 0; i0 < n; ++i0)
      for (std::int64_t i1 = 0; i1 < n; ++i1) {
        double best = 0.0;
        for (std::int64_t s = 1; s <= n; ++s)
          for (std::int64_t a0 = std::max<std::int64_t>(i0 - s, 0);
               a0 <= std::min(i0, n - s); ++a0)
            for (std::int64_t a1 = std::max<std::int64_t>(i1 - s, 0);
                 a1 <= std::min(i1, n - s); ++a1) {
              double sum = 0.0;
              for (std::int64_t c0 = a0; c0 < a0 + s; ++c0)
                for (std::int64_t c1 = a1; c1 < a1 + s; ++c1)
                  sum += f.at(c0, c1);
              best = std::max(best, sum / static_cast<double>(s * s));
            }
        out.mutable_value(i0 * n + i1) = best;
      }
  }
  return out;
}

GridFunction oracle_powered_maximal(const GridFunction& f, double eta) {
  oracle_guard(f);
  if (!(eta > 0.0)) throw ParamError("oracle_powered_maximal: eta must be > 0");
  const std::int64_t n = f.cells_per_axis();
  GridFunction out = GridFunction::zeros(f.dim(), f.extent(), f.gen());
  if (f.dim() == 1) {
    for (std::int64_t i = 0; i < n; ++i) {
      double best = 0.0;
      for (std::int64_t m = 1; m <= n; ++m) {
        double sum = 0.0;
        for (std::int64_t c = std::max<std::int64_t>(i - m, 0);
             c < std::min(i + m, n); ++c)
          sum += std::pow(f[c], eta);
        best = std::max(best, sum / static_cast<double>(2 * m));
      }
      out.mutable_value(i) = std::pow(best, 1.0 / eta);
    }
  } else {
    for (std::int64_t i0 = 0; i0 < n; ++i0)
      for (std::int64_t i1 = 0; i1 < n; ++i1) {
        double best = 0.0;
        for (std::int64_t m = 1; m <= n; ++m) {
          double sum = 0.0;
          for (std::int64_t c0 = std::max<std::int64_t>(i0 - m, 0);
               c0 < std::min(i0 + m, n); ++c0)
            for (std::int64_t c1 = std::max<std::int64_t>(i1 - m, 0);
                 c1 < std::min(i1 + m, n); ++c1)
              sum += std::pow(f.at(c0, c1), eta);
          best = std::max(best, sum / static_cast<double>(4 * m * m));
        }
        out.mutable_value(i0 * n + i1) = std::pow(best, 1.0 / eta);
      }
  }
  return out;
}

}  // namespace morrey
