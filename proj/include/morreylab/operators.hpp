// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "morreylab/dyadic.hpp"
#include "morreylab/grid.hpp"

namespace morrey {

// All operator fields are sampled at cell anchors (lattice corners).  In 1-D
// every y-breakpoint of the piecewise-constant integrand then lands on the
// grid, so each kernel piece is integrated in closed form and the field is
// exact.  In 2-D pieces are integrated by midpoint quadrature with an
// analytic radial correction on the pieces touching the singularity.

/// Riesz potential I_alpha f(x) = int f(y) |x-y|^{alpha-n} dy, 0 < alpha < n.
GridFunction frac_integral(const GridFunction& f, double alpha);

/// Powered variant I_alpha^{(u)} f = (I_alpha(f^u))^{1/u}, u >= 1.
GridFunction powered_frac(const GridFunction& f, double alpha, double u);

/// J_alpha[f1,f2](x) = int f1(x+y) f2(x-y) |y|^{alpha-n} dy, 0 < alpha < n.
GridFunction bilinear_grafakos(const GridFunction& f1, const GridFunction& f2,
                               double alpha);

/// Kenig-Stein form: double integral of f1(y1) f2(y2)
/// (|x-y1|+|x-y2|)^{alpha-2n}, 0 < alpha < 2n.
GridFunction bilinear_ks(const GridFunction& f1, const GridFunction& f2,
                         double alpha);

/// Scale-by-scale majorant of J_alpha:
///   sum_l 2^{l(n-alpha)} chi_Q(x) int_{B(2^{-l})} f1(x+y) f2(x-y) dy
/// over l in [-extent-2, gen] plus the closed-form geometric tail of the
/// sub-cell scales l > gen (the window integrand is constant there).
GridFunction dyadic_majorant(const GridFunction& f1, const GridFunction& f2,
                             double alpha);

/// sum over dyadic cubes Q (generations [-extent-2, gen]) through x of
/// l(Q)^{alpha-2n} (int_{3Q} f1)(int_{3Q} f2); inner integrals by prefix sums.
GridFunction surrogate_sigma(const GridFunction& f1, const GridFunction& f2,
                             double alpha);

/// Window integral field W_l(x) = int_{B(2^{-l})} f1(x+y) f2(x-y) dy
/// at cell anchors; requires l <= gen.
GridFunction pair_window_integral(const GridFunction& f1, const GridFunction& f2,
                                  int l);

struct LocalAverage {
  double lhs;  // || int_{B(2^{-l})} f1(.+y) f2(.-y) dy ||_{L^v(Q)}
  double rhs;  // |B(2^{-l})|^{1+1/v} inf_Q M^{(v)}f1 inf_Q M^{(v)}f2
};

/// Both sides of the averaging estimate over a cube Q of generation l.
LocalAverage local_average(const GridFunction& f1, const GridFunction& f2,
                           int l, double v, const DyadicCube& q_cube);

}  // namespace morrey
