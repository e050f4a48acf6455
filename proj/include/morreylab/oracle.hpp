// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "morreylab/grid.hpp"

namespace morrey {

// Brute-force reference evaluators.  Each one re-derives the integral from
// cell coordinates with direct nested loops and point lookups: no kernel
// index shifting, no prefix sums, no separability, no ring reuse.  They
// share only the closed-form antiderivatives of the kernels with the
// production path.  Guarded to gen <= 7 against runaway cost.

GridFunction oracle_frac_integral(const GridFunction& f, double alpha);
GridFunction oracle_bilinear_grafakos(const GridFunction& f1,
                                      const GridFunction& f2, double alpha);
GridFunction oracle_bilinear_ks(const GridFunction& f1, const GridFunction& f2,
                                double alpha);
GridFunction oracle_majorant(const GridFunction& f1, const GridFunction& f2,
                             double alpha);
GridFunction oracle_sigma(const GridFunction& f1, const GridFunction& f2,
                          double alpha);
GridFunction oracle_hl_maximal(const GridFunction& f);
GridFunction oracle_powered_maximal(const GridFunction& f, double eta);

}  // namespace morrey
