// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "morreylab/errors.hpp"

namespace morrey {

/// Holder conjugate z' = z/(z-1); +inf for z <= 1.
double holder_conjugate(double z);

/// Input Morrey exponents and everything derived from them:
///   1/p = 1/p1 + 1/p2,  1/q = 1/q1 + 1/q2,
///   1/s = 1/p - alpha/n (when positive),  t = s q/p,
///   v = midpoint of (s, min(q1, q2)) when admissible.
struct ExponentTuple {
  int dim = 1;
  double alpha = 0.0;
  double p1 = 0.0, q1 = 0.0, p2 = 0.0, q2 = 0.0;
  double p = 0.0, q = 0.0;
  std::optional<double> s, t, v;
  bool admissible = false;
  std::string reason;  // first violated hypothesis when not admissible

  double min_q() const { return q1 < q2 ? q1 : q2; }
};

/// Fills the derived exponents and the admissibility verdict for the main
/// boundedness hypothesis (0 < alpha < n, 1 < q_i <= p_i < inf, finite s,
/// 1 <= t <= s < min(q1, q2)).  Nonpositive inputs throw; everything else
/// is reported, not fatal.
ExponentTuple derive_exponents(int dim, double alpha, double p1, double q1,
                               double p2, double q2);

/// The alternative-route condition
///   q1/p1 = q2/p2  and  1/max(q1', (a/n) p1) + 1/max(q2', (a/n) p2) > 1,
/// with a witness u strictly inside both open intervals when it holds, and
/// the exponents s1, s2, t1, t2 derived from u.
struct HeYanReport {
  bool ratios_equal = false;
  bool condition_holds = false;
  std::optional<double> u, s1, s2, t1, t2;
};

HeYanReport check_heyan(const ExponentTuple& tuple);

/// Lebesgue-scale admissibility: s with 1/s = 1/p1 + 1/p2 - alpha/n when
/// that is positive; nullopt otherwise.  Requires 1 < p_i < inf, 0 < alpha < n.
std::optional<double> check_kenig_stein(int dim, double alpha, double p1,
                                        double p2);

}  // namespace morrey
