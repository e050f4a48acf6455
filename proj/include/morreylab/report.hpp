// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace morrey {

/// Parameter provenance of one check; absent fields are omitted from JSON
/// and left empty in CSV.
struct CheckParams {
  std::optional<double> alpha, p1, q1, p2, q2, s, t, u, v, scale;
};

/// Outcome of one inequality check.  For assertion checks
/// pass <=> ratio <= constant (tolerances are folded into the constant);
/// report-only lines carry constant 0 and pass true.
struct CheckReport {
  std::string check;
  CheckParams params;
  double ratio = 0.0;
  double constant = 0.0;
  bool pass = false;
  int extent = 0;
  int gen = 0;
  std::uint64_t seed = 0;
};

/// Shortest round-trip decimal form of a double (deterministic).
std::string format_double(double v);

/// One JSON object per line: {check, params, ratio, constant, pass, extent, gen, seed}.
std::string to_json_line(const CheckReport& r);

/// Fixed CSV header: check,alpha,p1,q1,p2,q2,s,t,E,G,seed,ratio,constant,pass
std::string csv_header();
std::string to_csv_line(const CheckReport& r);

}  // namespace morrey
