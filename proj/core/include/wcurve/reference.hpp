#pragma once

#include <string>
#include <vector>

#include "wcurve/numeric.hpp"

namespace wcurve {

/// One reference row of topological invariants.  spin is -1 for a row
/// covering the whole curve, 0 or 1 for one spin component.
struct ReferenceRowB {
  std::int64_t D = 0;
  int spin = -1;
  std::int64_t genus = 0;
  std::int64_t e2 = 0;
  std::int64_t cusps = 0;
  Rational chi;
  /// "ref_only" when genus and cusps are not recomputable (square D).
  std::string flags;
};

/// One reference polynomial row: expanded integer coefficients of the
/// primitive form of f_D, ascending order.
struct ReferenceRowC {
  std::int64_t D = 0;
  std::vector<Integer> coeffs;
};

/// Directory holding the reference CSV files.  The WCURVE_DATA_DIR
/// environment variable overrides the compiled-in default.
std::string default_data_dir();

std::vector<ReferenceRowB> load_table_b(const std::string& path);
std::vector<ReferenceRowC> load_table_c(const std::string& path);

}  // namespace wcurve
