#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wcurve/cusps.hpp"
#include "wcurve/eulerchar.hpp"
#include "wcurve/prototypes.hpp"
#include "wcurve/reference.hpp"

namespace wcurve {

/// Homeomorphism-type data of one component of W_D.  genus and cusps
/// are absent for square D, where only reference data supplies them.
struct ComponentInvariants {
  std::int64_t D = 0;
  int spin = -1;  // -1 when the curve is connected
  std::optional<std::int64_t> genus;
  std::int64_t e2 = 0, e4 = 0, e5 = 0;
  std::optional<std::int64_t> cusps;
  Rational chi;
};

/// One or two components, spin 0 before spin 1.
std::vector<ComponentInvariants> compute_invariants(const Discriminant& D);

/// All components of genus zero with discriminant <= D_max.  Square-D
/// genus comes from the reference table; square components beyond it
/// are skipped (their genus is not computable here).
std::vector<std::pair<std::int64_t, int>> genus_zero_components(
    std::int64_t D_max, const std::vector<ReferenceRowB>& reference);

struct BoundCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Evaluates every applicable inequality for D:
/// e2 <= D/2; h0(P_D) <= D^{3/4}+150 and |chi(X_D)| > D^{3/2}/300 for
/// non-square D; the effective genus lower bound where genus is known.
std::vector<BoundCheck> check_bounds(const Discriminant& D);

struct VerifyReport {
  std::size_t b_rows = 0;
  std::size_t c_rows = 0;
  std::size_t ref_only_cells = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Recomputes every computable cell of the bundled tables and diffs.
VerifyReport verify_reference_tables(const std::string& data_dir,
                                     unsigned precision_bits = 256);

}  // namespace wcurve
