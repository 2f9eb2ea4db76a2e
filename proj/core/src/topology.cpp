#include "wcurve/topology.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "wcurve/modular.hpp"

namespace wcurve {

namespace {

std::int64_t solve_genus(std::int64_t D, std::int64_t C, std::int64_t e2,
                         std::int64_t e4, std::int64_t e5, const Rational& chi) {
  // chi = 2 - 2g - C - e2/2 - (3/4) e4 - (4/5) e5, solved for g.
  Rational twice_g = Rational(2 - C) - Rational(e2, 2) - Rational(3 * e4, 4) -
                     Rational(4 * e5, 5) - chi;
  if (denominator(twice_g) != 1 || numerator(twice_g) < 0 || numerator(twice_g) % 2 != 0)
    throw internal_error("solve_genus: 2g = " + to_string(twice_g) +
                         " is not a non-negative even integer at D=" + std::to_string(D));
  return static_cast<std::int64_t>(numerator(twice_g) / 2);
}

}  // namespace

std::vector<ComponentInvariants> compute_invariants(const Discriminant& D) {
  if (D.value < 5 || !is_valid_discriminant(D.value))
    throw domain_error("compute_invariants: D must be >= 5 and = 0,1 mod 4");
  OrbifoldSignature sig = orbifold_signature(D);
  ChiRecord chi = chi_record(D);
  bool split = ((D.value % 8) + 8) % 8 == 1 && D.value > 9;
  std::vector<ComponentInvariants> out;
  if (!split) {
    ComponentInvariants c;
    c.D = D.value;
    c.e2 = sig.e2;
    c.e4 = sig.e4;
    c.e5 = sig.e5;
    c.chi = chi.chi_WD;
    if (!D.is_square) {
      c.cusps = cusp_count_wd(D);
      c.genus = solve_genus(c.D, *c.cusps, c.e2, c.e4, c.e5, c.chi);
    }
    out.push_back(c);
    return out;
  }
  auto [chi0, chi1] = chi.components.value();
  auto [e20, e21] = e2_by_spin(D);
  std::array<ComponentInvariants, 2> comps;
  comps[0].spin = 0;
  comps[1].spin = 1;
  comps[0].e2 = e20;
  comps[1].e2 = e21;
  comps[0].chi = chi0;
  comps[1].chi = chi1;
  for (auto& c : comps) c.D = D.value;
  if (!D.is_square) {
    auto [c0, c1] = cusp_split(D);
    comps[0].cusps = c0;
    comps[1].cusps = c1;
    for (auto& c : comps)
      c.genus = solve_genus(c.D, *c.cusps, c.e2, c.e4, c.e5, c.chi);
  }
  out.push_back(comps[0]);
  out.push_back(comps[1]);
  return out;
}

std::vector<std::pair<std::int64_t, int>> genus_zero_components(
    std::int64_t D_max, const std::vector<ReferenceRowB>& reference) {
  if (D_max < 121) throw domain_error("genus_zero_components: D_max must be >= 121");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 5; d <= D_max; ++d) {
    if (!is_valid_discriminant(d)) continue;
    Discriminant D = discriminant_split(d);
    for (const auto& c : compute_invariants(D)) {
      std::optional<std::int64_t> genus = c.genus;
      if (!genus) {
        for (const auto& r : reference)
          if (r.D == c.D && r.spin == c.spin) { genus = r.genus; break; }
      }
      if (genus && *genus == 0) out.emplace_back(c.D, c.spin);
    }
  }
  return out;
}

std::vector<BoundCheck> check_bounds(const Discriminant& D) {
  std::vector<BoundCheck> checks;
  auto comps = compute_invariants(D);
  double d = static_cast<double>(D.value);

  std::int64_t e2_total = 0;
  for (const auto& c : comps) e2_total += c.e2;
  checks.push_back({"e2 <= D/2", 2 * e2_total <= D.value,
                    "e2=" + std::to_string(e2_total)});

  if (!D.is_square) {
    std::int64_t h0 = static_cast<std::int64_t>(pd_components(D).size());
    checks.push_back({"h0(P_D) <= D^{3/4}+150",
                      static_cast<double>(h0) <= std::pow(d, 0.75) + 150.0,
                      "h0=" + std::to_string(h0)});
    Rational chi_x = chi_XD(D);
    // |chi|^2 > D^3 / 300^2, compared exactly.
    Rational lhs = chi_x * chi_x;
    Rational rhs = Rational(Integer(D.value) * D.value * D.value, 90000);
    checks.push_back({"|chi(X_D)| > D^{3/2}/300", lhs > rhs,
                      "chi(X_D)=" + to_string(chi_x)});
  }

  for (const auto& c : comps) {
    if (!c.genus) continue;
    double bound = D.is_square
                       ? std::pow(d, 1.5) / 240 - 0.7 * d - std::pow(d, 0.75) / 2 - 75
                       : std::pow(d, 1.5) / 600 - d / 16 - std::pow(d, 0.75) / 2 - 75;
    std::string name = "genus lower bound";
    if (c.spin >= 0) name += " (spin " + std::to_string(c.spin) + ")";
    checks.push_back({name, static_cast<double>(*c.genus) >= bound - 1e-9,
                      "genus=" + std::to_string(*c.genus)});
  }
  return checks;
}

VerifyReport verify_reference_tables(const std::string& data_dir,
                                     unsigned precision_bits) {
  VerifyReport rep;
  auto rows_b = load_table_b(data_dir + "/table_b.csv");
  auto rows_c = load_table_c(data_dir + "/table_c.csv");

  std::map<std::int64_t, std::vector<ComponentInvariants>> cache;
  for (const auto& r : rows_b) {
    ++rep.b_rows;
    auto it = cache.find(r.D);
    if (it == cache.end())
      it = cache.emplace(r.D, compute_invariants(discriminant_split(r.D))).first;
    const ComponentInvariants* comp = nullptr;
    for (const auto& c : it->second)
      if (c.spin == r.spin) comp = &c;
    auto tag = [&](const std::string& col) {
      return "table_b D=" + std::to_string(r.D) + " spin=" + std::to_string(r.spin) +
             " " + col;
    };
    if (!comp) {
      rep.mismatches.push_back(tag("component") + ": no computed component");
      continue;
    }
    if (comp->e2 != r.e2)
      rep.mismatches.push_back(tag("e2") + ": computed " + std::to_string(comp->e2) +
                               " expected " + std::to_string(r.e2));
    if (comp->chi != r.chi)
      rep.mismatches.push_back(tag("chi") + ": computed " + to_string(comp->chi) +
                               " expected " + to_string(r.chi));
    if (comp->genus) {
      if (*comp->genus != r.genus)
        rep.mismatches.push_back(tag("genus") + ": computed " +
                                 std::to_string(*comp->genus) + " expected " +
                                 std::to_string(r.genus));
    } else {
      ++rep.ref_only_cells;
    }
    if (comp->cusps) {
      if (*comp->cusps != r.cusps)
        rep.mismatches.push_back(tag("cusps") + ": computed " +
                                 std::to_string(*comp->cusps) + " expected " +
                                 std::to_string(r.cusps));
    } else {
      ++rep.ref_only_cells;
    }
  }

  BigComplexCtx ctx(precision_bits);
  for (const auto& r : rows_c) {
    ++rep.c_rows;
    FDPolynomial fd = fd_polynomial(discriminant_split(r.D), ctx);
    if (fd.primitive != r.coeffs)
      rep.mismatches.push_back("table_c D=" + std::to_string(r.D) +
                               ": computed " + poly_to_string(fd.primitive) +
                               " expected " + poly_to_string(r.coeffs));
  }
  return rep;
}

}  // namespace wcurve
