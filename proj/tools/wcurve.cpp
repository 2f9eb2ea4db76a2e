#include <atomic>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wcurve/classnum.hpp"
#include "wcurve/modular.hpp"
#include "wcurve/topology.hpp"

using nlohmann::json;
using namespace wcurve;

namespace {

json component_json(const ComponentInvariants& c) {
  json j;
  j["D"] = c.D;
  if (c.spin >= 0)
    j["spin"] = c.spin;
  else
    j["spin"] = nullptr;
  if (c.genus)
    j["genus"] = *c.genus;
  else
    j["genus"] = nullptr;
  j["e2"] = c.e2;
  j["e4"] = c.e4;
  j["e5"] = c.e5;
  if (c.cusps)
    j["cusps"] = *c.cusps;
  else
    j["cusps"] = nullptr;
  j["chi"] = to_string(c.chi);
  j["flags"] = (c.genus && c.cusps) ? "" : "ref_only";
  return j;
}

std::string csv_row(const ComponentInvariants& c) {
  std::string row = std::to_string(c.D) + "," + std::to_string(c.spin) + ",";
  row += c.genus ? std::to_string(*c.genus) : "";
  row += "," + std::to_string(c.e2) + "," + std::to_string(c.e4) + "," +
         std::to_string(c.e5) + ",";
  row += c.cusps ? std::to_string(*c.cusps) : "";
  row += "," + numerator(c.chi).str() + "," + denominator(c.chi).str() + ",";
  row += (c.genus && c.cusps) ? "" : "ref_only";
  return row;
}

int run_invariants(std::int64_t d) {
  auto comps = compute_invariants(discriminant_split(d));
  json j;
  j["command"] = "invariants";
  j["components"] = json::array();
  for (const auto& c : comps) j["components"].push_back(component_json(c));
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_table(std::int64_t from, std::int64_t to, const std::string& format,
              unsigned jobs) {
  std::vector<std::int64_t> ds;
  for (std::int64_t d = std::max<std::int64_t>(from, 5); d <= to; ++d)
    if (is_valid_discriminant(d)) ds.push_back(d);
  std::vector<std::vector<ComponentInvariants>> results(ds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ds.size(); i = next++)
      results[i] = compute_invariants(discriminant_split(ds[i]));
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (format == "csv") {
    std::cout << "D,spin,genus,e2,e4,e5,cusps,chi_num,chi_den,flags\n";
    for (const auto& comps : results)
      for (const auto& c : comps) std::cout << csv_row(c) << "\n";
  } else {
    json j = json::array();
    for (const auto& comps : results)
      for (const auto& c : comps) j.push_back(component_json(c));
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_prototypes(std::int64_t d) {
  Discriminant D = discriminant_split(d);
  auto all = enumerate_prototypes_all(D);
  auto proper = enumerate_prototypes(D);
  bool spin_defined = ((d % 8) + 8) % 8 == 1 && d >= 9;
  json j;
  j["command"] = "prototypes";
  j["D"] = d;
  j["count_all"] = all.size();
  j["count_proper"] = proper.size();
  j["proper"] = json::array();
  for (const auto& p : proper) {
    json e = {{"e", p.e}, {"c", p.c}, {"b", p.b}};
    if (spin_defined) e["spin"] = spin_of_prototype(p);
    j["proper"].push_back(e);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_fd(std::int64_t d, unsigned precision, const std::string& form, bool as_json) {
  BigComplexCtx ctx(precision);
  FDPolynomial fd = fd_polynomial(discriminant_split(d), ctx);
  const RationalPoly* poly = &fd.label;
  if (form == "defining") poly = &fd.defining;
  if (form == "radical") poly = &fd.radical;
  if (form == "primitive") {
    if (as_json) {
      json j;
      j["command"] = "fd";
      j["D"] = d;
      j["form"] = form;
      j["coefficients"] = json::array();
      for (const auto& c : fd.primitive)
        j["coefficients"].push_back(c.str());
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << poly_to_string(fd.primitive) << "\n";
    }
    return 0;
  }
  if (as_json) {
    json j;
    j["command"] = "fd";
    j["D"] = d;
    j["form"] = form;
    j["coefficients"] = json::array();
    for (const auto& c : poly->coeffs) {
      json e;
      e["num"] = numerator(c).str();
      e["den"] = denominator(c).str();
      j["coefficients"].push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << poly_to_string(*poly) << "\n";
  }
  return 0;
}

int run_chi(std::int64_t d) {
  Discriminant D = discriminant_split(d);
  ChiRecord r = chi_record(D);
  json j;
  j["command"] = "chi";
  j["D"] = d;
  j["chi_WD"] = to_string(r.chi_WD);
  j["chi_SD"] = to_string(r.chi_SD);
  if (!D.is_square) {
    j["chi_XD"] = to_string(r.chi_XD);
    j["chi_PD"] = to_string(r.chi_PD);
  }
  if (r.components) {
    j["chi_W0"] = to_string(r.components->first);
    j["chi_W1"] = to_string(r.components->second);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_cusps(std::int64_t d) {
  Discriminant D = discriminant_split(d);
  json j;
  j["command"] = "cusps";
  j["D"] = d;
  if (D.is_square) {
    std::int64_t f = D.conductor;
    j["one_cylinder"] = one_cylinder_count(f);
    if (f % 2 == 1 && f >= 3)
      j["two_cylinder_spin_difference"] = two_cyl_spin_difference(f);
    j["note"] = "total cusp count for square D comes from reference data";
  } else {
    j["total"] = cusp_count_wd(D);
    if (((d % 8) + 8) % 8 == 1 && d > 9) {
      auto [c0, c1] = cusp_split(D);
      j["split"] = {c0, c1};
    }
    j["components"] = json::array();
    for (const auto& comp : pd_components(D)) {
      json e = {{"e", comp.e}, {"l", comp.l}, {"m", comp.m}};
      e["cusps"] = comp.e == 0 ? fricke_orbits(comp.m) : y0_cusp_count(comp.m);
      j["components"].push_back(e);
    }
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_classnumber(std::int64_t c) {
  json j;
  j["command"] = "classnumber";
  j["discriminant"] = c;
  j["h"] = class_number(c);
  j["h_weighted"] = to_string(weighted_class_number(c));
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_genus_zero(std::int64_t max, const std::string& data_dir) {
  auto reference = load_table_b(data_dir + "/table_b.csv");
  auto comps = genus_zero_components(max, reference);
  json j;
  j["command"] = "genus-zero";
  j["max"] = max;
  j["count"] = comps.size();
  j["components"] = json::array();
  for (const auto& [d, spin] : comps) {
    json e;
    e["D"] = d;
    if (spin >= 0)
      e["spin"] = spin;
    else
      e["spin"] = nullptr;
    j["components"].push_back(e);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& data_dir, unsigned precision) {
  VerifyReport rep = verify_reference_tables(data_dir, precision);
  if (rep.ok()) {
    std::cout << "OK: " << rep.b_rows << " rows, " << rep.c_rows
              << " polynomials (" << rep.ref_only_cells
              << " reference-only cells echoed)\n";
    return 0;
  }
  for (const auto& m : rep.mismatches) std::cout << "MISMATCH " << m << "\n";
  return 2;
}

int run_bounds(std::int64_t d) {
  auto checks = check_bounds(discriminant_split(d));
  json j;
  j["command"] = "bounds";
  j["D"] = d;
  j["checks"] = json::array();
  bool all_hold = true;
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    all_hold = all_hold && c.holds;
  }
  std::cout << j.dump(2) << "\n";
  return all_hold ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological invariants and algebraic models of Weierstrass curves"};
  app.require_subcommand(1);

  std::int64_t d = 0;
  std::int64_t from = 5, to = 225, max = 1000;
  unsigned precision = 256;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "csv", form = "label", tables = default_data_dir();
  bool as_json = false;

  auto* inv = app.add_subcommand("invariants", "Invariants of the components of W_D");
  inv->add_option("D", d, "discriminant")->required();

  auto* table = app.add_subcommand("table", "Sweep a discriminant range");
  table->add_option("--from", from, "first discriminant");
  table->add_option("--to", to, "last discriminant");
  table->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--jobs", jobs, "worker threads");

  auto* protos = app.add_subcommand("prototypes", "Pinwheel prototypes of D");
  protos->add_option("D", d, "discriminant")->required();

  auto* fd = app.add_subcommand("fd", "Polynomial f_D of the algebraic model");
  fd->add_option("D", d, "discriminant")->required();
  fd->add_option("--precision", precision, "working precision in bits");
  fd->add_option("--form", form, "label (default), defining, radical or primitive")
      ->check(CLI::IsMember({"label", "defining", "radical", "primitive"}));
  fd->add_flag("--json", as_json, "JSON output with exact coefficients");

  auto* chi = app.add_subcommand("chi", "Euler characteristics attached to D");
  chi->add_option("D", d, "discriminant")->required();

  auto* cusps = app.add_subcommand("cusps", "Cusp counts of W_D");
  cusps->add_option("D", d, "discriminant")->required();

  auto* cn = app.add_subcommand("classnumber", "Class number of a negative discriminant");
  cn->add_option("C", d, "negative discriminant")->required();

  auto* gz = app.add_subcommand("genus-zero", "All genus-zero components up to a bound");
  gz->add_option("--max", max, "largest discriminant");

  auto* verify = app.add_subcommand("verify", "Regress against the bundled tables");
  verify->add_option("--tables", tables, "directory with table_b.csv and table_c.csv");
  verify->add_option("--precision", precision, "working precision in bits");

  auto* bounds = app.add_subcommand("bounds", "Check the effective inequalities at D");
  bounds->add_option("D", d, "discriminant")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return run_invariants(d);
    if (table->parsed()) return run_table(from, to, format, std::max(1u, jobs));
    if (protos->parsed()) return run_prototypes(d);
    if (fd->parsed()) return run_fd(d, precision, form, as_json);
    if (chi->parsed()) return run_chi(d);
    if (cusps->parsed()) return run_cusps(d);
    if (cn->parsed()) return run_classnumber(d);
    if (gz->parsed()) return run_genus_zero(max, tables);
    if (verify->parsed()) return run_verify(tables, precision);
    if (bounds->parsed()) return run_bounds(d);
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what()
              << " (valid discriminants are D >= 5 with D = 0,1 mod 4)\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
