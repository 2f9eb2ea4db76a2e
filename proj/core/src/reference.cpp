#include "wcurve/reference.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace wcurve {

#ifndef WCURVE_DATA_DIR
#define WCURVE_DATA_DIR "data"
#endif

std::string default_data_dir() {
  if (const char* env = std::getenv("WCURVE_DATA_DIR")) return env;
  return WCURVE_DATA_DIR;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  return out;
}

std::ifstream open_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open reference file: " + path);
  return in;
}

}  // namespace

std::vector<ReferenceRowB> load_table_b(const std::string& path) {
  std::ifstream in = open_csv(path);
  std::vector<ReferenceRowB> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split(line, ',');
    if (f.size() != 7 && f.size() != 8)
      throw domain_error("malformed row in " + path + ": " + line);
    ReferenceRowB r;
    r.D = std::stoll(f[0]);
    r.spin = std::stoi(f[1]);
    r.genus = std::stoll(f[2]);
    r.e2 = std::stoll(f[3]);
    r.cusps = std::stoll(f[4]);
    r.chi = Rational(Integer(f[5]), Integer(f[6]));
    if (f.size() == 8) r.flags = f[7];
    rows.push_back(r);
  }
  return rows;
}

std::vector<ReferenceRowC> load_table_c(const std::string& path) {
  std::ifstream in = open_csv(path);
  std::vector<ReferenceRowC> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split(line, ',');
    if (f.size() != 2)
      throw domain_error("malformed row in " + path + ": " + line);
    ReferenceRowC r;
    r.D = std::stoll(f[0]);
    for (const auto& c : split(f[1], ' '))
      if (!c.empty()) r.coeffs.push_back(Integer(c));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace wcurve
