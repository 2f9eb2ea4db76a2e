#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wcurve {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an argument is outside an operation's domain (bad
/// discriminant residue, non-positive n, ...).  The CLI maps this to
/// exit code 1.
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when two routes that must agree disagree (closed form vs.
/// enumeration, non-integral genus, ...).  The CLI maps this to exit
/// code 2; it firing means a bug, not bad input.
class internal_error : public std::runtime_error {
public:
  explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace wcurve
