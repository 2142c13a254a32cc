#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace framechoice {

using Rational = boost::multiprecision::mpq_rational;

enum class NumericMode { kFloat, kRational };

std::string_view to_string(NumericMode mode);
NumericMode parse_numeric_mode(std::string_view text);

struct NumericPolicy {
  NumericMode mode = NumericMode::kFloat;
  // Absolute tolerance used for sum and sign checks in float mode only.
  double epsilon = 1e-9;
};

// Scalar traits for the two numeric modes. Every analysis routine is a
// template over T in {double, Rational}.
template <class T>
struct Num;

template <>
struct Num<double> {
  static constexpr bool kExact = false;
  static constexpr NumericMode kMode = NumericMode::kFloat;

  // Accepts decimals, scientific notation and "p/q" fractions.
  static double parse(std::string_view text);
  // Shortest text that parses back to the same double.
  static std::string format(double x);
  static double to_double(double x) { return x; }
  static double from_double(double x) { return x; }
};

template <>
struct Num<Rational> {
  static constexpr bool kExact = true;
  static constexpr NumericMode kMode = NumericMode::kRational;

  // Exact: "0.45" -> 9/20, "1.5e-3" -> 3/2000, "1/3" -> 1/3.
  static Rational parse(std::string_view text);
  static std::string format(const Rational& x);
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  // Exact binary expansion of the double.
  static Rational from_double(double x) { return Rational(x); }
};

// Sign tests honoring the numeric mode: exact comparisons for Rational,
// tolerance band [-tol, tol] for double.
template <class T>
bool is_negative(const T& x, double tol) {
  if constexpr (Num<T>::kExact) {
    return x < 0;
  } else {
    return x < -tol;
  }
}

template <class T>
bool is_zero(const T& x, double tol) {
  if constexpr (Num<T>::kExact) {
    return x == 0;
  } else {
    return std::abs(x) <= tol;
  }
}

template <class T>
bool approx_equal(const T& a, const T& b, double tol) {
  if constexpr (Num<T>::kExact) {
    return a == b;
  } else {
    return std::abs(a - b) <= tol;
  }
}

template <class T>
T abs_value(const T& x) {
  return x < 0 ? T(-x) : x;
}

}  // namespace framechoice
