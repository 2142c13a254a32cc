#include "framechoice/numeric.hpp"

#include <charconv>
#include <string>
#include <system_error>

#include "framechoice/errors.hpp"

namespace framechoice {
namespace {

using boost::multiprecision::mpz_int;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw DataError("malformed number '" + std::string(text) + "'");
}

// Decimal with optional sign, fraction and exponent, converted exactly.
Rational parse_decimal(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_number(text);
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long long scale = 0;  // value = digits * 10^(-scale)
  bool seen_point = false;
  bool any_digit = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      any_digit = true;
      if (seen_point) ++scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) bad_number(text);
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') bad_number(text);
    std::string_view exp = s.substr(i + 1);
    if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
    long long e = 0;
    auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), e);
    if (ec != std::errc() || ptr != exp.data() + exp.size() || exp.empty()) bad_number(text);
    if (e > 4000 || e < -4000) bad_number(text);
    scale -= e;
  }
  // mpz parsing treats a leading zero as an octal prefix.
  const auto first = digits.find_first_not_of('0');
  mpz_int num(first == std::string::npos ? std::string("0") : digits.substr(first));
  mpz_int den(1);
  if (scale > 0) {
    den = boost::multiprecision::pow(mpz_int(10), static_cast<unsigned>(scale));
  } else if (scale < 0) {
    num *= boost::multiprecision::pow(mpz_int(10), static_cast<unsigned>(-scale));
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

}  // namespace

std::string_view to_string(NumericMode mode) {
  return mode == NumericMode::kFloat ? "float" : "rational";
}

NumericMode parse_numeric_mode(std::string_view text) {
  if (text == "float") return NumericMode::kFloat;
  if (text == "rational") return NumericMode::kRational;
  throw DataError("unknown numeric mode '" + std::string(text) + "'");
}

double Num<double>::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const double den = parse(s.substr(slash + 1));
    if (den == 0.0) bad_number(text);
    return parse(s.substr(0, slash)) / den;
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) bad_number(text);
  return value;
}

std::string Num<double>::format(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return std::to_string(x);
  return std::string(buf, ptr);
}

Rational Num<Rational>::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Rational den = parse_decimal(s.substr(slash + 1));
    if (den == 0) bad_number(text);
    return parse_decimal(s.substr(0, slash)) / den;
  }
  return parse_decimal(s);
}

std::string Num<Rational>::format(const Rational& x) { return x.str(); }

}  // namespace framechoice
