#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "framechoice/frum.hpp"
#include "framechoice/parse.hpp"
#include "framechoice/polys.hpp"

namespace framechoice::testing {

inline std::string data_path(const std::string& name) { return std::string(FRAMECHOICE_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class T>
StochasticChoiceData<T> load_data(const std::string& name, double eps = 1e-9) {
  return parse_stochastic<T>(slurp(data_path(name)), eps);
}

template <class T>
T num(const char* text) {
  return Num<T>::parse(text);
}

// The two-alternative family with rho(a,.) = (lambda, 0.7, 0.1, gamma) over
// {a,b}, {a}, {b}, {}.
template <class T>
StochasticChoiceData<T> two_alt(const T& lambda, const T& gamma) {
  const Universe u({"a", "b"});
  const T one(1);
  std::vector<std::pair<Frame, std::vector<T>>> rows = {
      {Frame(0), {gamma, T(one - gamma)}},
      {Frame(1), {num<T>("0.7"), num<T>("0.3")}},
      {Frame(2), {num<T>("0.1"), num<T>("0.9")}},
      {Frame(3), {lambda, T(one - lambda)}},
  };
  return StochasticChoiceData<T>(u, std::move(rows));
}

// Straight from the definition: sum over supersets with a's membership
// fixed, O(4^n).
template <class T>
T naive_bm(const StochasticChoiceData<T>& data, Alternative a, Frame f) {
  const std::uint32_t count = data.universe().frame_count();
  T total = 0;
  for (std::uint32_t b = 0; b < count; ++b) {
    const Frame big(b);
    if (!f.subset_of(big) || big.contains(a) != f.contains(a)) continue;
    if ((big - f).size() % 2 == 0) {
      total += data.prob(a, big);
    } else {
      total -= data.prob(a, big);
    }
  }
  return total;
}

// Canonical mapping from type to weight, for comparisons.
template <class T>
std::map<ChoiceType, T> as_map(const TypeDistribution<T>& mu) {
  std::map<ChoiceType, T> out;
  for (const auto& e : mu.entries) out[e.type] += e.weight;
  return out;
}

template <class T>
double max_row_gap(const StochasticChoiceData<T>& a, const StochasticChoiceData<T>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.frames().size(); ++i) {
    const auto ra = a.row_at(i);
    const auto rb = b.row(a.frames()[i]);
    for (std::size_t x = 0; x < ra.size(); ++x) {
      worst = std::max(worst, std::abs(Num<T>::to_double(ra[x]) - Num<T>::to_double(rb[x])));
    }
  }
  return worst;
}

}  // namespace framechoice::testing
