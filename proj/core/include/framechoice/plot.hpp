#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "framechoice/choice_data.hpp"

namespace framechoice {

using Barycentric = std::array<double, 3>;

struct SimplexPoint {
  std::string label;
  Barycentric bary{};
};

struct SimplexRegion {
  std::string label;
  Frame target;
  std::vector<Barycentric> vertices;  // counter-clockwise in (x, y) coordinates
  // Whether the observed rho(., target) lies in the region (when observed).
  std::optional<bool> contains_observed;
};

struct SimplexPlotData {
  std::vector<std::string> axes;  // labels of the three plotted alternatives
  std::vector<SimplexPoint> points;
  std::vector<SimplexRegion> regions;
};

// Exact convex polygon in the (rho(x0,.), rho(x1,.)) plane.
template <class T>
struct Polygon {
  std::vector<std::array<T, 2>> vertices;  // counter-clockwise, no collinear points
  bool contains(const std::array<T, 2>& p, double tol = 0.0) const;
};

// Set of rho(., target) compatible with a FRUM representation of the observed
// frames with 1 <= |F| <= 2 (target excluded). Requires n == 3. Empty when
// those observations are themselves infeasible.
template <class T>
std::optional<Polygon<T>> frum_region(const StochasticChoiceData<T>& data, Frame target);

// Points for every observed frame; regions for X and {} when n == 3 and every
// frame with |F| <= 2 is observed. For n != 3 pass `projection` (three
// alternatives): points are renormalized onto them and no regions are built.
template <class T>
SimplexPlotData plot_simplex(const StochasticChoiceData<T>& data,
                             std::optional<std::array<Alternative, 3>> projection = std::nullopt);

extern template struct Polygon<double>;
extern template struct Polygon<Rational>;
extern template std::optional<Polygon<double>> frum_region(const StochasticChoiceData<double>&, Frame);
extern template std::optional<Polygon<Rational>> frum_region(const StochasticChoiceData<Rational>&, Frame);
extern template SimplexPlotData plot_simplex(const StochasticChoiceData<double>&,
                                             std::optional<std::array<Alternative, 3>>);
extern template SimplexPlotData plot_simplex(const StochasticChoiceData<Rational>&,
                                             std::optional<std::array<Alternative, 3>>);

}  // namespace framechoice
