#include "framechoice/plot.hpp"

#include <algorithm>

#include "framechoice/detfum.hpp"
#include "framechoice/errors.hpp"
#include "framechoice/lp.hpp"

namespace framechoice {

namespace {

template <class T>
using Point = std::array<T, 2>;

template <class T>
T cross(const Point<T>& o, const Point<T>& a, const Point<T>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

template <class T>
bool above(const T& x, double tol) {
  if constexpr (Num<T>::kExact) {
    return x > 0;
  } else {
    return x > tol;
  }
}

// Andrew's monotone chain; drops collinear points, returns CCW order.
template <class T>
std::vector<Point<T>> hull(std::vector<Point<T>> pts, double tol) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [tol](const Point<T>& a, const Point<T>& b) {
                          return approx_equal(a[0], b[0], tol) && approx_equal(a[1], b[1], tol);
                        }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point<T>> out(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && !above(cross(out[k - 2], out[k - 1], pts[i]), tol)) --k;
    out[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i > 0; --i) {
    while (k >= lower && !above(cross(out[k - 2], out[k - 1], pts[i - 1]), tol)) --k;
    out[k++] = pts[i - 1];
  }
  out.resize(k - 1);
  // Near-equal x coordinates can leave a collinear vertex behind in float mode.
  for (std::size_t i = 0; out.size() >= 3 && i < out.size();) {
    const auto& prev = out[(i + out.size() - 1) % out.size()];
    const auto& next = out[(i + 1) % out.size()];
    if (above(cross(prev, out[i], next), tol)) {
      ++i;
    } else {
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
      i = 0;
    }
  }
  return out;
}

}  // namespace

template <class T>
bool Polygon<T>::contains(const std::array<T, 2>& p, double tol) const {
  const auto& v = vertices;
  if (v.empty()) return false;
  if (v.size() == 1) return approx_equal(v[0][0], p[0], tol) && approx_equal(v[0][1], p[1], tol);
  if (v.size() == 2) {
    if (!approx_equal(cross(v[0], v[1], p), T(0), tol)) return false;
    for (int c = 0; c < 2; ++c) {
      const T lo = std::min(v[0][c], v[1][c]);
      const T hi = std::max(v[0][c], v[1][c]);
      if (is_negative(T(p[c] - lo), tol) || is_negative(T(hi - p[c]), tol)) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_negative(cross(v[i], v[(i + 1) % v.size()], p), tol)) return false;
  }
  return true;
}

template <class T>
std::optional<Polygon<T>> frum_region(const StochasticChoiceData<T>& data, Frame target) {
  if (data.n() != 3) throw PreconditionError("regions need exactly three alternatives");
  const int n = 3;
  std::vector<Frame> constraints;
  for (Frame f : data.frames()) {
    if (f.size() >= 1 && f.size() <= 2 && f != target) constraints.push_back(f);
  }
  const std::vector<ChoiceType> types = enumerate_types(n);
  lp::Problem<T> problem;
  problem.rows = static_cast<int>(constraints.size()) * (n - 1) + 1;
  std::vector<Alternative> at_target;
  for (const ChoiceType& t : types) {
    std::vector<std::pair<int, T>> column;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      const Alternative c = evaluate_type(t, constraints[i]);
      if (c < n - 1) column.emplace_back(static_cast<int>(i) * (n - 1) + c, T(1));
    }
    column.emplace_back(problem.rows - 1, T(1));
    problem.columns.push_back(std::move(column));
    at_target.push_back(evaluate_type(t, target));
  }
  for (Frame f : constraints) {
    for (Alternative x = 0; x < n - 1; ++x) problem.rhs.push_back(data.prob(x, f));
  }
  problem.rhs.push_back(T(1));
  const double tol = data.epsilon() * problem.rows;

  auto extreme = [&](const T& d0, const T& d1) -> Point<T> {
    std::vector<T> cost;
    for (Alternative c : at_target) cost.push_back(c == 0 ? d0 : c == 1 ? d1 : T(0));
    const auto r = lp::solve(problem, cost, tol);
    Point<T> p{T(0), T(0)};
    for (std::size_t j = 0; j < at_target.size(); ++j) {
      if (at_target[j] < 2) p[static_cast<std::size_t>(at_target[j])] += r.x[j];
    }
    return p;
  };

  if (lp::solve(problem, {}, tol).status != lp::Status::kOptimal) return std::nullopt;
  std::vector<Point<T>> pts;
  for (const auto& [d0, d1] : {std::pair{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}}) {
    pts.push_back(extreme(T(d0), T(d1)));
  }
  Polygon<T> poly;
  poly.vertices = hull(pts, tol);
  // Refine: push every edge outward until no LP direction finds a new point.
  bool grew = true;
  while (grew && poly.vertices.size() >= 2) {
    grew = false;
    const auto v = poly.vertices;
    const std::size_t edges = v.size() == 2 ? 2 : v.size();
    for (std::size_t i = 0; i < edges && !grew; ++i) {
      const Point<T>& a = v[i];
      const Point<T>& b = v[(i + 1) % v.size()];
      const T d0 = b[1] - a[1];
      const T d1 = a[0] - b[0];
      const Point<T> p = extreme(d0, d1);
      const T gain = d0 * (p[0] - a[0]) + d1 * (p[1] - a[1]);
      if (above(gain, tol)) {
        pts.push_back(p);
        poly.vertices = hull(pts, tol);
        grew = true;
      }
    }
  }
  return poly;
}

template <class T>
SimplexPlotData plot_simplex(const StochasticChoiceData<T>& data, std::optional<std::array<Alternative, 3>> projection) {
  const int n = data.n();
  std::array<Alternative, 3> axes{0, 1, 2};
  if (projection) {
    axes = *projection;
    for (Alternative x : axes) {
      if (x < 0 || x >= n) throw PreconditionError("projection refers to an alternative outside the universe");
    }
    if (axes[0] == axes[1] || axes[1] == axes[2] || axes[0] == axes[2]) {
      throw PreconditionError("projection needs three distinct alternatives");
    }
  } else if (n != 3) {
    throw PreconditionError("simplex plots need three alternatives or an explicit projection");
  }
  SimplexPlotData out;
  for (Alternative x : axes) out.axes.push_back(data.universe().name(x));
  for (Frame f : data.frames()) {
    Barycentric b{};
    double total = 0.0;
    for (int k = 0; k < 3; ++k) {
      b[static_cast<std::size_t>(k)] = Num<T>::to_double(data.prob(axes[static_cast<std::size_t>(k)], f));
      total += b[static_cast<std::size_t>(k)];
    }
    if (total <= 0.0) continue;
    for (double& c : b) c /= total;
    out.points.push_back({"rho(.," + data.universe().pretty(f) + ")", b});
  }
  if (n != 3 || (projection && *projection != std::array<Alternative, 3>{0, 1, 2})) return out;
  for (Frame f : frames_up_to_size(n, 2)) {
    if (f.size() >= 1 && !data.contains(f)) return out;
  }
  for (Frame target : {Frame::full(n), Frame{}}) {
    SimplexRegion region;
    region.label = "FRUM region for " + data.universe().pretty(target);
    region.target = target;
    const auto poly = frum_region(data, target);
    if (poly) {
      for (const auto& p : poly->vertices) {
        const double x = Num<T>::to_double(p[0]);
        const double y = Num<T>::to_double(p[1]);
        region.vertices.push_back({x, y, std::max(0.0, 1.0 - x - y)});
      }
    }
    if (data.contains(target)) {
      region.contains_observed =
          poly && poly->contains({data.prob(0, target), data.prob(1, target)}, 10.0 * data.epsilon());
    }
    out.regions.push_back(std::move(region));
  }
  return out;
}

template struct Polygon<double>;
template struct Polygon<Rational>;
template std::optional<Polygon<double>> frum_region(const StochasticChoiceData<double>&, Frame);
template std::optional<Polygon<Rational>> frum_region(const StochasticChoiceData<Rational>&, Frame);
template SimplexPlotData plot_simplex(const StochasticChoiceData<double>&, std::optional<std::array<Alternative, 3>>);
template SimplexPlotData plot_simplex(const StochasticChoiceData<Rational>&, std::optional<std::array<Alternative, 3>>);

}  // namespace framechoice
