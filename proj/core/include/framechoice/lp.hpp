#pragma once

#include <utility>
#include <vector>

#include "framechoice/numeric.hpp"

namespace framechoice::lp {

// Equality-form problem: A x = b, x >= 0, b >= 0. Columns are sparse.
template <class T>
struct Problem {
  int rows = 0;
  std::vector<std::vector<std::pair<int, T>>> columns;
  std::vector<T> rhs;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

template <class T>
struct Result {
  Status status = Status::kInfeasible;
  std::vector<T> x;       // primal solution (basic feasible) when feasible
  T objective{};          // maximized value of the objective
  // When infeasible: y with y.A_j <= 0 for all columns and y.b > 0.
  std::vector<T> farkas;
};

// Two-phase revised simplex with Bland's rule. Maximizes objective.x; pass an
// empty objective for a pure feasibility check. tol is ignored for Rational.
template <class T>
Result<T> solve(const Problem<T>& problem, const std::vector<T>& objective, double tol);

extern template Result<double> solve(const Problem<double>&, const std::vector<double>&, double);
extern template Result<Rational> solve(const Problem<Rational>&, const std::vector<Rational>&, double);

}  // namespace framechoice::lp
