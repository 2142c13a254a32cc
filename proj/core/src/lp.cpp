#include "framechoice/lp.hpp"

#include "framechoice/errors.hpp"

namespace framechoice::lp {

namespace {

template <class T>
class Simplex {
 public:
  Simplex(const Problem<T>& p, double tol) : p_(p), m_(p.rows), n_(static_cast<int>(p.columns.size())), tol_(tol) {
    basis_.resize(static_cast<std::size_t>(m_));
    binv_.assign(static_cast<std::size_t>(m_), std::vector<T>(static_cast<std::size_t>(m_)));
    xb_ = p.rhs;
    for (int i = 0; i < m_; ++i) {
      basis_[static_cast<std::size_t>(i)] = n_ + i;
      binv_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = T(1);
    }
    is_basic_.assign(static_cast<std::size_t>(n_ + m_), false);
    for (int i = 0; i < m_; ++i) is_basic_[static_cast<std::size_t>(n_ + i)] = true;
  }

  bool positive(const T& x) const {
    if constexpr (Num<T>::kExact) {
      return x > 0;
    } else {
      return x > tol_;
    }
  }
  bool nonzero(const T& x) const { return positive(x) || positive(T(-x)); }

  // y = c_B^T B^{-1}
  std::vector<T> duals(const std::vector<T>& cost) const {
    std::vector<T> y(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      const T& cb = cost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
      if (cb == 0) continue;
      const auto& row = binv_[static_cast<std::size_t>(i)];
      for (int k = 0; k < m_; ++k) y[static_cast<std::size_t>(k)] += cb * row[static_cast<std::size_t>(k)];
    }
    return y;
  }

  T column_dot(const std::vector<T>& y, int j) const {
    if (j >= n_) return y[static_cast<std::size_t>(j - n_)];
    T s = 0;
    for (const auto& [r, a] : p_.columns[static_cast<std::size_t>(j)]) s += y[static_cast<std::size_t>(r)] * a;
    return s;
  }

  // B^{-1} A_j
  std::vector<T> ftran(int j) const {
    std::vector<T> d(static_cast<std::size_t>(m_));
    if (j >= n_) {
      for (int i = 0; i < m_; ++i) d[static_cast<std::size_t>(i)] = binv_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - n_)];
      return d;
    }
    for (const auto& [r, a] : p_.columns[static_cast<std::size_t>(j)]) {
      for (int i = 0; i < m_; ++i) d[static_cast<std::size_t>(i)] += binv_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] * a;
    }
    return d;
  }

  void pivot(int r, int j, const std::vector<T>& d) {
    auto& prow = binv_[static_cast<std::size_t>(r)];
    const T piv = d[static_cast<std::size_t>(r)];
    for (auto& v : prow) v /= piv;
    xb_[static_cast<std::size_t>(r)] /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || d[static_cast<std::size_t>(i)] == 0) continue;
      const T f = d[static_cast<std::size_t>(i)];
      auto& row = binv_[static_cast<std::size_t>(i)];
      for (int k = 0; k < m_; ++k) {
        if (prow[static_cast<std::size_t>(k)] != 0) row[static_cast<std::size_t>(k)] -= f * prow[static_cast<std::size_t>(k)];
      }
      xb_[static_cast<std::size_t>(i)] -= f * xb_[static_cast<std::size_t>(r)];
      if constexpr (!Num<T>::kExact) {
        if (xb_[static_cast<std::size_t>(i)] < 0 && xb_[static_cast<std::size_t>(i)] > -tol_) xb_[static_cast<std::size_t>(i)] = 0;
      }
    }
    is_basic_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] = false;
    basis_[static_cast<std::size_t>(r)] = j;
    is_basic_[static_cast<std::size_t>(j)] = true;
  }

  // Maximizes cost.x over columns with allowed(j). Bland's rule throughout.
  Status optimize(const std::vector<T>& cost, bool allow_artificial) {
    const int total = allow_artificial ? n_ + m_ : n_;
    while (true) {
      const std::vector<T> y = duals(cost);
      int entering = -1;
      for (int j = 0; j < total; ++j) {
        if (is_basic_[static_cast<std::size_t>(j)]) continue;
        if (positive(T(cost[static_cast<std::size_t>(j)] - column_dot(y, j)))) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return Status::kOptimal;
      const std::vector<T> d = ftran(entering);
      int leave = -1;
      T best{};
      for (int i = 0; i < m_; ++i) {
        if (!positive(d[static_cast<std::size_t>(i)])) continue;
        T ratio = xb_[static_cast<std::size_t>(i)] / d[static_cast<std::size_t>(i)];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return Status::kUnbounded;
      pivot(leave, entering, d);
    }
  }

  // Pivots zero-valued artificials out of the basis where a structural column
  // can replace them; redundant rows keep their artificial at zero.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_) continue;
      for (int j = 0; j < n_; ++j) {
        if (is_basic_[static_cast<std::size_t>(j)]) continue;
        const std::vector<T> d = ftran(j);
        if (nonzero(d[static_cast<std::size_t>(i)])) {
          pivot(i, j, d);
          break;
        }
      }
    }
  }

  std::vector<T> primal() const {
    std::vector<T> x(static_cast<std::size_t>(n_));
    for (int i = 0; i < m_; ++i) {
      const int j = basis_[static_cast<std::size_t>(i)];
      if (j < n_) x[static_cast<std::size_t>(j)] = xb_[static_cast<std::size_t>(i)];
    }
    return x;
  }

  T value(const std::vector<T>& cost) const {
    T s = 0;
    for (int i = 0; i < m_; ++i) s += cost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] * xb_[static_cast<std::size_t>(i)];
    return s;
  }

  int n() const { return n_; }
  int m() const { return m_; }

 private:
  const Problem<T>& p_;
  int m_;
  int n_;
  double tol_;
  std::vector<int> basis_;
  std::vector<bool> is_basic_;
  std::vector<std::vector<T>> binv_;
  std::vector<T> xb_;
};

}  // namespace

template <class T>
Result<T> solve(const Problem<T>& problem, const std::vector<T>& objective, double tol) {
  if (static_cast<int>(problem.rhs.size()) != problem.rows) throw PreconditionError("lp: rhs size mismatch");
  for (const T& b : problem.rhs) {
    if (b < 0) throw PreconditionError("lp: rhs must be nonnegative");
  }
  if (!objective.empty() && objective.size() != problem.columns.size()) {
    throw PreconditionError("lp: objective size mismatch");
  }
  Simplex<T> s(problem, tol);
  const int n = s.n();
  const int m = s.m();
  Result<T> out;

  std::vector<T> phase1(static_cast<std::size_t>(n + m));
  for (int i = 0; i < m; ++i) phase1[static_cast<std::size_t>(n + i)] = T(-1);
  s.optimize(phase1, true);
  const T infeasibility = -s.value(phase1);
  if (s.positive(infeasibility)) {
    out.status = Status::kInfeasible;
    // Phase-1 duals y satisfy y.A_j >= 0 and y.b < 0; report -y.
    out.farkas = s.duals(phase1);
    for (auto& v : out.farkas) v = -v;
    return out;
  }
  s.drive_out_artificials();
  if (!objective.empty()) {
    std::vector<T> phase2(static_cast<std::size_t>(n + m));
    for (int j = 0; j < n; ++j) phase2[static_cast<std::size_t>(j)] = objective[static_cast<std::size_t>(j)];
    if (s.optimize(phase2, false) == Status::kUnbounded) {
      out.status = Status::kUnbounded;
      out.x = s.primal();
      return out;
    }
    out.objective = s.value(phase2);
  }
  out.status = Status::kOptimal;
  out.x = s.primal();
  return out;
}

template Result<double> solve(const Problem<double>&, const std::vector<double>&, double);
template Result<Rational> solve(const Problem<Rational>&, const std::vector<Rational>&, double);

}  // namespace framechoice::lp
