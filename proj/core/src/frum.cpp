#include "framechoice/frum.hpp"

#include <algorithm>
#include <map>

#include "framechoice/errors.hpp"
#include "framechoice/lp.hpp"

namespace framechoice {

template <class T>
T TypeDistribution<T>::weight_of(const ChoiceType& t) const {
  for (const auto& e : entries) {
    if (e.type == t) return e.weight;
  }
  return T(0);
}

template <class T>
T TypeDistribution<T>::total() const {
  T s = 0;
  for (const auto& e : entries) s += e.weight;
  return s;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kQ:
      return "q";
    case ViolationKind::kY:
      return "y";
    case ViolationKind::kInterimQ:
      return "interim_Q";
    case ViolationKind::kInterimY:
      return "interim_Y";
  }
  return "?";
}

namespace {

template <class T>
void sort_violations(std::vector<Violation<T>>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Violation<T>& a, const Violation<T>& b) { return a.value < b.value; });
}

// Clamped polynomial value for recovery: float noise below zero becomes 0.
template <class T>
T clamped(const T& x) {
  if constexpr (Num<T>::kExact) {
    return x;
  } else {
    return x < 0 ? 0.0 : x;
  }
}

template <class T>
BmTable<T> accepted_table(const StochasticChoiceData<T>& data) {
  if (data.n() < 1) throw PreconditionError("recovery needs a non-empty universe");
  if (data.n() > kMaxRecoverySize) {
    throw PreconditionError("recovery supports n <= " + std::to_string(kMaxRecoverySize));
  }
  BmTable<T> table = compute_bm(data);
  for (const T& v : table.values()) {
    if (is_negative(v, data.epsilon())) throw ModelError("data rejected by the FRUM test; no representation to recover");
  }
  return table;
}

template <class T>
TypeDistribution<T> collect(const Universe& universe, std::map<ChoiceType, T>& weights) {
  TypeDistribution<T> out;
  out.universe = universe;
  for (auto& [type, w] : weights) {
    if (w != 0) out.entries.push_back({type, std::move(w)});
  }
  return out;
}

}  // namespace

template <class T>
std::vector<Violation<T>> interim_violations(const StochasticChoiceData<T>& data) {
  const int n = data.n();
  const double eps = data.epsilon();
  std::vector<Violation<T>> out;
  std::vector<T> sums(static_cast<std::size_t>(n));
  for (Frame lower : data.frames()) {
    for (Frame upper : data.frames()) {
      if (upper == lower || !lower.subset_of(upper)) continue;
      const std::uint32_t free = (upper - lower).bits;
      bool complete = true;
      for (std::uint32_t s = free;; s = (s - 1) & free) {
        if (!data.contains(lower | Frame(s))) {
          complete = false;
          break;
        }
        if (s == 0) break;
      }
      if (!complete) continue;
      std::fill(sums.begin(), sums.end(), T(0));
      for (std::uint32_t s = free;; s = (s - 1) & free) {
        const auto row = data.row(lower | Frame(s));
        const bool even = std::popcount(s) % 2 == 0;
        for (int a = 0; a < n; ++a) {
          if (even) {
            sums[static_cast<std::size_t>(a)] += row[static_cast<std::size_t>(a)];
          } else {
            sums[static_cast<std::size_t>(a)] -= row[static_cast<std::size_t>(a)];
          }
        }
        if (s == 0) break;
      }
      for (Alternative a = 0; a < n; ++a) {
        ViolationKind kind;
        if (lower.contains(a)) {
          kind = ViolationKind::kInterimQ;
        } else if (!upper.contains(a)) {
          kind = ViolationKind::kInterimY;
        } else {
          continue;
        }
        if (is_negative(sums[static_cast<std::size_t>(a)], eps)) {
          out.push_back({kind, a, lower, upper, sums[static_cast<std::size_t>(a)]});
        }
      }
    }
  }
  sort_violations(out);
  return out;
}

template <class T>
FrumVerdict<T> test_frum(const StochasticChoiceData<T>& data) {
  FrumVerdict<T> verdict;
  if (!data.is_full_domain()) {
    verdict.falsification_only = true;
    verdict.violations = interim_violations(data);
    verdict.accepted = verdict.violations.empty();
    return verdict;
  }
  const BmTable<T> table = compute_bm(data);
  const int n = data.n();
  const std::uint32_t count = data.universe().frame_count();
  for (std::uint32_t b = 0; b < count; ++b) {
    const Frame f(b);
    for (Alternative a = 0; a < n; ++a) {
      const T& v = table.at(a, f);
      if (is_negative(v, data.epsilon())) {
        verdict.violations.push_back({f.contains(a) ? ViolationKind::kQ : ViolationKind::kY, a, f, f, v});
      }
    }
  }
  sort_violations(verdict.violations);
  verdict.accepted = verdict.violations.empty();
  if (verdict.accepted && n >= 1 && n <= kMaxRecoverySize) verdict.witness = recover_branch_independent(data);
  return verdict;
}

template <class T>
TypeDistribution<T> recover_branch_independent(const StochasticChoiceData<T>& data) {
  const BmTable<T> table = accepted_table(data);
  const int n = data.n();
  std::map<ChoiceType, T> weights;
  std::vector<Alternative> prefix;

  // Depth-first over removal paths X = A_0 > A_1 > ... ; at each node the
  // outgoing labels are normalized by their sum.
  auto visit = [&](auto&& self, Frame node, const T& w) -> void {
    T total = 0;
    for (Alternative x = 0; x < n; ++x) total += clamped(table.at(x, node));
    if (total == 0) return;
    for (Alternative x = 0; x < n; ++x) {
      const T value = clamped(table.at(x, node));
      if (value == 0) continue;
      const T next = w * value / total;
      if (node.contains(x)) {
        prefix.push_back(x);
        self(self, node.without(x), next);
        prefix.pop_back();
      } else {
        const auto pos = std::find(prefix.begin(), prefix.end(), x) - prefix.begin();
        weights[ChoiceType{prefix, static_cast<int>(pos)}] += next;
      }
    }
  };
  visit(visit, Frame::full(n), T(1));
  return collect(data.universe(), weights);
}

template <class T>
TypeDistribution<T> recover_constructive(const StochasticChoiceData<T>& data) {
  const BmTable<T> table = accepted_table(data);
  const int n = data.n();
  const Frame top = Frame::full(n);

  struct Prefix {
    std::vector<Alternative> perm;  // starred elements, in order
    Frame set;
    T g;
  };
  // Level 1: G(a*) = q(a, X).
  std::vector<Prefix> level;
  for (Alternative a = 0; a < n; ++a) {
    T g = clamped(table.at(a, top));
    if (g != 0) level.push_back({{a}, Frame::singleton(a), std::move(g)});
  }
  std::map<ChoiceType, T> weights;
  while (!level.empty()) {
    // S(F) = sum of G over the permutations of F.
    std::map<std::uint32_t, T> group_sum;
    for (const Prefix& p : level) group_sum[p.set.bits] += p.g;
    std::vector<Prefix> next;
    for (const Prefix& p : level) {
      const T& s = group_sum[p.set.bits];
      if (s == 0) continue;
      const Frame rest = top - p.set;
      for (Alternative z = 0; z < n; ++z) {
        if (p.set.contains(z)) {
          // G(pi z): the truncated sequence ending at unstarred z.
          const T g = p.g * clamped(table.at(z, rest)) / s;
          if (g == 0) continue;
          const auto pos = std::find(p.perm.begin(), p.perm.end(), z) - p.perm.begin();
          weights[ChoiceType{p.perm, static_cast<int>(pos)}] += g;
        } else {
          T g = p.g * clamped(table.at(z, rest)) / s;
          if (g == 0) continue;
          std::vector<Alternative> perm = p.perm;
          perm.push_back(z);
          next.push_back({std::move(perm), p.set.with(z), std::move(g)});
        }
      }
    }
    level = std::move(next);
  }
  return collect(data.universe(), weights);
}

template <class T>
StochasticChoiceData<T> forward_frum(const TypeDistribution<T>& mu, const std::vector<Frame>& frames, double epsilon) {
  const int n = mu.universe.size();
  std::vector<std::pair<Frame, std::vector<T>>> rows;
  rows.reserve(frames.size());
  for (Frame f : frames) {
    std::vector<T> row(static_cast<std::size_t>(n));
    for (const auto& e : mu.entries) row[static_cast<std::size_t>(evaluate_type(e.type, f))] += e.weight;
    rows.emplace_back(f, std::move(row));
  }
  return StochasticChoiceData<T>(mu.universe, std::move(rows), epsilon);
}

template <class T>
ClauseReport<T> check_type_clauses(const StochasticChoiceData<T>& data, const TypeDistribution<T>& mu) {
  const BmTable<T> table = compute_bm(data);
  const int n = data.n();
  const Frame top = Frame::full(n);
  ClauseReport<T> report;
  for (std::uint32_t bits = 0; bits < data.universe().frame_count(); ++bits) {
    const Frame f(bits);
    for (Alternative b = 0; b < n; ++b) {
      if (f.contains(b)) continue;
      const Frame rest = top - f;
      const Frame fb = f.with(b);
      T leak = 0;
      T edge = 0;
      for (const auto& e : mu.entries) {
        if (evaluate_type(e.type, f) == b) {
          bool singles = true;
          for (Alternative x : rest.members()) singles = singles && evaluate_type(e.type, Frame::singleton(x)) == x;
          if (singles) leak += e.weight;
        }
        if (evaluate_type(e.type, fb) == b) {
          bool pairs = true;
          for (Alternative x : (top - fb).members()) {
            pairs = pairs && evaluate_type(e.type, Frame::singleton(x).with(b)) == x;
          }
          if (pairs) edge += e.weight;
        }
      }
      const T d1 = abs_value(T(leak - table.at(b, f)));
      const T d2 = abs_value(T(edge - table.at(b, fb)));
      if (d1 > report.max_leak_discrepancy) report.max_leak_discrepancy = d1;
      if (d2 > report.max_edge_discrepancy) report.max_edge_discrepancy = d2;
      ++report.checked;
    }
  }
  const double tol = 8.0 * data.epsilon();
  report.passed = is_zero(report.max_leak_discrepancy, tol) && is_zero(report.max_edge_discrepancy, tol);
  return report;
}

template <class T>
Feasibility<T> feasible_completion(const StochasticChoiceData<T>& data) {
  const int n = data.n();
  if (n < 1) throw PreconditionError("feasibility needs a non-empty universe");
  if (n > kMaxFeasibilitySize) {
    throw PreconditionError("feasibility supports n <= " + std::to_string(kMaxFeasibilitySize));
  }
  Feasibility<T> out;
  const auto interim = interim_violations(data);
  if (!interim.empty()) {
    out.interim = interim.front();
    return out;
  }

  const auto& frames = data.frames();
  const std::vector<ChoiceType> types = enumerate_types(n);
  std::map<std::vector<Alternative>, std::size_t> seen;
  std::vector<std::size_t> column_type;
  lp::Problem<T> problem;
  const int per_frame = n - 1;
  problem.rows = static_cast<int>(frames.size()) * per_frame + 1;
  for (std::size_t t = 0; t < types.size(); ++t) {
    std::vector<Alternative> pattern;
    pattern.reserve(frames.size());
    for (Frame f : frames) pattern.push_back(evaluate_type(types[t], f));
    if (!seen.emplace(pattern, column_type.size()).second) continue;
    std::vector<std::pair<int, T>> column;
    for (std::size_t i = 0; i < frames.size(); ++i) {
      if (pattern[i] < per_frame) column.emplace_back(static_cast<int>(i) * per_frame + pattern[i], T(1));
    }
    column.emplace_back(problem.rows - 1, T(1));
    problem.columns.push_back(std::move(column));
    column_type.push_back(t);
  }
  problem.rhs.reserve(static_cast<std::size_t>(problem.rows));
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto row = data.row_at(i);
    for (int x = 0; x < per_frame; ++x) problem.rhs.push_back(row[static_cast<std::size_t>(x)]);
  }
  problem.rhs.push_back(T(1));

  const auto result = lp::solve(problem, {}, data.epsilon() * problem.rows);
  if (result.status == lp::Status::kOptimal) {
    out.feasible = true;
    TypeDistribution<T> mu;
    mu.universe = data.universe();
    for (std::size_t j = 0; j < column_type.size(); ++j) {
      if (result.x[j] != 0) mu.entries.push_back({types[column_type[j]], result.x[j]});
    }
    out.witness = std::move(mu);
    return out;
  }
  for (int r = 0; r < problem.rows; ++r) {
    const T& v = result.farkas[static_cast<std::size_t>(r)];
    if (is_zero(v, data.epsilon())) continue;
    std::string label = "total";
    if (r < problem.rows - 1) {
      const Frame f = frames[static_cast<std::size_t>(r / per_frame)];
      label = "rho(" + data.universe().name(r % per_frame) + "," + data.universe().pretty(f) + ")";
    }
    out.farkas.push_back({std::move(label), v});
  }
  return out;
}

#define FRAMECHOICE_FRUM_INSTANTIATE(T)                                                                    \
  template struct TypeDistribution<T>;                                                                     \
  template FrumVerdict<T> test_frum(const StochasticChoiceData<T>&);                                       \
  template std::vector<Violation<T>> interim_violations(const StochasticChoiceData<T>&);                   \
  template TypeDistribution<T> recover_branch_independent(const StochasticChoiceData<T>&);                 \
  template TypeDistribution<T> recover_constructive(const StochasticChoiceData<T>&);                       \
  template StochasticChoiceData<T> forward_frum(const TypeDistribution<T>&, const std::vector<Frame>&,      \
                                                double);                                                   \
  template ClauseReport<T> check_type_clauses(const StochasticChoiceData<T>&, const TypeDistribution<T>&);         \
  template Feasibility<T> feasible_completion(const StochasticChoiceData<T>&);

FRAMECHOICE_FRUM_INSTANTIATE(double)
FRAMECHOICE_FRUM_INSTANTIATE(Rational)

}  // namespace framechoice
