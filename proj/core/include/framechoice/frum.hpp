#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framechoice/choice_data.hpp"
#include "framechoice/detfum.hpp"
#include "framechoice/polys.hpp"

namespace framechoice {

template <class T>
struct WeightedType {
  ChoiceType type;
  T weight{};
};

// Probability distribution over choice types; entries in canonical type order.
template <class T>
struct TypeDistribution {
  Universe universe;
  std::vector<WeightedType<T>> entries;

  // Weight of t, zero when absent.
  T weight_of(const ChoiceType& t) const;
  T total() const;
};

enum class ViolationKind { kQ, kY, kInterimQ, kInterimY };
std::string_view to_string(ViolationKind kind);

template <class T>
struct Violation {
  ViolationKind kind = ViolationKind::kY;
  Alternative alternative = 0;
  Frame frame;
  Frame upper;  // upper end of the interval for interim kinds, else == frame
  T value{};
};

template <class T>
struct FrumVerdict {
  bool accepted = false;
  // Partial domain: only interim polynomials were checked, so acceptance
  // means "not falsified".
  bool falsification_only = false;
  std::vector<Violation<T>> violations;
  std::optional<TypeDistribution<T>> witness;
};

// Sign test on every q and y (full domain) or on every computable interim
// polynomial (partial domain). Violations sorted by value, most negative first.
template <class T>
FrumVerdict<T> test_frum(const StochasticChoiceData<T>& data);

// Every interim Q/Y polynomial whose interval is fully observed and which is
// negative. Sorted most negative first.
template <class T>
std::vector<Violation<T>> interim_violations(const StochasticChoiceData<T>& data);

inline constexpr int kMaxRecoverySize = 8;

// Path weights on the Hasse diagram: product of each step's share of the
// node's total outgoing flow. Throws ModelError when test_frum rejects.
template <class T>
TypeDistribution<T> recover_branch_independent(const StochasticChoiceData<T>& data);

// Recursion over starred-permutation prefixes (G weights), grouped by the
// truncated sequence each choice type corresponds to.
template <class T>
TypeDistribution<T> recover_constructive(const StochasticChoiceData<T>& data);

// rho(x, F) = mu{c : c(F) = x} on the given frames.
template <class T>
StochasticChoiceData<T> forward_frum(const TypeDistribution<T>& mu, const std::vector<Frame>& frames,
                                     double epsilon = 1e-9);

template <class T>
struct ClauseReport {
  bool passed = false;
  T max_leak_discrepancy{};    // clause 1, against y
  T max_edge_discrepancy{};    // clause 2, against q
  int checked = 0;
};

// Both identification clauses for every (b, F) with b not in F.
template <class T>
ClauseReport<T> check_type_clauses(const StochasticChoiceData<T>& data, const TypeDistribution<T>& mu);

template <class T>
struct FarkasEntry {
  std::string row;  // "total" or "rho(x,F)"
  T value{};
};

template <class T>
struct Feasibility {
  bool feasible = false;
  std::optional<TypeDistribution<T>> witness;   // basic feasible solution
  std::optional<Violation<T>> interim;          // certificate, when one exists
  std::vector<FarkasEntry<T>> farkas;           // otherwise the dual certificate
};

inline constexpr int kMaxFeasibilitySize = 6;

// Exact linear feasibility over enumerate_types for partially observed data.
template <class T>
Feasibility<T> feasible_completion(const StochasticChoiceData<T>& data);

#define FRAMECHOICE_FRUM_EXTERN(T)                                                               \
  extern template struct TypeDistribution<T>;                                                     \
  extern template FrumVerdict<T> test_frum(const StochasticChoiceData<T>&);                       \
  extern template std::vector<Violation<T>> interim_violations(const StochasticChoiceData<T>&);   \
  extern template TypeDistribution<T> recover_branch_independent(const StochasticChoiceData<T>&); \
  extern template TypeDistribution<T> recover_constructive(const StochasticChoiceData<T>&);       \
  extern template StochasticChoiceData<T> forward_frum(const TypeDistribution<T>&,                \
                                                       const std::vector<Frame>&, double);       \
  extern template ClauseReport<T> check_type_clauses(const StochasticChoiceData<T>&,                      \
                                             const TypeDistribution<T>&);                         \
  extern template Feasibility<T> feasible_completion(const StochasticChoiceData<T>&);

FRAMECHOICE_FRUM_EXTERN(double)
FRAMECHOICE_FRUM_EXTERN(Rational)
#undef FRAMECHOICE_FRUM_EXTERN

}  // namespace framechoice
