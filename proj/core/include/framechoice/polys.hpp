#pragma once

#include <string>
#include <vector>

#include "framechoice/choice_data.hpp"

namespace framechoice {

// Block–Marschak table over the full lattice. For a in F the entry is
// q(a, F); for a not in F it is the auxiliary (leakage) polynomial y(a, F).
template <class T>
class BmTable {
 public:
  BmTable() = default;
  BmTable(int n, std::vector<T> values, double epsilon)
      : n_(n), epsilon_(epsilon), values_(std::move(values)) {}

  int n() const { return n_; }
  double epsilon() const { return epsilon_; }

  // q(a, F) if a in F, y(a, F) otherwise.
  const T& at(Alternative a, Frame f) const {
    return values_[static_cast<std::size_t>(f.bits) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a)];
  }
  // Throws PreconditionError when a is not in F.
  const T& q(Alternative a, Frame f) const;
  // Throws PreconditionError when a is in F.
  const T& y(Alternative a, Frame f) const;

  const std::vector<T>& values() const { return values_; }

 private:
  int n_ = 0;
  double epsilon_ = 0.0;
  std::vector<T> values_;  // 2^n * n, indexed [frame][alternative]
};

// Superset Möbius transform per alternative, O(n 2^n) each. Requires the
// full domain (PreconditionError otherwise).
template <class T>
BmTable<T> compute_bm(const StochasticChoiceData<T>& data);

// Y(a, F, F') = sum_{F <= B <= F'} (-1)^{|B \ F|} rho(a, B) for a not in F'.
// Throws PreconditionError when a frame of the interval is missing or the
// membership conditions fail.
template <class T>
T interim_y(const StochasticChoiceData<T>& data, Alternative a, Frame lower, Frame upper);

// Same alternating sum for a in F (framed a).
template <class T>
T interim_q(const StochasticChoiceData<T>& data, Alternative a, Frame lower, Frame upper);

// residual(F) = outflow + leakages - inflow, with inflow(X) := 1. Indexed by
// frame bits. Zero for every choice rule.
template <class T>
std::vector<T> flow_residuals(const BmTable<T>& table);

// Inflow into node F: sum_{b not in F} q(b, F ∪ {b}); 1 at the top node.
template <class T>
T inflow(const BmTable<T>& table, Frame f);

struct HasseEdge {
  Frame from;
  Frame to;  // equals `from` for leak edges
  Alternative alternative = 0;
  std::string label;  // exact text in the table's numeric mode
  double value = 0.0;
};

// Lattice nodes with one edge per alternative: a q-edge F ∪ {b} -> F for
// members, a leak edge for non-members.
struct HasseGraph {
  int n = 0;
  std::vector<Frame> nodes;
  std::vector<HasseEdge> q_edges;
  std::vector<HasseEdge> leak_edges;
};

template <class T>
HasseGraph export_hasse(const BmTable<T>& table);

// Plain graph description (Graphviz dot syntax) with node and edge labels.
std::string to_dot(const HasseGraph& graph, const Universe& universe);

extern template class BmTable<double>;
extern template class BmTable<Rational>;
extern template BmTable<double> compute_bm(const StochasticChoiceData<double>&);
extern template BmTable<Rational> compute_bm(const StochasticChoiceData<Rational>&);
extern template double interim_y(const StochasticChoiceData<double>&, Alternative, Frame, Frame);
extern template Rational interim_y(const StochasticChoiceData<Rational>&, Alternative, Frame, Frame);
extern template double interim_q(const StochasticChoiceData<double>&, Alternative, Frame, Frame);
extern template Rational interim_q(const StochasticChoiceData<Rational>&, Alternative, Frame, Frame);
extern template std::vector<double> flow_residuals(const BmTable<double>&);
extern template std::vector<Rational> flow_residuals(const BmTable<Rational>&);
extern template double inflow(const BmTable<double>&, Frame);
extern template Rational inflow(const BmTable<Rational>&, Frame);
extern template HasseGraph export_hasse(const BmTable<double>&);
extern template HasseGraph export_hasse(const BmTable<Rational>&);

}  // namespace framechoice
