#include "framechoice/polys.hpp"

#include <sstream>

#include "framechoice/errors.hpp"

namespace framechoice {

template <class T>
const T& BmTable<T>::q(Alternative a, Frame f) const {
  if (!f.contains(a)) throw PreconditionError("q(a, F) requires a in F");
  return at(a, f);
}

template <class T>
const T& BmTable<T>::y(Alternative a, Frame f) const {
  if (f.contains(a)) throw PreconditionError("y(a, F) requires a not in F");
  return at(a, f);
}

template <class T>
BmTable<T> compute_bm(const StochasticChoiceData<T>& data) {
  if (!data.is_full_domain()) throw PreconditionError("BM polynomials need the full domain of frames");
  const int n = data.n();
  const std::size_t stride = static_cast<std::size_t>(n);
  const std::uint32_t count = data.universe().frame_count();
  std::vector<T> v;
  v.reserve(static_cast<std::size_t>(count) * stride);
  for (std::uint32_t b = 0; b < count; ++b) {
    for (const T& p : data.row_at(b)) v.push_back(p);
  }
  // Superset transform along every bit i, applied to all alternatives except i.
  // Skipping bit a for alternative a keeps a's membership fixed, so one pass
  // yields q for members and y for non-members.
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t f = 0; f < count; ++f) {
      if (f & bit) continue;
      T* lo = v.data() + static_cast<std::size_t>(f) * stride;
      const T* hi = v.data() + static_cast<std::size_t>(f | bit) * stride;
      for (int a = 0; a < n; ++a) {
        if (a != i) lo[a] -= hi[a];
      }
    }
  }
  return BmTable<T>(n, std::move(v), data.epsilon());
}

namespace {

template <class T>
T interval_sum(const StochasticChoiceData<T>& data, Alternative a, Frame lower, Frame upper) {
  if (!lower.subset_of(upper)) throw PreconditionError("interim polynomial needs F subset of F'");
  if (a < 0 || a >= data.n()) throw PreconditionError("alternative outside the universe");
  const std::uint32_t free = (upper - lower).bits;
  T total = 0;
  for (std::uint32_t s = free;; s = (s - 1) & free) {
    const Frame b = lower | Frame(s);
    if (!data.contains(b)) {
      throw PreconditionError("interim polynomial needs frame " + data.universe().pretty(b));
    }
    if (std::popcount(s) % 2 == 0) {
      total += data.prob(a, b);
    } else {
      total -= data.prob(a, b);
    }
    if (s == 0) break;
  }
  return total;
}

}  // namespace

template <class T>
T interim_y(const StochasticChoiceData<T>& data, Alternative a, Frame lower, Frame upper) {
  if (upper.contains(a)) throw PreconditionError("Y(a, F, F') requires a not in F'");
  return interval_sum(data, a, lower, upper);
}

template <class T>
T interim_q(const StochasticChoiceData<T>& data, Alternative a, Frame lower, Frame upper) {
  if (!lower.contains(a)) throw PreconditionError("Q(a, F, F') requires a in F");
  return interval_sum(data, a, lower, upper);
}

template <class T>
T inflow(const BmTable<T>& table, Frame f) {
  const Frame top = Frame::full(table.n());
  if (f == top) return T(1);
  T total = 0;
  for (Alternative b = 0; b < table.n(); ++b) {
    if (!f.contains(b)) total += table.at(b, f.with(b));
  }
  return total;
}

template <class T>
std::vector<T> flow_residuals(const BmTable<T>& table) {
  const int n = table.n();
  const std::uint32_t count = 1u << n;
  std::vector<T> out(count);
  for (std::uint32_t b = 0; b < count; ++b) {
    const Frame f(b);
    T total = 0;
    for (Alternative a = 0; a < n; ++a) total += table.at(a, f);
    out[b] = total - inflow(table, f);
  }
  return out;
}

template <class T>
HasseGraph export_hasse(const BmTable<T>& table) {
  HasseGraph g;
  g.n = table.n();
  const std::uint32_t count = 1u << g.n;
  for (std::uint32_t b = 0; b < count; ++b) {
    const Frame f(b);
    g.nodes.push_back(f);
    for (Alternative a = 0; a < g.n; ++a) {
      const T& value = table.at(a, f);
      HasseEdge e{f, f.contains(a) ? f.without(a) : f, a, Num<T>::format(value), Num<T>::to_double(value)};
      if (f.contains(a)) {
        g.q_edges.push_back(std::move(e));
      } else {
        g.leak_edges.push_back(std::move(e));
      }
    }
  }
  return g;
}

std::string to_dot(const HasseGraph& graph, const Universe& universe) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=TB;\n";
  for (Frame f : graph.nodes) out << "  \"" << universe.pretty(f) << "\";\n";
  for (const HasseEdge& e : graph.q_edges) {
    out << "  \"" << universe.pretty(e.from) << "\" -> \"" << universe.pretty(e.to) << "\" [label=\"q("
        << universe.name(e.alternative) << ")=" << e.label << "\"];\n";
  }
  for (const HasseEdge& e : graph.leak_edges) {
    const std::string sink = "leak " + universe.name(e.alternative) + " " + universe.pretty(e.from);
    out << "  \"" << sink << "\" [shape=point];\n";
    out << "  \"" << universe.pretty(e.from) << "\" -> \"" << sink << "\" [style=dashed,label=\"y("
        << universe.name(e.alternative) << ")=" << e.label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

template class BmTable<double>;
template class BmTable<Rational>;
template BmTable<double> compute_bm(const StochasticChoiceData<double>&);
template BmTable<Rational> compute_bm(const StochasticChoiceData<Rational>&);
template double interim_y(const StochasticChoiceData<double>&, Alternative, Frame, Frame);
template Rational interim_y(const StochasticChoiceData<Rational>&, Alternative, Frame, Frame);
template double interim_q(const StochasticChoiceData<double>&, Alternative, Frame, Frame);
template Rational interim_q(const StochasticChoiceData<Rational>&, Alternative, Frame, Frame);
template std::vector<double> flow_residuals(const BmTable<double>&);
template std::vector<Rational> flow_residuals(const BmTable<Rational>&);
template double inflow(const BmTable<double>&, Frame);
template Rational inflow(const BmTable<Rational>&, Frame);
template HasseGraph export_hasse(const BmTable<double>&);
template HasseGraph export_hasse(const BmTable<Rational>&);

}  // namespace framechoice
