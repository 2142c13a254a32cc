#include "framechoice/detfum.hpp"

#include <algorithm>
#include <functional>

namespace framechoice {

bool operator<(const ChoiceType& a, const ChoiceType& b) {
  if (a.priority.size() != b.priority.size()) return a.priority.size() < b.priority.size();
  if (a.priority != b.priority) return a.priority < b.priority;
  return a.default_index < b.default_index;
}

void check_choice_type(const ChoiceType& t, int n) {
  if (t.priority.empty()) throw PreconditionError("choice type needs a non-empty priority list");
  Frame seen;
  for (Alternative x : t.priority) {
    if (x < 0 || x >= n) throw PreconditionError("choice type refers to an alternative outside the universe");
    if (seen.contains(x)) throw PreconditionError("choice type repeats an alternative");
    seen = seen.with(x);
  }
  if (t.default_index < 0 || t.default_index >= static_cast<int>(t.priority.size())) {
    throw PreconditionError("choice type default index out of range");
  }
}

Alternative evaluate_type(const ChoiceType& t, Frame f) {
  for (Alternative x : t.priority) {
    if (f.contains(x)) return x;
  }
  return t.default_alternative();
}

Alternative evaluate_fum(const FumRepresentation& rep, Frame f) {
  const int n = static_cast<int>(rep.u.size());
  Alternative best = 0;
  double best_value = 0.0;
  bool tied = false;
  for (Alternative x = 0; x < n; ++x) {
    const double value = f.contains(x) ? rep.u[static_cast<std::size_t>(x)] + rep.v[static_cast<std::size_t>(x)]
                                       : rep.u[static_cast<std::size_t>(x)];
    if (x == 0 || value > best_value) {
      best = x;
      best_value = value;
      tied = false;
    } else if (value == best_value) {
      tied = true;
    }
  }
  if (tied) throw ModelError("non-injective utility");
  return best;
}

AxiomReport check_iifa(const DeterministicChoiceData& c) {
  AxiomReport report;
  const Universe& u = c.universe();
  const auto& frames = c.frames();
  const auto& choices = c.choices();

  auto check_pair = [&](Frame larger, Alternative x, Frame smaller, Alternative x_small) {
    if (x_small == x) return;
    if (smaller.contains(x)) {
      report.iifa1 = false;
      report.witnesses.push_back({larger, smaller, "IIFA1",
                                  "c(" + u.pretty(larger) + ")=" + u.name(x) + " is framed in " + u.pretty(smaller) +
                                      " but c(" + u.pretty(smaller) + ")=" + u.name(x_small)});
    } else if (!larger.contains(x)) {
      report.iifa2 = false;
      report.witnesses.push_back({larger, smaller, "IIFA2",
                                  "c(" + u.pretty(larger) + ")=" + u.name(x) + " is unframed but c(" +
                                      u.pretty(smaller) + ")=" + u.name(x_small)});
    }
  };

  for (std::size_t i = 0; i < frames.size(); ++i) {
    const Frame big = frames[i];
    const Alternative x = choices[i];
    {
      // Cheaper of: enumerate submasks of F, or scan the domain.
      if (big.size() < 63 && (std::uint64_t{1} << big.size()) <= frames.size()) {
        for (std::uint32_t s = (big.bits - 1) & big.bits;; s = (s - 1) & big.bits) {
          if (s != big.bits) {
            if (auto small = c.choice(Frame(s))) check_pair(big, x, Frame(s), *small);
          }
          if (s == 0) break;
        }
      } else {
        for (std::size_t j = 0; j < frames.size(); ++j) {
          if (j != i && frames[j].subset_of(big)) check_pair(big, x, frames[j], choices[j]);
        }
      }
    }
  }
  return report;
}

std::uint64_t type_count(int n) {
  std::uint64_t total = 0;
  std::uint64_t falling = 1;  // n!/(n-i)!
  for (int i = 1; i <= n; ++i) {
    falling *= static_cast<std::uint64_t>(n - i + 1);
    total += falling * static_cast<std::uint64_t>(i);
  }
  return total;
}

std::vector<ChoiceType> enumerate_types(int n) {
  if (n < 1) throw PreconditionError("enumerate_types needs n >= 1");
  if (n > kMaxEnumerationSize) {
    throw PreconditionError("enumerate_types supports n <= " + std::to_string(kMaxEnumerationSize));
  }
  std::vector<ChoiceType> out;
  out.reserve(type_count(n));
  std::vector<Alternative> prefix;
  for (int k = 1; k <= n; ++k) {
    // k-permutations in lexicographic order.
    std::function<void(Frame)> extend = [&](Frame used) {
      if (static_cast<int>(prefix.size()) == k) {
        for (int j = 0; j < k; ++j) out.push_back({prefix, j});
        return;
      }
      for (Alternative x = 0; x < n; ++x) {
        if (used.contains(x)) continue;
        prefix.push_back(x);
        extend(used.with(x));
        prefix.pop_back();
      }
    };
    extend(Frame{});
  }
  return out;
}

FumRepresentation realize_type(const ChoiceType& t, int n) {
  check_choice_type(t, n);
  // Best to worst: a1* ... ak*, default, then x* x for the rest.
  std::vector<int> order;
  for (Alternative x : t.priority) order.push_back(-(x + 1));
  const Alternative d = t.default_alternative();
  order.push_back(d);
  Frame in_priority;
  for (Alternative x : t.priority) in_priority = in_priority.with(x);
  for (Alternative x = 0; x < n; ++x) {
    if (x == d) continue;
    if (!in_priority.contains(x)) order.push_back(-(x + 1));
    order.push_back(x);
  }
  FumRepresentation rep{std::vector<double>(static_cast<std::size_t>(n)), std::vector<double>(static_cast<std::size_t>(n))};
  const double top = static_cast<double>(order.size());
  std::vector<double> framed(static_cast<std::size_t>(n));
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const int e = order[pos];
    const double value = top - static_cast<double>(pos);
    if (e >= 0) {
      rep.u[static_cast<std::size_t>(e)] = value;
    } else {
      framed[static_cast<std::size_t>(-e - 1)] = value;
    }
  }
  for (Alternative x = 0; x < n; ++x) {
    rep.v[static_cast<std::size_t>(x)] = framed[static_cast<std::size_t>(x)] - rep.u[static_cast<std::size_t>(x)];
  }
  return rep;
}

namespace {

FumFit revealed_order_fit(const DeterministicChoiceData& c) {
  const int n = c.n();
  const int m = 2 * n;  // node x: unframed x, node n + x: framed x
  const AxiomReport report = check_iifa(c);
  if (!report.iifa()) throw IifaViolation("choice data violates IIFA", report);

  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
  auto node = [n](Alternative x, bool framed) { return framed ? n + x : x; };
  for (std::size_t i = 0; i < c.frames().size(); ++i) {
    const Frame f = c.frames()[i];
    const Alternative x = c.choices()[i];
    for (Alternative y = 0; y < n; ++y) {
      if (y == x) continue;
      rel[static_cast<std::size_t>(node(x, f.contains(x)))][static_cast<std::size_t>(node(y, f.contains(y)))] = true;
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
          rel[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        throw IifaViolation("revealed relation is not asymmetric", report);
      }
    }
  }
  for (Alternative x = 0; x < n; ++x) rel[static_cast<std::size_t>(n + x)][static_cast<std::size_t>(x)] = true;
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) {
      if (!rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) continue;
      for (int j = 0; j < m; ++j) {
        if (rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]) {
      throw ModelError("revealed relation has a cycle after closure");
    }
  }

  // Linear extension; ties broken by x0*, x0, x1*, x1, ...
  auto key = [n](int v) { return v >= n ? 2 * (v - n) : 2 * v + 1; };
  std::vector<bool> placed(static_cast<std::size_t>(m));
  FumFit fit;
  for (int step = 0; step < m; ++step) {
    int pick = -1;
    for (int v = 0; v < m; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      bool dominated = false;
      for (int w = 0; w < m && !dominated; ++w) {
        dominated = !placed[static_cast<std::size_t>(w)] && rel[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
      }
      if (!dominated && (pick < 0 || key(v) < key(pick))) pick = v;
    }
    placed[static_cast<std::size_t>(pick)] = true;
    fit.order.push_back(pick >= n ? -(pick - n + 1) : pick);
  }

  fit.rep.u.assign(static_cast<std::size_t>(n), 0.0);
  fit.rep.v.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<double> framed(static_cast<std::size_t>(n));
  for (std::size_t pos = 0; pos < fit.order.size(); ++pos) {
    const double value = static_cast<double>(m) - static_cast<double>(pos);
    const int e = fit.order[pos];
    if (e >= 0) {
      fit.rep.u[static_cast<std::size_t>(e)] = value;
    } else {
      framed[static_cast<std::size_t>(-e - 1)] = value;
    }
  }
  for (Alternative x = 0; x < n; ++x) {
    fit.rep.v[static_cast<std::size_t>(x)] = framed[static_cast<std::size_t>(x)] - fit.rep.u[static_cast<std::size_t>(x)];
  }
  for (std::size_t i = 0; i < c.frames().size(); ++i) {
    if (evaluate_fum(fit.rep, c.frames()[i]) != c.choices()[i]) {
      throw ModelError("constructed representation does not reproduce c(" + c.universe().pretty(c.frames()[i]) + ")");
    }
  }
  fit.method = FumMethod::kRevealedOrder;
  return fit;
}

FumFit type_search_fit(const DeterministicChoiceData& c) {
  const int n = c.n();
  if (n > kMaxEnumerationSize) {
    throw PreconditionError("partial-domain FUM search supports n <= " + std::to_string(kMaxEnumerationSize));
  }
  for (const ChoiceType& t : enumerate_types(n)) {
    bool consistent = true;
    for (std::size_t i = 0; i < c.frames().size() && consistent; ++i) {
      consistent = evaluate_type(t, c.frames()[i]) == c.choices()[i];
    }
    if (consistent) {
      FumFit fit;
      fit.rep = realize_type(t, n);
      fit.method = FumMethod::kTypeSearch;
      fit.type = t;
      return fit;
    }
  }
  throw IifaViolation("no FUM choice type is consistent with the partial data", check_iifa(c));
}

}  // namespace

FumFit build_fum_representation(const DeterministicChoiceData& c) {
  const int n = c.n();
  if (n == 0) throw PreconditionError("empty universe");
  if (n == 1) {
    FumFit fit;
    fit.rep = {{1.0}, {0.0}};
    fit.order = {-1, 0};
    return fit;
  }
  if (c.covers_small_frames(std::min(3, n))) return revealed_order_fit(c);
  return type_search_fit(c);
}

RepEquivalence check_rep_equivalence(const FumRepresentation& r1, const FumRepresentation& r2) {
  RepEquivalence out;
  const int n = static_cast<int>(r1.u.size());
  if (static_cast<int>(r2.u.size()) != n) {
    out.notes.push_back("representations have different universe sizes");
    return out;
  }
  auto argmax = [n](const std::vector<double>& u) {
    return static_cast<Alternative>(std::max_element(u.begin(), u.begin() + n) - u.begin());
  };
  auto boosted = [](const FumRepresentation& r, Alternative x) {
    return r.u[static_cast<std::size_t>(x)] + r.v[static_cast<std::size_t>(x)];
  };
  const Alternative a1 = argmax(r1.u);
  const Alternative a2 = argmax(r2.u);
  out.same_argmax = a1 == a2;
  if (!out.same_argmax) out.notes.push_back("clause (i): unframed favorites differ");

  const double top1 = r1.u[static_cast<std::size_t>(a1)];
  const double top2 = r2.u[static_cast<std::size_t>(a2)];
  out.same_lower_contour = true;
  for (Alternative x = 0; x < n; ++x) {
    if ((top1 > boosted(r1, x)) != (top2 > boosted(r2, x))) {
      out.same_lower_contour = false;
      out.notes.push_back("clause (ii): framed alternative " + std::to_string(x) + " sits on different sides");
    }
  }
  out.same_upper_order = true;
  for (Alternative x = 0; x < n; ++x) {
    for (Alternative y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool first = boosted(r1, x) > boosted(r1, y) && boosted(r1, y) > top1;
      const bool second = boosted(r2, x) > boosted(r2, y) && boosted(r2, y) > top2;
      if (first != second) {
        out.same_upper_order = false;
        out.notes.push_back("clause (iii): order of framed " + std::to_string(x) + " and " + std::to_string(y) +
                            " differs");
      }
    }
  }
  out.same_choices = true;
  for (std::uint32_t b = 0; b < (1u << n) && out.same_choices; ++b) {
    try {
      out.same_choices = evaluate_fum(r1, Frame(b)) == evaluate_fum(r2, Frame(b));
    } catch (const ModelError&) {
      out.same_choices = false;
    }
  }
  return out;
}

DeterministicChoiceData tabulate(const ChoiceType& t, const Universe& universe, const std::vector<Frame>& frames) {
  std::vector<std::pair<Frame, Alternative>> choices;
  choices.reserve(frames.size());
  for (Frame f : frames) choices.emplace_back(f, evaluate_type(t, f));
  return DeterministicChoiceData(universe, std::move(choices));
}

std::string describe(const ChoiceType& t, const Universe& universe) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.priority.size(); ++i) {
    if (i > 0) out += ',';
    out += universe.name(t.priority[i]);
  }
  return out + "]->" + universe.name(t.default_alternative());
}

}  // namespace framechoice
