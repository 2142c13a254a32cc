#include "framechoice/serialize.hpp"

#include <map>

#include "framechoice/errors.hpp"

namespace framechoice {

template <class T>
Json number_json(const T& x) {
  if constexpr (Num<T>::kExact) {
    return Num<T>::format(x);
  } else {
    return x;
  }
}

template <class T>
T number_from_json(const Json& j) {
  if (j.is_string()) return Num<T>::parse(j.get<std::string>());
  if (j.is_number()) {
    // Go through the shortest decimal text so 0.45 stays 9/20 in rational mode.
    return Num<T>::parse(Num<double>::format(j.get<double>()));
  }
  throw DataError("expected a number or a numeric string");
}

namespace {

Json frames_json(const std::vector<Frame>& frames, const Universe& u) {
  Json out = Json::array();
  for (Frame f : frames) out.push_back(u.format(f));
  return out;
}

}  // namespace

Json to_json(const Universe& u) { return u.names(); }

Json to_json(const ValidationReport& r, const Universe& u) {
  Json sums = Json::array();
  for (const FrameSum& s : r.sums) sums.push_back({{"frame", u.format(s.frame)}, {"sum", s.sum}});
  return {{"n", r.n},
          {"frame_count", r.frame_count},
          {"full_domain", r.full_domain},
          {"all_frames_up_to",
           {{"0", r.small_frames[0]}, {"1", r.small_frames[1]}, {"2", r.small_frames[2]}, {"3", r.small_frames[3]}}},
          {"positive", r.positive},
          {"zero_entries", r.zero_entries},
          {"sums", sums}};
}

Json to_json(const DeterministicChoiceData& c) {
  Json choices = Json::array();
  for (std::size_t i = 0; i < c.frames().size(); ++i) {
    choices.push_back({{"frame", c.universe().format(c.frames()[i])}, {"choice", c.universe().name(c.choices()[i])}});
  }
  return {{"universe", to_json(c.universe())}, {"choices", choices}};
}

Json to_json(const ChoiceType& t, const Universe& u) {
  Json priority = Json::array();
  for (Alternative x : t.priority) priority.push_back(u.name(x));
  return {{"priority", priority}, {"default", u.name(t.default_alternative())}};
}

Json to_json(const FumRepresentation& rep, const Universe& u) {
  Json uj = Json::object();
  Json vj = Json::object();
  for (int x = 0; x < u.size(); ++x) {
    uj[u.name(x)] = rep.u[static_cast<std::size_t>(x)];
    vj[u.name(x)] = rep.v[static_cast<std::size_t>(x)];
  }
  return {{"u", uj}, {"v", vj}};
}

Json to_json(const AxiomReport& r, const Universe& u) {
  Json witnesses = Json::array();
  for (const IifaWitness& w : r.witnesses) {
    witnesses.push_back({{"axiom", w.axiom},
                         {"larger", u.format(w.larger)},
                         {"smaller", u.format(w.smaller)},
                         {"explanation", w.explanation}});
  }
  return {{"iifa1", r.iifa1}, {"iifa2", r.iifa2}, {"iifa", r.iifa()}, {"witnesses", witnesses}};
}

Json to_json(const RepEquivalence& r) {
  return {{"same_argmax", r.same_argmax},
          {"same_lower_contour", r.same_lower_contour},
          {"same_upper_order", r.same_upper_order},
          {"same_choices", r.same_choices},
          {"equivalent", r.equivalent()},
          {"notes", r.notes}};
}

Json to_json(const HasseGraph& g, const Universe& u) {
  auto edges = [&](const std::vector<HasseEdge>& list) {
    Json out = Json::array();
    for (const HasseEdge& e : list) {
      out.push_back({{"from", u.format(e.from)},
                     {"to", u.format(e.to)},
                     {"alternative", u.name(e.alternative)},
                     {"label", e.label}});
    }
    return out;
  };
  return {{"nodes", frames_json(g.nodes, u)}, {"q_edges", edges(g.q_edges)}, {"leak_edges", edges(g.leak_edges)}};
}

Json to_json(const FLuceReport& r, const Universe& u) {
  Json out = {{"positivity", to_string(r.positivity)},
              {"strong_iia", {{"verdict", to_string(r.strong_iia)}, {"worst_deviation", r.worst_ratio_deviation}}},
              {"f_regularity",
               {{"verdict", to_string(r.f_regularity)}, {"worst_excess", r.worst_regularity_excess}}},
              {"luce_iia", to_string(r.luce_iia)}};
  if (r.strong_iia_witness) {
    const auto& w = *r.strong_iia_witness;
    out["strong_iia"]["witness"] = {
        {"x", u.name(w.x)}, {"y", u.name(w.y)}, {"F", u.format(w.first)}, {"F_prime", u.format(w.second)}};
  }
  if (r.f_regularity_witness) {
    const auto& w = *r.f_regularity_witness;
    out["f_regularity"]["witness"] = {
        {"x", u.name(w.x)}, {"F", u.format(w.frame)}, {"removed", u.name(w.removed)}};
  }
  return out;
}

Json to_json(const SimplexPlotData& p) {
  Json points = Json::array();
  for (const SimplexPoint& pt : p.points) points.push_back({{"label", pt.label}, {"bary", pt.bary}});
  Json regions = Json::array();
  for (const SimplexRegion& r : p.regions) {
    Json region = {{"label", r.label}, {"vertices", r.vertices}};
    if (r.contains_observed) region["contains_observed"] = *r.contains_observed;
    regions.push_back(std::move(region));
  }
  return {{"axes", p.axes}, {"points", points}, {"regions", regions}};
}

template <class T>
Json to_json(const StochasticChoiceData<T>& data) {
  const Universe& u = data.universe();
  Json probs = Json::array();
  for (std::size_t i = 0; i < data.frames().size(); ++i) {
    const auto row = data.row_at(i);
    for (int x = 0; x < u.size(); ++x) {
      probs.push_back({{"frame", u.format(data.frames()[i])},
                       {"alternative", u.name(x)},
                       {"p", number_json(row[static_cast<std::size_t>(x)])}});
    }
  }
  return {{"universe", to_json(u)},
          {"numeric", to_string(Num<T>::kMode)},
          {"frames", frames_json(data.frames(), u)},
          {"probs", probs}};
}

template <class T>
StochasticChoiceData<T> stochastic_from_json(const Json& j, double epsilon) {
  try {
    const Universe u(j.at("universe").get<std::vector<std::string>>());
    std::map<std::uint32_t, std::vector<std::optional<T>>> rows;
    for (const Json& f : j.at("frames")) {
      rows.emplace(u.parse_frame(f.get<std::string>()).bits,
                   std::vector<std::optional<T>>(static_cast<std::size_t>(u.size())));
    }
    for (const Json& p : j.at("probs")) {
      const Frame f = u.parse_frame(p.at("frame").get<std::string>());
      auto& row = rows[f.bits];
      if (row.empty()) row.resize(static_cast<std::size_t>(u.size()));
      auto& slot = row[static_cast<std::size_t>(u.index_of(p.at("alternative").get<std::string>()))];
      if (slot) throw DataError("duplicate probability entry");
      slot = number_from_json<T>(p.at("p"));
    }
    std::vector<std::pair<Frame, std::vector<T>>> out;
    for (auto& [bits, row] : rows) {
      std::vector<T> values;
      for (auto& v : row) {
        if (!v) throw DataError("missing probability entry in frame " + u.pretty(Frame(bits)));
        values.push_back(std::move(*v));
      }
      out.emplace_back(Frame(bits), std::move(values));
    }
    return StochasticChoiceData<T>(u, std::move(out), epsilon);
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed choice data JSON: ") + e.what());
  }
}

template <class T>
Json to_json(const BmTable<T>& table, const Universe& u) {
  Json q = Json::array();
  Json y = Json::array();
  for (std::uint32_t b = 0; b < (1u << table.n()); ++b) {
    const Frame f(b);
    for (Alternative a = 0; a < table.n(); ++a) {
      Json entry = {{"alternative", u.name(a)}, {"frame", u.format(f)}, {"value", number_json(table.at(a, f))}};
      (f.contains(a) ? q : y).push_back(std::move(entry));
    }
  }
  return {{"q", q}, {"y", y}};
}

template <class T>
Json to_json(const TypeDistribution<T>& mu) {
  Json out = Json::array();
  for (const auto& e : mu.entries) {
    Json entry = to_json(e.type, mu.universe);
    entry["weight"] = number_json(e.weight);
    out.push_back(std::move(entry));
  }
  return out;
}

template <class T>
Json to_json(const Violation<T>& v, const Universe& u) {
  Json out = {{"kind", to_string(v.kind)}, {"alternative", u.name(v.alternative)}, {"frame", u.format(v.frame)}};
  if (v.kind == ViolationKind::kInterimQ || v.kind == ViolationKind::kInterimY) out["upper"] = u.format(v.upper);
  out["value"] = number_json(v.value);
  return out;
}

template <class T>
Json to_json(const FrumVerdict<T>& v, const Universe& u) {
  Json violations = Json::array();
  for (const auto& x : v.violations) violations.push_back(to_json(x, u));
  Json out = {{"accepted", v.accepted}, {"falsification_only", v.falsification_only}, {"violations", violations}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

template <class T>
Json to_json(const Feasibility<T>& f, const Universe& u) {
  Json out = {{"feasible", f.feasible}};
  if (f.witness) out["witness"] = to_json(*f.witness);
  if (f.interim) out["certificate"] = to_json(*f.interim, u);
  if (!f.farkas.empty()) {
    Json rows = Json::array();
    for (const auto& e : f.farkas) rows.push_back({{"row", e.row}, {"value", number_json(e.value)}});
    out["farkas"] = rows;
  }
  return out;
}

template <class T>
Json to_json(const ClauseReport<T>& r) {
  return {{"passed", r.passed},
          {"checked", r.checked},
          {"max_leak_discrepancy", number_json(r.max_leak_discrepancy)},
          {"max_edge_discrepancy", number_json(r.max_edge_discrepancy)}};
}

template <class T>
Json to_json(const FLuceParams<T>& p, const Universe& u) {
  Json uj = Json::object();
  Json vj = Json::object();
  for (int x = 0; x < u.size(); ++x) {
    uj[u.name(x)] = number_json(p.u[static_cast<std::size_t>(x)]);
    vj[u.name(x)] = number_json(p.v[static_cast<std::size_t>(x)]);
  }
  return {{"universe", to_json(u)}, {"u", uj}, {"v", vj}};
}

Universe universe_from_params_json(const Json& j) {
  try {
    if (j.contains("universe")) return Universe(j.at("universe").get<std::vector<std::string>>());
    std::vector<std::string> names;
    for (const auto& [label, value] : j.at("u").items()) names.push_back(label);
    return Universe(std::move(names));
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed parameter JSON: ") + e.what());
  }
}

template <class T>
FLuceParams<T> fluce_params_from_json(const Json& j, const Universe& universe) {
  try {
    FLuceParams<T> p;
    const Json& uj = j.at("u");
    const Json& vj = j.at("v");
    if (uj.size() != static_cast<std::size_t>(universe.size()) || vj.size() != uj.size()) {
      throw DataError("parameter JSON does not match the universe");
    }
    for (const std::string& name : universe.names()) {
      p.u.push_back(number_from_json<T>(uj.at(name)));
      p.v.push_back(number_from_json<T>(vj.at(name)));
    }
    try {
      p.check();
    } catch (const PreconditionError& e) {
      throw DataError(e.what());
    }
    return p;
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed parameter JSON: ") + e.what());
  }
}

template <class T>
Json to_json(const FLuceTest<T>& t, const Universe& u) {
  Json out = {{"accepted", t.accepted}, {"axioms", to_json(t.report, u)}};
  if (t.params) {
    out["params"] = to_json(*t.params, u);
    out["max_reproduction_error"] = t.max_reproduction_error;
  }
  return out;
}

#define FRAMECHOICE_SERIALIZE_INSTANTIATE(T)                                        \
  template Json number_json(const T&);                                              \
  template T number_from_json(const Json&);                                         \
  template Json to_json(const StochasticChoiceData<T>&);                            \
  template StochasticChoiceData<T> stochastic_from_json(const Json&, double);       \
  template Json to_json(const BmTable<T>&, const Universe&);                        \
  template Json to_json(const TypeDistribution<T>&);                                \
  template Json to_json(const Violation<T>&, const Universe&);                      \
  template Json to_json(const FrumVerdict<T>&, const Universe&);                    \
  template Json to_json(const Feasibility<T>&, const Universe&);                    \
  template Json to_json(const ClauseReport<T>&);                                     \
  template Json to_json(const FLuceParams<T>&, const Universe&);                    \
  template FLuceParams<T> fluce_params_from_json(const Json&, const Universe&);     \
  template Json to_json(const FLuceTest<T>&, const Universe&);

FRAMECHOICE_SERIALIZE_INSTANTIATE(double)
FRAMECHOICE_SERIALIZE_INSTANTIATE(Rational)

}  // namespace framechoice
