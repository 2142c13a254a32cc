#pragma once

#include <nlohmann/json.hpp>

#include "framechoice/detfum.hpp"
#include "framechoice/fluce.hpp"
#include "framechoice/frum.hpp"
#include "framechoice/plot.hpp"
#include "framechoice/polys.hpp"
#include "framechoice/validate.hpp"

// JSON encodings with stable field names. Numbers are JSON numbers in float
// mode and "p/q" strings in rational mode.
namespace framechoice {

using Json = nlohmann::json;

template <class T>
Json number_json(const T& x);
template <class T>
T number_from_json(const Json& j);

Json to_json(const Universe& u);
Json to_json(const ValidationReport& r, const Universe& u);
Json to_json(const DeterministicChoiceData& c);
Json to_json(const ChoiceType& t, const Universe& u);
Json to_json(const FumRepresentation& rep, const Universe& u);
Json to_json(const AxiomReport& r, const Universe& u);
Json to_json(const RepEquivalence& r);
Json to_json(const HasseGraph& g, const Universe& u);
Json to_json(const FLuceReport& r, const Universe& u);
Json to_json(const SimplexPlotData& p);

template <class T>
Json to_json(const StochasticChoiceData<T>& data);
template <class T>
StochasticChoiceData<T> stochastic_from_json(const Json& j, double epsilon = 1e-9);

template <class T>
Json to_json(const BmTable<T>& table, const Universe& u);
template <class T>
Json to_json(const TypeDistribution<T>& mu);
template <class T>
Json to_json(const Violation<T>& v, const Universe& u);
template <class T>
Json to_json(const FrumVerdict<T>& v, const Universe& u);
template <class T>
Json to_json(const Feasibility<T>& f, const Universe& u);
template <class T>
Json to_json(const ClauseReport<T>& r);
// {u: {label: value}, v: {label: value}}
template <class T>
Json to_json(const FLuceParams<T>& p, const Universe& u);
// Reads the same shape; the universe order follows the `u` object's keys
// unless `universe` is given.
template <class T>
FLuceParams<T> fluce_params_from_json(const Json& j, const Universe& universe);
Universe universe_from_params_json(const Json& j);
template <class T>
Json to_json(const FLuceTest<T>& t, const Universe& u);

}  // namespace framechoice
