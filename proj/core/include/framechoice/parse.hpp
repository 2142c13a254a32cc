#pragma once

#include <string>
#include <string_view>

#include "framechoice/choice_data.hpp"

namespace framechoice {

// CSV with header `frame,alternative,probability`. The frame field is a
// `|`-joined label list (empty for the empty frame). Lines starting with '#'
// are comments; `# universe: a|b|c` fixes the universe and its order,
// otherwise the universe is the sorted union of all labels seen.
template <class T>
StochasticChoiceData<T> parse_stochastic(std::string_view text, double epsilon = 1e-9);

// CSV with header `frame,choice`.
DeterministicChoiceData parse_deterministic(std::string_view text);

// Inverse of the parsers. Always writes the `# universe:` comment.
template <class T>
std::string to_csv(const StochasticChoiceData<T>& data);
std::string to_csv(const DeterministicChoiceData& data);

extern template StochasticChoiceData<double> parse_stochastic<double>(std::string_view, double);
extern template StochasticChoiceData<Rational> parse_stochastic<Rational>(std::string_view, double);
extern template std::string to_csv<double>(const StochasticChoiceData<double>&);
extern template std::string to_csv<Rational>(const StochasticChoiceData<Rational>&);

}  // namespace framechoice
