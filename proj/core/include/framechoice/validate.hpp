#pragma once

#include <array>
#include <string>
#include <vector>

#include "framechoice/choice_data.hpp"

namespace framechoice {

struct FrameSum {
  Frame frame;
  std::string sum;  // formatted in the data's numeric mode
  double sum_value = 0.0;
};

struct ValidationReport {
  int n = 0;
  std::size_t frame_count = 0;
  std::vector<FrameSum> sums;
  bool full_domain = false;
  // small_frames[k]: every frame with |F| <= k is observed, k = 0..3.
  std::array<bool, 4> small_frames{};
  // rho(x, F) > 0 for every alternative and observed frame.
  bool positive = false;
  int zero_entries = 0;
};

template <class T>
ValidationReport validate(const StochasticChoiceData<T>& data);

extern template ValidationReport validate<double>(const StochasticChoiceData<double>&);
extern template ValidationReport validate<Rational>(const StochasticChoiceData<Rational>&);

}  // namespace framechoice
