#include "framechoice/validate.hpp"

namespace framechoice {

template <class T>
ValidationReport validate(const StochasticChoiceData<T>& data) {
  ValidationReport report;
  report.n = data.n();
  report.frame_count = data.frames().size();
  report.full_domain = data.is_full_domain();
  for (int k = 0; k < 4; ++k) {
    bool covered = true;
    for (Frame f : frames_up_to_size(data.n(), k)) {
      if (!data.contains(f)) {
        covered = false;
        break;
      }
    }
    report.small_frames[static_cast<std::size_t>(k)] = covered;
  }
  for (std::size_t i = 0; i < data.frames().size(); ++i) {
    T sum{0};
    for (const T& p : data.row_at(i)) {
      sum += p;
      if (!(p > 0)) ++report.zero_entries;
    }
    report.sums.push_back({data.frames()[i], Num<T>::format(sum), Num<T>::to_double(sum)});
  }
  report.positive = report.zero_entries == 0;
  return report;
}

template ValidationReport validate<double>(const StochasticChoiceData<double>&);
template ValidationReport validate<Rational>(const StochasticChoiceData<Rational>&);

}  // namespace framechoice
