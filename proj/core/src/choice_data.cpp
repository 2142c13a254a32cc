#include "framechoice/choice_data.hpp"

#include <algorithm>

#include "framechoice/errors.hpp"

namespace framechoice {

template <class T>
StochasticChoiceData<T>::StochasticChoiceData(Universe universe, std::vector<std::pair<Frame, Row>> rows,
                                              double epsilon)
    : universe_(std::move(universe)), epsilon_(epsilon) {
  if (epsilon < 0) throw DataError("epsilon must be non-negative");
  const int n = universe_.size();
  const Frame full = universe_.full_frame();
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  frames_.reserve(rows.size());
  values_.reserve(rows.size() * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [frame, row] = rows[i];
    const std::string label = universe_.pretty(frame);
    if (!frame.subset_of(full)) throw DataError("frame outside the universe");
    if (i > 0 && rows[i - 1].first == frame) throw DataError("duplicate frame " + label);
    if (static_cast<int>(row.size()) != n) {
      throw DataError("frame " + label + " has " + std::to_string(row.size()) + " probabilities, expected " +
                      std::to_string(n));
    }
    T sum{0};
    for (int x = 0; x < n; ++x) {
      const T& p = row[static_cast<std::size_t>(x)];
      if (is_negative(p, epsilon) || is_negative(T(T(1) - p), epsilon)) {
        throw DataError("probability of " + universe_.name(x) + " at frame " + label + " is outside [0,1]");
      }
      sum += p;
    }
    if (!approx_equal(sum, T(1), epsilon)) {
      throw DataError("frame sum at " + label + " is " + Num<T>::format(sum) + ", expected 1");
    }
    frames_.push_back(frame);
    values_.insert(values_.end(), row.begin(), row.end());
  }
}

template <class T>
std::optional<std::size_t> StochasticChoiceData<T>::find_index(Frame f) const {
  if (is_full_domain()) {
    if (f.bits < frames_.size()) return f.bits;
    return std::nullopt;
  }
  auto it = std::lower_bound(frames_.begin(), frames_.end(), f);
  if (it == frames_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - frames_.begin());
}

template <class T>
const T& StochasticChoiceData<T>::prob(Alternative x, Frame f) const {
  const auto idx = find_index(f);
  if (!idx) throw DataError("frame " + universe_.pretty(f) + " is not observed");
  return values_[*idx * static_cast<std::size_t>(n()) + static_cast<std::size_t>(x)];
}

template <class T>
std::span<const T> StochasticChoiceData<T>::row(Frame f) const {
  const auto idx = find_index(f);
  if (!idx) throw DataError("frame " + universe_.pretty(f) + " is not observed");
  return row_at(*idx);
}

template class StochasticChoiceData<double>;
template class StochasticChoiceData<Rational>;

DeterministicChoiceData::DeterministicChoiceData(Universe universe,
                                                 std::vector<std::pair<Frame, Alternative>> choices)
    : universe_(std::move(universe)) {
  std::sort(choices.begin(), choices.end());
  const Frame full = universe_.full_frame();
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const auto& [frame, x] = choices[i];
    if (!frame.subset_of(full)) throw DataError("frame outside the universe");
    if (i > 0 && choices[i - 1].first == frame) {
      throw DataError("duplicate frame " + universe_.pretty(frame));
    }
    if (x < 0 || x >= universe_.size()) throw DataError("choice outside the universe");
    frames_.push_back(frame);
    choices_.push_back(x);
  }
}

std::optional<Alternative> DeterministicChoiceData::choice(Frame f) const {
  auto it = std::lower_bound(frames_.begin(), frames_.end(), f);
  if (it == frames_.end() || *it != f) return std::nullopt;
  return choices_[static_cast<std::size_t>(it - frames_.begin())];
}

bool DeterministicChoiceData::covers_small_frames(int k) const {
  for (Frame f : frames_up_to_size(n(), k)) {
    if (!contains(f)) return false;
  }
  return true;
}

std::vector<Frame> frames_up_to_size(int n, int k) {
  std::vector<Frame> out;
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    if (std::popcount(b) <= k) out.emplace_back(b);
  }
  return out;
}

std::vector<Frame> all_frames(int n) { return frames_up_to_size(n, n); }

}  // namespace framechoice
