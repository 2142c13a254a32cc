#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "framechoice/numeric.hpp"
#include "framechoice/universe.hpp"

namespace framechoice {

// Stochastic choice rule on a domain of frames: rho(x, F) for every
// alternative x of the universe and every observed frame F. Immutable.
template <class T>
class StochasticChoiceData {
 public:
  using Row = std::vector<T>;

  StochasticChoiceData() = default;
  // Validates: one row per frame, row length n, entries in [0,1], row sums 1
  // (within epsilon in float mode, exactly in rational mode). Throws DataError.
  StochasticChoiceData(Universe universe, std::vector<std::pair<Frame, Row>> rows,
                       double epsilon = 1e-9);

  const Universe& universe() const { return universe_; }
  int n() const { return universe_.size(); }
  double epsilon() const { return epsilon_; }
  static constexpr NumericMode mode() { return Num<T>::kMode; }

  // Observed frames sorted by bit pattern.
  const std::vector<Frame>& frames() const { return frames_; }
  bool contains(Frame f) const { return find_index(f).has_value(); }
  bool is_full_domain() const { return frames_.size() == universe_.frame_count(); }

  // Throws DataError if F is not observed.
  const T& prob(Alternative x, Frame f) const;
  std::span<const T> row(Frame f) const;
  std::span<const T> row_at(std::size_t frame_index) const {
    return {values_.data() + frame_index * static_cast<std::size_t>(n()), static_cast<std::size_t>(n())};
  }

  bool operator==(const StochasticChoiceData& other) const {
    return universe_ == other.universe_ && frames_ == other.frames_ && values_ == other.values_;
  }

 private:
  std::optional<std::size_t> find_index(Frame f) const;

  Universe universe_;
  double epsilon_ = 1e-9;
  std::vector<Frame> frames_;
  std::vector<T> values_;  // frames_.size() * n, row-major by frame
};

// Deterministic choice rule c: frame -> chosen alternative (the choice need
// not be framed).
class DeterministicChoiceData {
 public:
  DeterministicChoiceData() = default;
  // Throws DataError on duplicate frames or out-of-range choices.
  DeterministicChoiceData(Universe universe, std::vector<std::pair<Frame, Alternative>> choices);

  const Universe& universe() const { return universe_; }
  int n() const { return universe_.size(); }
  const std::vector<Frame>& frames() const { return frames_; }
  const std::vector<Alternative>& choices() const { return choices_; }
  std::optional<Alternative> choice(Frame f) const;
  bool contains(Frame f) const { return choice(f).has_value(); }

  // True when every frame with |F| <= k is observed.
  bool covers_small_frames(int k) const;

  bool operator==(const DeterministicChoiceData&) const = default;

 private:
  Universe universe_;
  std::vector<Frame> frames_;
  std::vector<Alternative> choices_;
};

// Every frame of the universe with |F| <= k, sorted by bit pattern.
std::vector<Frame> frames_up_to_size(int n, int k);
// All 2^n frames.
std::vector<Frame> all_frames(int n);

extern template class StochasticChoiceData<double>;
extern template class StochasticChoiceData<Rational>;

}  // namespace framechoice
