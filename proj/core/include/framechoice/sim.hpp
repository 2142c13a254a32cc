#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "framechoice/fluce.hpp"
#include "framechoice/frum.hpp"

namespace framechoice {

// Counter-based generator: the i-th draw of stream (seed, tag) is a pure
// function of (seed, tag, i), so new draw sites never shift existing ones.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::string_view tag);

  std::uint64_t next_u64();
  // Uniform on the open interval (0, 1).
  double uniform();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Standard exponential.
  double exponential();
  std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct SimConfig {
  std::uint64_t seed = 0;
  int n = 3;
  double sparsity = 1.0;  // in (0, 1]
  double noise = 0.0;     // >= 0

  void check() const;
};

// Random support over enumerate_types(n) (each type kept with probability
// sparsity, at least one forced), weights from normalized exponentials.
template <class T>
TypeDistribution<T> sample_mu(const SimConfig& config);

// u normalized exponentials, v zero with probability 1/4 and exponential
// with mean 1/n otherwise.
template <class T>
FLuceParams<T> sample_fluce(const SimConfig& config);

// Arbitrary (not model-generated) full-domain rule: each frame is an
// independent normalized exponential vector.
template <class T>
StochasticChoiceData<T> sample_arbitrary(const SimConfig& config);

// Zero-mean uniform noise of magnitude config.noise per entry, clipped to
// [0,1] and renormalized per frame.
template <class T>
StochasticChoiceData<T> perturb(const StochasticChoiceData<T>& data, const SimConfig& config);

// Naive type-by-frame aggregation through evaluate_type; the reference for
// forward_frum.
template <class T>
StochasticChoiceData<T> oracle_forward(const TypeDistribution<T>& mu, const std::vector<Frame>& frames,
                                       double epsilon = 1e-9);

#define FRAMECHOICE_SIM_EXTERN(T)                                                               \
  extern template TypeDistribution<T> sample_mu(const SimConfig&);                               \
  extern template FLuceParams<T> sample_fluce(const SimConfig&);                                 \
  extern template StochasticChoiceData<T> sample_arbitrary(const SimConfig&);                    \
  extern template StochasticChoiceData<T> perturb(const StochasticChoiceData<T>&, const SimConfig&); \
  extern template StochasticChoiceData<T> oracle_forward(const TypeDistribution<T>&,             \
                                                         const std::vector<Frame>&, double);

FRAMECHOICE_SIM_EXTERN(double)
FRAMECHOICE_SIM_EXTERN(Rational)
#undef FRAMECHOICE_SIM_EXTERN

}  // namespace framechoice
