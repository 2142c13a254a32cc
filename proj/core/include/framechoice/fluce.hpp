#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "framechoice/choice_data.hpp"
#include "framechoice/frum.hpp"

namespace framechoice {

// Frame-dependent Luce parameters: base weight u > 0, framing boost v >= 0.
template <class T>
struct FLuceParams {
  std::vector<T> u;
  std::vector<T> v;

  // Throws PreconditionError unless u > 0, v >= 0 and sizes agree.
  void check() const;
};

// rho(x,F) = (u(x) + v(x) [x in F]) / (u(X) + v(F)).
template <class T>
StochasticChoiceData<T> forward_fluce(const FLuceParams<T>& params, const Universe& universe,
                                      const std::vector<Frame>& frames, double epsilon = 1e-9);

enum class Verdict { kPass, kFail, kBlocked };
std::string_view to_string(Verdict v);

struct RatioWitness {
  Alternative x = 0;
  Alternative y = 0;
  Frame first;
  Frame second;
};

struct RegularityWitness {
  Alternative x = 0;  // the unframed alternative
  Frame frame;        // F
  Alternative removed = 0;  // y, compared against F \ {y}
};

struct FLuceReport {
  Verdict strong_iia = Verdict::kBlocked;
  double worst_ratio_deviation = 0.0;
  std::optional<RatioWitness> strong_iia_witness;
  Verdict f_regularity = Verdict::kBlocked;
  double worst_regularity_excess = 0.0;
  std::optional<RegularityWitness> f_regularity_witness;
  Verdict luce_iia = Verdict::kBlocked;
  Verdict positivity = Verdict::kFail;
};

// Strong Luce-IIA, F-Regularity and (diagnostic) Luce-IIA over every pair of
// observed frames. Ratios are compared by cross-multiplication.
template <class T>
FLuceReport check_axioms(const StochasticChoiceData<T>& data);

// u(x) = rho(x, {}); v(x) from the lexicographically smallest observed frame
// F with x in F and F != X. Throws PreconditionError/ModelError on missing
// cover, zero denominators or negative boosts.
template <class T>
FLuceParams<T> fit_fluce(const StochasticChoiceData<T>& data);

// v(x) identified from one specific frame F (x in F, F != X, F and {} observed).
template <class T>
T boost_from_frame(const StochasticChoiceData<T>& data, Alternative x, Frame f);

template <class T>
struct FLuceTest {
  bool accepted = false;
  FLuceReport report;
  std::optional<FLuceParams<T>> params;
  double max_reproduction_error = 0.0;
};

// Characterization test: requires n >= 3 and every frame with |F| <= 2.
template <class T>
FLuceTest<T> test_fluce(const StochasticChoiceData<T>& data);

template <class T>
struct Scaling {
  std::optional<T> alpha;  // p1 = alpha * p2
  std::string mismatch;    // offending component when alpha is empty
};

template <class T>
Scaling<T> check_scaling(const FLuceParams<T>& p1, const FLuceParams<T>& p2, double tol = 1e-9);

template <class T>
FLuceParams<T> preset_constant_boost(const std::vector<T>& u, const T& boost);
template <class T>
FLuceParams<T> preset_constant_base(const T& base, const std::vector<T>& v);
template <class T>
FLuceParams<T> preset_proportional(const std::vector<T>& u, const T& lambda);

template <class T>
struct EmbedCheck {
  bool accepted = false;
  FrumVerdict<T> verdict;
};

inline constexpr int kMaxEmbedSize = 5;

// Full-domain F-Luce data run through the FRUM test; the witness is the
// branch-independent distribution.
template <class T>
EmbedCheck<T> embed_check(const FLuceParams<T>& params, const Universe& universe);

#define FRAMECHOICE_FLUCE_EXTERN(T)                                                                  \
  extern template struct FLuceParams<T>;                                                             \
  extern template StochasticChoiceData<T> forward_fluce(const FLuceParams<T>&, const Universe&,      \
                                                        const std::vector<Frame>&, double);          \
  extern template FLuceReport check_axioms(const StochasticChoiceData<T>&);                          \
  extern template FLuceParams<T> fit_fluce(const StochasticChoiceData<T>&);                          \
  extern template T boost_from_frame(const StochasticChoiceData<T>&, Alternative, Frame);            \
  extern template FLuceTest<T> test_fluce(const StochasticChoiceData<T>&);                           \
  extern template Scaling<T> check_scaling(const FLuceParams<T>&, const FLuceParams<T>&, double);    \
  extern template FLuceParams<T> preset_constant_boost(const std::vector<T>&, const T&);             \
  extern template FLuceParams<T> preset_constant_base(const T&, const std::vector<T>&);              \
  extern template FLuceParams<T> preset_proportional(const std::vector<T>&, const T&);               \
  extern template EmbedCheck<T> embed_check(const FLuceParams<T>&, const Universe&);

FRAMECHOICE_FLUCE_EXTERN(double)
FRAMECHOICE_FLUCE_EXTERN(Rational)
#undef FRAMECHOICE_FLUCE_EXTERN

}  // namespace framechoice
