#include "framechoice/fluce.hpp"

#include <algorithm>

#include "framechoice/errors.hpp"

namespace framechoice {

template <class T>
void FLuceParams<T>::check() const {
  if (u.size() != v.size()) throw PreconditionError("F-Luce parameters: u and v differ in length");
  for (const T& x : u) {
    if (!(x > 0)) throw PreconditionError("F-Luce parameters: u must be positive");
  }
  for (const T& x : v) {
    if (x < 0) throw PreconditionError("F-Luce parameters: v must be nonnegative");
  }
}

template <class T>
StochasticChoiceData<T> forward_fluce(const FLuceParams<T>& params, const Universe& universe,
                                      const std::vector<Frame>& frames, double epsilon) {
  params.check();
  const int n = universe.size();
  if (static_cast<int>(params.u.size()) != n) throw PreconditionError("F-Luce parameters do not match the universe");
  T base = 0;
  for (const T& x : params.u) base += x;
  std::vector<std::pair<Frame, std::vector<T>>> rows;
  rows.reserve(frames.size());
  for (Frame f : frames) {
    T denom = base;
    for (Alternative x : f.members()) denom += params.v[static_cast<std::size_t>(x)];
    std::vector<T> row(static_cast<std::size_t>(n));
    for (Alternative x = 0; x < n; ++x) {
      T w = params.u[static_cast<std::size_t>(x)];
      if (f.contains(x)) w += params.v[static_cast<std::size_t>(x)];
      row[static_cast<std::size_t>(x)] = w / denom;
    }
    rows.emplace_back(f, std::move(row));
  }
  return StochasticChoiceData<T>(universe, std::move(rows), epsilon);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kBlocked:
      return "blocked";
  }
  return "?";
}

template <class T>
FLuceReport check_axioms(const StochasticChoiceData<T>& data) {
  FLuceReport report;
  const int n = data.n();
  const double eps = data.epsilon();
  const auto& frames = data.frames();

  bool positive = true;
  for (std::size_t i = 0; i < frames.size() && positive; ++i) {
    for (const T& p : data.row_at(i)) {
      if (is_negative(p, eps) || is_zero(p, eps)) {
        positive = false;
        break;
      }
    }
  }
  report.positivity = positive ? Verdict::kPass : Verdict::kFail;
  if (!positive) return report;

  report.strong_iia = Verdict::kPass;
  report.luce_iia = Verdict::kPass;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto r1 = data.row_at(i);
    for (std::size_t j = i + 1; j < frames.size(); ++j) {
      const auto r2 = data.row_at(j);
      const Frame stable = Frame::full(n) - (frames[i] ^ frames[j]);
      const Frame both = frames[i] & frames[j];
      for (Alternative x = 0; x < n; ++x) {
        if (!stable.contains(x)) continue;
        for (Alternative y = x + 1; y < n; ++y) {
          if (!stable.contains(y)) continue;
          const T lhs = r1[static_cast<std::size_t>(x)] * r2[static_cast<std::size_t>(y)];
          const T rhs = r1[static_cast<std::size_t>(y)] * r2[static_cast<std::size_t>(x)];
          if (approx_equal(lhs, rhs, eps)) continue;
          const double dev = std::abs(Num<T>::to_double(lhs) - Num<T>::to_double(rhs));
          if (report.strong_iia == Verdict::kPass || dev > report.worst_ratio_deviation) {
            report.worst_ratio_deviation = dev;
            report.strong_iia_witness = RatioWitness{x, y, frames[i], frames[j]};
          }
          report.strong_iia = Verdict::kFail;
          if (both.contains(x) && both.contains(y)) {
            report.luce_iia = Verdict::kFail;
          }
        }
      }
    }
  }

  report.f_regularity = Verdict::kPass;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const Frame f = frames[i];
    for (Alternative y : f.members()) {
      const Frame smaller = f.without(y);
      if (!data.contains(smaller)) continue;
      for (Alternative x = 0; x < n; ++x) {
        if (f.contains(x)) continue;
        const T excess = data.prob(x, f) - data.prob(x, smaller);
        if (!is_negative(T(-excess), eps)) continue;
        const double e = Num<T>::to_double(excess);
        if (report.f_regularity == Verdict::kPass || e > report.worst_regularity_excess) {
          report.worst_regularity_excess = e;
          report.f_regularity_witness = RegularityWitness{x, f, y};
        }
        report.f_regularity = Verdict::kFail;
      }
    }
  }
  return report;
}

template <class T>
T boost_from_frame(const StochasticChoiceData<T>& data, Alternative x, Frame f) {
  if (!f.contains(x)) throw PreconditionError("boost_from_frame: x must be framed in F");
  if (f == data.universe().full_frame()) throw PreconditionError("boost_from_frame: F must differ from X");
  const Frame none;
  if (!data.contains(none) || !data.contains(f)) throw PreconditionError("boost_from_frame: frame not observed");
  T framed_base = 0;
  T framed_own = 0;
  for (Alternative z : f.members()) {
    framed_base += data.prob(z, none);
    framed_own += data.prob(z, f);
  }
  const T denom = T(1) - framed_own;
  if (denom == 0) throw ModelError("boost_from_frame: rho(F,F) = 1 leaves the boost unidentified");
  return data.prob(x, f) * (T(1) - framed_base) / denom - data.prob(x, none);
}

template <class T>
FLuceParams<T> fit_fluce(const StochasticChoiceData<T>& data) {
  const int n = data.n();
  const Frame none;
  if (!data.contains(none)) throw PreconditionError("fit_fluce needs the empty frame");
  const Frame top = data.universe().full_frame();
  FLuceParams<T> params;
  params.u.reserve(static_cast<std::size_t>(n));
  params.v.reserve(static_cast<std::size_t>(n));
  for (Alternative x = 0; x < n; ++x) {
    const T& base = data.prob(x, none);
    if (!(base > 0)) throw ModelError("fit_fluce: rho(" + data.universe().name(x) + ",{}) is not positive");
    params.u.push_back(base);
  }
  for (Alternative x = 0; x < n; ++x) {
    std::optional<Frame> anchor;
    for (Frame f : data.frames()) {
      if (f.contains(x) && f != top && (!anchor || frame_lex_less(f, *anchor))) anchor = f;
    }
    if (!anchor) {
      throw PreconditionError("fit_fluce: no observed frame other than X frames " + data.universe().name(x));
    }
    T v = boost_from_frame(data, x, *anchor);
    if (is_negative(v, data.epsilon())) {
      throw ModelError("fit_fluce: negative boost for " + data.universe().name(x) + " (F-Regularity fails)");
    }
    if (v < 0) v = 0;
    params.v.push_back(std::move(v));
  }
  return params;
}

template <class T>
FLuceTest<T> test_fluce(const StochasticChoiceData<T>& data) {
  const int n = data.n();
  if (n < 3) throw PreconditionError("F-Luce characterization needs at least three alternatives");
  for (Frame f : frames_up_to_size(n, 2)) {
    if (!data.contains(f)) {
      throw PreconditionError("F-Luce characterization needs every frame with |F| <= 2; missing " +
                              data.universe().pretty(f));
    }
  }
  FLuceTest<T> out;
  out.report = check_axioms(data);
  if (out.report.positivity != Verdict::kPass || out.report.strong_iia != Verdict::kPass ||
      out.report.f_regularity != Verdict::kPass) {
    return out;
  }
  FLuceParams<T> params = fit_fluce(data);
  const auto forward = forward_fluce(params, data.universe(), data.frames(), data.epsilon());
  bool reproduced = true;
  for (std::size_t i = 0; i < data.frames().size(); ++i) {
    const auto a = data.row_at(i);
    const auto b = forward.row_at(i);
    for (std::size_t x = 0; x < a.size(); ++x) {
      const double err = std::abs(Num<T>::to_double(a[x]) - Num<T>::to_double(b[x]));
      out.max_reproduction_error = std::max(out.max_reproduction_error, err);
      if (!approx_equal(a[x], b[x], 8.0 * data.epsilon())) reproduced = false;
    }
  }
  out.accepted = reproduced;
  out.params = std::move(params);
  return out;
}

template <class T>
Scaling<T> check_scaling(const FLuceParams<T>& p1, const FLuceParams<T>& p2, double tol) {
  Scaling<T> out;
  if (p1.u.size() != p2.u.size() || p1.v.size() != p2.v.size() || p1.u.empty()) {
    out.mismatch = "size";
    return out;
  }
  if (!(p2.u[0] > 0)) {
    out.mismatch = "u(0)";
    return out;
  }
  const T alpha = p1.u[0] / p2.u[0];
  auto close = [&](const T& a, const T& b) {
    if constexpr (Num<T>::kExact) {
      return a == b;
    } else {
      return std::abs(a - b) <= tol * std::max(1.0, std::abs(a));
    }
  };
  for (std::size_t i = 0; i < p1.u.size(); ++i) {
    if (!close(p1.u[i], T(alpha * p2.u[i]))) {
      out.mismatch = "u(" + std::to_string(i) + ")";
      return out;
    }
  }
  for (std::size_t i = 0; i < p1.v.size(); ++i) {
    if (!close(p1.v[i], T(alpha * p2.v[i]))) {
      out.mismatch = "v(" + std::to_string(i) + ")";
      return out;
    }
  }
  if (!(alpha > 0)) {
    out.mismatch = "alpha";
    return out;
  }
  out.alpha = alpha;
  return out;
}

template <class T>
FLuceParams<T> preset_constant_boost(const std::vector<T>& u, const T& boost) {
  if (boost < 0) throw PreconditionError("constant boost must be nonnegative");
  FLuceParams<T> p{u, std::vector<T>(u.size(), boost)};
  p.check();
  return p;
}

template <class T>
FLuceParams<T> preset_constant_base(const T& base, const std::vector<T>& v) {
  if (!(base > 0)) throw PreconditionError("constant base must be positive");
  FLuceParams<T> p{std::vector<T>(v.size(), base), v};
  p.check();
  return p;
}

template <class T>
FLuceParams<T> preset_proportional(const std::vector<T>& u, const T& lambda) {
  if (lambda < 0) throw PreconditionError("proportional factor must be nonnegative");
  FLuceParams<T> p{u, {}};
  for (const T& x : u) p.v.push_back(lambda * x);
  p.check();
  return p;
}

template <class T>
EmbedCheck<T> embed_check(const FLuceParams<T>& params, const Universe& universe) {
  if (universe.size() > kMaxEmbedSize) {
    throw PreconditionError("embed_check supports n <= " + std::to_string(kMaxEmbedSize));
  }
  const auto data = forward_fluce(params, universe, all_frames(universe.size()));
  EmbedCheck<T> out;
  out.verdict = test_frum(data);
  out.accepted = out.verdict.accepted;
  return out;
}

#define FRAMECHOICE_FLUCE_INSTANTIATE(T)                                                                     \
  template struct FLuceParams<T>;                                                                            \
  template StochasticChoiceData<T> forward_fluce(const FLuceParams<T>&, const Universe&,                     \
                                                 const std::vector<Frame>&, double);                         \
  template FLuceReport check_axioms(const StochasticChoiceData<T>&);                                         \
  template FLuceParams<T> fit_fluce(const StochasticChoiceData<T>&);                                         \
  template T boost_from_frame(const StochasticChoiceData<T>&, Alternative, Frame);                           \
  template FLuceTest<T> test_fluce(const StochasticChoiceData<T>&);                                          \
  template Scaling<T> check_scaling(const FLuceParams<T>&, const FLuceParams<T>&, double);                   \
  template FLuceParams<T> preset_constant_boost(const std::vector<T>&, const T&);                            \
  template FLuceParams<T> preset_constant_base(const T&, const std::vector<T>&);                             \
  template FLuceParams<T> preset_proportional(const std::vector<T>&, const T&);                              \
  template EmbedCheck<T> embed_check(const FLuceParams<T>&, const Universe&);

FRAMECHOICE_FLUCE_INSTANTIATE(double)
FRAMECHOICE_FLUCE_INSTANTIATE(Rational)

}  // namespace framechoice
