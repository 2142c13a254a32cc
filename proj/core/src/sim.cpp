#include "framechoice/sim.hpp"

#include <cmath>

#include "framechoice/errors.hpp"

namespace framechoice {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <class T>
std::vector<T> normalized(const std::vector<double>& draws) {
  std::vector<T> out;
  out.reserve(draws.size());
  T total = 0;
  for (double d : draws) {
    out.push_back(Num<T>::from_double(d));
    total += out.back();
  }
  for (T& x : out) x /= total;
  return out;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::string_view tag) : key_(mix(mix(seed) ^ fnv1a(tag))) {}

std::uint64_t RandomStream::next_u64() { return mix(key_ + 0x632be59bd9b4e019ULL * ++counter_); }

double RandomStream::uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

double RandomStream::exponential() { return -std::log(uniform()); }

void SimConfig::check() const {
  if (n < 1 || n > kMaxAlternatives) throw PreconditionError("simulation needs 1 <= n <= 20");
  if (!(sparsity > 0.0 && sparsity <= 1.0)) throw PreconditionError("sparsity must lie in (0, 1]");
  if (!(noise >= 0.0)) throw PreconditionError("noise must be nonnegative");
}

template <class T>
TypeDistribution<T> sample_mu(const SimConfig& config) {
  config.check();
  if (config.n > kMaxFeasibilitySize) throw PreconditionError("sample_mu supports n <= 6");
  const std::vector<ChoiceType> types = enumerate_types(config.n);
  RandomStream support(config.seed, "mu.support");
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (support.uniform() < config.sparsity) kept.push_back(i);
  }
  if (kept.empty()) {
    RandomStream forced(config.seed, "mu.forced");
    kept.push_back(static_cast<std::size_t>(forced.below(types.size())));
  }
  RandomStream weights(config.seed, "mu.weights");
  std::vector<double> draws;
  for (std::size_t i = 0; i < kept.size(); ++i) draws.push_back(weights.exponential());
  const std::vector<T> w = normalized<T>(draws);
  TypeDistribution<T> mu;
  mu.universe = Universe::letters(config.n);
  for (std::size_t i = 0; i < kept.size(); ++i) mu.entries.push_back({types[kept[i]], w[i]});
  return mu;
}

template <class T>
FLuceParams<T> sample_fluce(const SimConfig& config) {
  config.check();
  RandomStream base(config.seed, "fluce.u");
  RandomStream boost(config.seed, "fluce.v");
  std::vector<double> draws;
  for (int x = 0; x < config.n; ++x) draws.push_back(base.exponential());
  FLuceParams<T> params;
  params.u = normalized<T>(draws);
  for (int x = 0; x < config.n; ++x) {
    const double gate = boost.uniform();
    const double e = boost.exponential();
    params.v.push_back(gate < 0.25 ? T(0) : Num<T>::from_double(e / config.n));
  }
  return params;
}

template <class T>
StochasticChoiceData<T> sample_arbitrary(const SimConfig& config) {
  config.check();
  RandomStream stream(config.seed, "arbitrary");
  const Universe universe = Universe::letters(config.n);
  std::vector<std::pair<Frame, std::vector<T>>> rows;
  std::vector<double> draws(static_cast<std::size_t>(config.n));
  for (std::uint32_t b = 0; b < universe.frame_count(); ++b) {
    for (double& d : draws) d = stream.exponential();
    rows.emplace_back(Frame(b), normalized<T>(draws));
  }
  return StochasticChoiceData<T>(universe, std::move(rows));
}

template <class T>
StochasticChoiceData<T> perturb(const StochasticChoiceData<T>& data, const SimConfig& config) {
  if (config.noise < 0.0) throw PreconditionError("noise must be nonnegative");
  if (config.noise == 0.0) return data;
  RandomStream stream(config.seed, "perturb");
  std::vector<std::pair<Frame, std::vector<T>>> rows;
  for (std::size_t i = 0; i < data.frames().size(); ++i) {
    const auto original = data.row_at(i);
    std::vector<T> row;
    T total = 0;
    for (const T& p : original) {
      T q = p + Num<T>::from_double(stream.uniform(-config.noise, config.noise));
      if (q < 0) q = 0;
      if (q > 1) q = 1;
      total += q;
      row.push_back(std::move(q));
    }
    if (total == 0) {
      row.assign(original.begin(), original.end());
    } else {
      for (T& q : row) q /= total;
    }
    rows.emplace_back(data.frames()[i], std::move(row));
  }
  return StochasticChoiceData<T>(data.universe(), std::move(rows), data.epsilon());
}

template <class T>
StochasticChoiceData<T> oracle_forward(const TypeDistribution<T>& mu, const std::vector<Frame>& frames, double epsilon) {
  const int n = mu.universe.size();
  std::vector<std::pair<Frame, std::vector<T>>> rows;
  for (Frame f : frames) {
    std::vector<T> row;
    for (Alternative x = 0; x < n; ++x) {
      T p = 0;
      for (const auto& e : mu.entries) {
        if (evaluate_type(e.type, f) == x) p += e.weight;
      }
      row.push_back(std::move(p));
    }
    rows.emplace_back(f, std::move(row));
  }
  return StochasticChoiceData<T>(mu.universe, std::move(rows), epsilon);
}

#define FRAMECHOICE_SIM_INSTANTIATE(T)                                                          \
  template TypeDistribution<T> sample_mu(const SimConfig&);                                      \
  template FLuceParams<T> sample_fluce(const SimConfig&);                                        \
  template StochasticChoiceData<T> sample_arbitrary(const SimConfig&);                           \
  template StochasticChoiceData<T> perturb(const StochasticChoiceData<T>&, const SimConfig&);    \
  template StochasticChoiceData<T> oracle_forward(const TypeDistribution<T>&, const std::vector<Frame>&, double);

FRAMECHOICE_SIM_INSTANTIATE(double)
FRAMECHOICE_SIM_INSTANTIATE(Rational)

}  // namespace framechoice
