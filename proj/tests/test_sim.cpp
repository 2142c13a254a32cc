#include <gtest/gtest.h>

#include <set>

#include "framechoice/errors.hpp"
#include "framechoice/sim.hpp"
#include "test_support.hpp"

namespace framechoice {
namespace {

using testing::as_map;
using testing::max_row_gap;

TEST(RandomStream, DeterministicPerSeedAndTag) {
  RandomStream a(7, "x");
  RandomStream b(7, "x");
  RandomStream c(7, "y");
  RandomStream d(8, "x");
  bool differs_tag = false;
  bool differs_seed = false;
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    EXPECT_EQ(va, b.next_u64());
    differs_tag = differs_tag || va != c.next_u64();
    differs_seed = differs_seed || va != d.next_u64();
  }
  EXPECT_TRUE(differs_tag);
  EXPECT_TRUE(differs_seed);
}

TEST(RandomStream, UniformMoments) {
  RandomStream s(1, "moments");
  const int count = 20000;
  double sum = 0.0;
  double sum_exp = 0.0;
  for (int i = 0; i < count; ++i) {
    const double u = s.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sum_exp += s.exponential();
  }
  EXPECT_NEAR(sum / count, 0.5, 0.01);
  EXPECT_NEAR(sum_exp / count, 1.0, 0.03);
}

TEST(Config, Validation) {
  SimConfig c;
  c.n = 0;
  EXPECT_THROW(c.check(), PreconditionError);
  c.n = 21;
  EXPECT_THROW(c.check(), PreconditionError);
  c.n = 3;
  c.sparsity = 0.0;
  EXPECT_THROW(c.check(), PreconditionError);
  c.sparsity = 1.5;
  EXPECT_THROW(c.check(), PreconditionError);
  c.sparsity = 1.0;
  c.noise = -0.1;
  EXPECT_THROW(c.check(), PreconditionError);
  c.noise = 0.0;
  EXPECT_NO_THROW(c.check());
}

TEST(SampleMu, DeterministicAndNormalized) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SimConfig c;
    c.seed = seed;
    c.n = 3;
    c.sparsity = 0.3;
    const auto a = sample_mu<Rational>(c);
    const auto b = sample_mu<Rational>(c);
    EXPECT_EQ(as_map(a), as_map(b));
    EXPECT_EQ(a.total(), Rational(1));
    EXPECT_FALSE(a.entries.empty());
    for (const auto& e : a.entries) EXPECT_GT(e.weight, 0);
  }
}

TEST(SampleMu, FullSparsityUsesEveryType) {
  SimConfig c;
  c.n = 3;
  EXPECT_EQ(sample_mu<double>(c).entries.size(), 33u);
}

TEST(SampleMu, SparsityThinsSupport) {
  std::size_t kept = 0;
  const int seeds = 40;
  for (int seed = 0; seed < seeds; ++seed) {
    SimConfig c;
    c.seed = static_cast<std::uint64_t>(seed);
    c.n = 4;
    c.sparsity = 0.1;
    kept += sample_mu<double>(c).entries.size();
  }
  const double mean = static_cast<double>(kept) / seeds;
  EXPECT_NEAR(mean, 19.6, 4.0);
}

TEST(SampleMu, ForcedTypeWhenNothingKept) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SimConfig c;
    c.seed = seed;
    c.n = 1;
    c.sparsity = 1e-6;
    const auto mu = sample_mu<double>(c);
    ASSERT_EQ(mu.entries.size(), 1u);
    EXPECT_DOUBLE_EQ(mu.entries[0].weight, 1.0);
  }
  SimConfig big;
  big.n = 7;
  EXPECT_THROW(sample_mu<double>(big), PreconditionError);
}

TEST(SampleFluce, ShapeAndNormalization) {
  int zero_boosts = 0;
  int total = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SimConfig c;
    c.seed = seed;
    c.n = 5;
    const auto p = sample_fluce<Rational>(c);
    EXPECT_NO_THROW(p.check());
    Rational sum = 0;
    for (const auto& u : p.u) sum += u;
    EXPECT_EQ(sum, Rational(1));
    for (const auto& v : p.v) {
      zero_boosts += v == 0 ? 1 : 0;
      ++total;
    }
    const auto q = sample_fluce<Rational>(c);
    EXPECT_EQ(p.u, q.u);
    EXPECT_EQ(p.v, q.v);
  }
  EXPECT_NEAR(static_cast<double>(zero_boosts) / total, 0.25, 0.08);
}

TEST(SampleArbitrary, FullDomainRows) {
  SimConfig c;
  c.seed = 3;
  c.n = 4;
  const auto d = sample_arbitrary<Rational>(c);
  EXPECT_TRUE(d.is_full_domain());
  for (std::size_t i = 0; i < d.frames().size(); ++i) {
    Rational sum = 0;
    for (const auto& p : d.row_at(i)) sum += p;
    EXPECT_EQ(sum, Rational(1));
  }
  EXPECT_EQ(d, sample_arbitrary<Rational>(c));
}

TEST(Perturb, ZeroNoiseIsIdentity) {
  SimConfig c;
  c.n = 3;
  const auto d = sample_arbitrary<double>(c);
  EXPECT_EQ(perturb(d, c), d);
}

TEST(Perturb, RowsStayDistributions) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SimConfig c;
    c.seed = seed;
    c.n = 3;
    c.noise = 0.3;
    const auto d = forward_frum(sample_mu<double>(c), all_frames(3));
    const auto p = perturb(d, c);
    EXPECT_EQ(p, perturb(d, c));
    for (std::size_t i = 0; i < p.frames().size(); ++i) {
      double sum = 0.0;
      for (double x : p.row_at(i)) {
        EXPECT_GE(x, 0.0);
        sum += x;
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(Perturb, SmallNoiseStaysClose) {
  SimConfig c;
  c.seed = 11;
  c.n = 4;
  c.noise = 1e-3;
  const auto d = sample_arbitrary<double>(c);
  EXPECT_LT(max_row_gap(d, perturb(d, c)), 5e-3);
}

TEST(OracleForward, MatchesForwardFrum) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SimConfig c;
    c.seed = seed;
    c.n = 1 + static_cast<int>(seed % 5);
    c.sparsity = 0.4;
    const auto mu = sample_mu<Rational>(c);
    const auto frames = all_frames(c.n);
    EXPECT_EQ(oracle_forward(mu, frames), forward_frum(mu, frames)) << seed;
  }
}

TEST(OracleForward, SixTypeMix) {
  TypeDistribution<Rational> mu;
  mu.universe = Universe({"a", "b"});
  mu.entries = {{{{0}, 0}, Rational(1, 10)},       {{{1}, 0}, Rational(3, 10)}, {{{0, 1}, 0}, Rational(1, 5)},
                {{{1, 0}, 1}, Rational(3, 10)},    {{{0, 1}, 1}, Rational(1, 10)}};
  const auto d = oracle_forward(mu, all_frames(2));
  EXPECT_EQ(d.prob(0, Frame(3)), Rational(2, 5));
  EXPECT_EQ(d.prob(0, Frame(1)), Rational(7, 10));
  EXPECT_EQ(d.prob(0, Frame(2)), Rational(1, 10));
  EXPECT_EQ(d.prob(0, Frame(0)), Rational(3, 5));
}

TEST(Pipeline, SampledMuPassesFrum) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    SimConfig c;
    c.seed = seed;
    c.n = 3 + static_cast<int>(seed % 2);
    c.sparsity = 0.5;
    const auto d = forward_frum(sample_mu<Rational>(c), all_frames(c.n));
    EXPECT_TRUE(test_frum(d).accepted) << seed;
  }
}

}  // namespace
}  // namespace framechoice
