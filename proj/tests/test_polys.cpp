#include <gtest/gtest.h>

#include "framechoice/errors.hpp"
#include "framechoice/polys.hpp"
#include "framechoice/sim.hpp"
#include "test_support.hpp"

namespace framechoice {
namespace {

using testing::load_data;
using testing::num;

TEST(Bm, IntroLeakIsNegativeTenth) {
  const auto exact = compute_bm(load_data<Rational>("intro.csv"));
  EXPECT_EQ(exact.y(0, Frame()), Rational(-1, 10));
  EXPECT_EQ(exact.q(0, Frame(1)), Rational(-1, 10));
  const auto approx = compute_bm(load_data<double>("intro.csv"));
  EXPECT_NEAR(approx.y(0, Frame()), -0.1, 1e-12);
}

TEST(Bm, TwoAlternativeLabels) {
  // y(a,{}) = gamma - 0.1 and the remaining labels of the lattice.
  const auto t = compute_bm(testing::two_alt(num<Rational>("0.4"), num<Rational>("0.6")));
  EXPECT_EQ(t.y(0, Frame()), Rational(1, 2));
  EXPECT_EQ(t.y(1, Frame()), num<Rational>("0.4") - num<Rational>("0.3"));
  EXPECT_EQ(t.q(0, Frame(3)), Rational(2, 5));
  EXPECT_EQ(t.q(1, Frame(3)), Rational(3, 5));
  EXPECT_EQ(t.q(0, Frame(1)), Rational(3, 10));
  EXPECT_EQ(t.q(1, Frame(2)), Rational(3, 10));
}

TEST(Bm, AccessorsCheckMembership) {
  const auto t = compute_bm(load_data<double>("two_alt.csv"));
  EXPECT_THROW(t.q(0, Frame()), PreconditionError);
  EXPECT_THROW(t.y(0, Frame(1)), PreconditionError);
}

TEST(Bm, RequiresFullDomain) {
  EXPECT_THROW(compute_bm(load_data<double>("intro_partial.csv")), PreconditionError);
}

TEST(Bm, MatchesNaiveSumOnRandomData) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SimConfig config;
    config.seed = seed;
    config.n = 1 + static_cast<int>(seed % 5);
    const auto data = sample_arbitrary<Rational>(config);
    const auto table = compute_bm(data);
    for (std::uint32_t b = 0; b < data.universe().frame_count(); ++b) {
      for (Alternative a = 0; a < data.n(); ++a) {
        ASSERT_EQ(table.at(a, Frame(b)), testing::naive_bm(data, a, Frame(b)));
      }
    }
  }
}

TEST(Bm, SingleAlternative) {
  const auto d = parse_stochastic<Rational>("frame,alternative,probability\n,a,1\na,a,1\n");
  const auto t = compute_bm(d);
  EXPECT_EQ(t.q(0, Frame(1)), Rational(1));
  EXPECT_EQ(t.y(0, Frame()), Rational(1));
}

TEST(Flow, ResidualsVanishForArbitraryRules) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SimConfig config;
    config.seed = seed;
    config.n = 2 + static_cast<int>(seed % 4);
    for (const Rational& r : flow_residuals(compute_bm(sample_arbitrary<Rational>(config)))) ASSERT_EQ(r, 0);
    for (double r : flow_residuals(compute_bm(sample_arbitrary<double>(config)))) ASSERT_LE(std::abs(r), 8e-9);
  }
}

TEST(Flow, InflowAtTopIsOne) {
  const auto t = compute_bm(load_data<Rational>("intro.csv"));
  EXPECT_EQ(inflow(t, Frame(7)), Rational(1));
}

TEST(Interim, SecondExampleSlice) {
  const auto partial = load_data<Rational>("second_partial.csv");
  EXPECT_EQ(interim_q(partial, 0, Frame(1), Frame(7)), Rational(-1, 10));
}

TEST(Interim, IntroPartialLeak) {
  const auto partial = load_data<Rational>("intro_partial.csv");
  EXPECT_EQ(interim_y(partial, 0, Frame(), Frame(6)), Rational(-1, 10));
  EXPECT_THROW(interim_y(partial, 0, Frame(), Frame(7)), PreconditionError);
  EXPECT_THROW(interim_y(partial, 1, Frame(), Frame(6)), PreconditionError);
  EXPECT_THROW(interim_q(partial, 0, Frame(), Frame(6)), PreconditionError);
}

TEST(Interim, DecomposesIntoLeakPolynomials) {
  // Y(a,F,F') = sum over C ⊇ F with C ∩ F' = F of y(a,C).
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SimConfig config;
    config.seed = seed;
    config.n = 4;
    const auto data = sample_arbitrary<Rational>(config);
    const auto table = compute_bm(data);
    for (std::uint32_t lo = 0; lo < 16; ++lo) {
      for (std::uint32_t hi = 0; hi < 16; ++hi) {
        const Frame f(lo);
        const Frame g(hi);
        if (!f.subset_of(g)) continue;
        for (Alternative a = 0; a < 4; ++a) {
          if (g.contains(a)) continue;
          Rational expected = 0;
          for (std::uint32_t c = 0; c < 16; ++c) {
            const Frame cf(c);
            if (f.subset_of(cf) && (cf & g) == f && !cf.contains(a)) expected += table.at(a, cf);
          }
          ASSERT_EQ(interim_y(data, a, f, g), expected);
        }
      }
    }
  }
}

TEST(Hasse, EdgeCountsAndLabels) {
  const auto t = compute_bm(load_data<Rational>("two_alt.csv"));
  const HasseGraph g = export_hasse(t);
  EXPECT_EQ(g.nodes.size(), 4u);
  EXPECT_EQ(g.q_edges.size(), 4u);     // n 2^(n-1)
  EXPECT_EQ(g.leak_edges.size(), 4u);
  bool found = false;
  for (const HasseEdge& e : g.leak_edges) {
    if (e.from == Frame() && e.alternative == 0) {
      EXPECT_EQ(e.label, "1/2");
      found = true;
    }
  }
  EXPECT_TRUE(found);
  const std::string dot = to_dot(g, Universe({"a", "b"}));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("\"{a,b}\" -> \"{b}\""), std::string::npos);
}

}  // namespace
}  // namespace framechoice
