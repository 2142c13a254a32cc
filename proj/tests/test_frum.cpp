#include <gtest/gtest.h>

#include "framechoice/errors.hpp"
#include "framechoice/frum.hpp"
#include "framechoice/sim.hpp"
#include "test_support.hpp"

namespace framechoice {
namespace {

using testing::load_data;
using testing::num;

// The six choice types over {a, b}, c1..c6.
const ChoiceType kC[6] = {{{0}, 0}, {{1}, 0}, {{0, 1}, 0}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 0}};

template <class T>
TypeDistribution<T> six_types(const char* w1, const char* w2, const char* w3, const char* w4, const char* w5,
                           const char* w6) {
  TypeDistribution<T> mu;
  mu.universe = Universe({"a", "b"});
  const char* w[6] = {w1, w2, w3, w4, w5, w6};
  for (int i = 0; i < 6; ++i) {
    if (num<T>(w[i]) != 0) mu.entries.push_back({kC[i], num<T>(w[i])});
  }
  std::sort(mu.entries.begin(), mu.entries.end(),
            [](const WeightedType<T>& a, const WeightedType<T>& b) { return a.type < b.type; });
  return mu;
}

TEST(TypeLabels, SixTypesBehaveAsListed) {
  // c1 always a; c2 always b; the others follow their priority/default.
  for (std::uint32_t f = 0; f < 4; ++f) {
    EXPECT_EQ(evaluate_type(kC[0], Frame(f)), 0);
    EXPECT_EQ(evaluate_type(kC[1], Frame(f)), 1);
  }
  EXPECT_EQ(evaluate_type(kC[2], Frame(2)), 1);
  EXPECT_EQ(evaluate_type(kC[2], Frame(0)), 0);
  EXPECT_EQ(evaluate_type(kC[3], Frame(1)), 0);
  EXPECT_EQ(evaluate_type(kC[3], Frame(3)), 1);
}

TEST(TestFrum, IntroRejectedWithLeakWitness) {
  const auto verdict = test_frum(load_data<Rational>("intro.csv"));
  EXPECT_FALSE(verdict.accepted);
  ASSERT_FALSE(verdict.violations.empty());
  const auto& v = verdict.violations.front();
  EXPECT_EQ(v.kind, ViolationKind::kY);
  EXPECT_EQ(v.alternative, 0);
  EXPECT_EQ(v.frame, Frame());
  EXPECT_EQ(v.value, Rational(-1, 10));
  bool saw_q = false;
  for (const auto& w : verdict.violations) {
    saw_q = saw_q || (w.kind == ViolationKind::kQ && w.alternative == 0 && w.frame == Frame(1));
  }
  EXPECT_TRUE(saw_q);
  EXPECT_FALSE(verdict.witness.has_value());

  const auto fv = test_frum(load_data<double>("intro.csv"));
  EXPECT_FALSE(fv.accepted);
  EXPECT_NEAR(fv.violations.front().value, -0.1, 1e-12);
}

TEST(TestFrum, TwoAlternativeAcceptedAndWitnessed) {
  const auto verdict = test_frum(testing::two_alt(num<Rational>("0.4"), num<Rational>("0.6")));
  EXPECT_TRUE(verdict.accepted);
  EXPECT_TRUE(verdict.violations.empty());
  ASSERT_TRUE(verdict.witness.has_value());
  EXPECT_EQ(verdict.witness->total(), Rational(1));
}

TEST(TestFrum, SmallGammaRejected) {
  const auto verdict = test_frum(testing::two_alt(num<Rational>("0.4"), num<Rational>("0.05")));
  EXPECT_FALSE(verdict.accepted);
  ASSERT_EQ(verdict.violations.size(), 1u);
  EXPECT_EQ(verdict.violations[0].kind, ViolationKind::kY);
  EXPECT_EQ(verdict.violations[0].value, num<Rational>("-0.05"));
}

TEST(TestFrum, BoundaryGrid) {
  for (int i = 0; i < 15; ++i) {
    for (int j = 0; j < 15; ++j) {
      const Rational lambda = Rational(5 + 5 * i, 100);
      const Rational gamma = Rational(5 + 5 * j, 100);
      const bool inside = lambda >= Rational(1, 10) && lambda <= Rational(7, 10) && gamma >= Rational(1, 10) &&
                          gamma <= Rational(7, 10);
      EXPECT_EQ(test_frum(testing::two_alt(lambda, gamma)).accepted, inside) << lambda << " " << gamma;
      const bool floating = test_frum(testing::two_alt(lambda.convert_to<double>(), gamma.convert_to<double>())).accepted;
      EXPECT_EQ(floating, inside) << lambda << " " << gamma;
    }
  }
}

TEST(TestFrum, PartialDomainIsFalsificationOnly) {
  const auto rejected = test_frum(load_data<Rational>("intro_partial.csv"));
  EXPECT_FALSE(rejected.accepted);
  EXPECT_TRUE(rejected.falsification_only);
  ASSERT_EQ(rejected.violations.size(), 1u);
  EXPECT_EQ(rejected.violations[0].kind, ViolationKind::kInterimY);

  const auto fine = test_frum(parse_stochastic<Rational>("frame,alternative,probability\n,a,0.5\n,b,0.5\n"));
  EXPECT_TRUE(fine.accepted);
  EXPECT_TRUE(fine.falsification_only);
}

TEST(Recovery, BranchIndependentSixTypes) {
  const auto data = testing::two_alt(num<Rational>("0.4"), num<Rational>("0.6"));
  const auto mu = recover_branch_independent(data);
  const auto expected = six_types<Rational>("0.1", "0.3", "0.25", "0.25", "0.05", "0.05");
  EXPECT_EQ(testing::as_map(mu), testing::as_map(expected));

  // Single path q(a,{a,b}) -> q(b,{b}) -> y(a,{}) by the product formula.
  const auto t = compute_bm(data);
  const Rational top = t.q(0, Frame(3)) + t.q(1, Frame(3));
  const Rational mid = t.q(1, Frame(2)) + t.y(0, Frame(2));
  const Rational bottom = t.y(0, Frame()) + t.y(1, Frame());
  const Rational path = t.q(0, Frame(3)) / top * (t.q(1, Frame(2)) / mid) * (t.y(0, Frame()) / bottom);
  EXPECT_EQ(path, Rational(1, 4));
  EXPECT_EQ(mu.weight_of(kC[2]), path);
}

TEST(Recovery, ConstructiveMatchesBranch) {
  const auto data = testing::two_alt(num<Rational>("0.4"), num<Rational>("0.6"));
  EXPECT_EQ(testing::as_map(recover_constructive(data)), testing::as_map(recover_branch_independent(data)));
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    SimConfig config;
    config.seed = seed;
    config.n = 3;
    const auto mu = sample_mu<Rational>(config);
    const auto fwd = forward_frum(mu, all_frames(3));
    EXPECT_EQ(testing::as_map(recover_constructive(fwd)), testing::as_map(recover_branch_independent(fwd)));

    const auto mu_f = sample_mu<double>(config);
    const auto fwd_f = forward_frum(mu_f, all_frames(3));
    const auto a = testing::as_map(recover_constructive(fwd_f));
    const auto b = testing::as_map(recover_branch_independent(fwd_f));
    for (const auto& [type, w] : b) {
      const double other = a.count(type) ? a.at(type) : 0.0;
      EXPECT_NEAR(w, other, 8e-9);
    }
  }
}

TEST(Recovery, PointMassIsRecovered) {
  const ChoiceType t{{2, 0}, 1};
  TypeDistribution<Rational> mu;
  mu.universe = Universe::letters(3);
  mu.entries.push_back({t, Rational(1)});
  const auto data = forward_frum(mu, all_frames(3));
  const auto back = recover_branch_independent(data);
  ASSERT_EQ(back.entries.size(), 1u);
  EXPECT_EQ(back.entries[0].type, t);
  EXPECT_EQ(back.entries[0].weight, Rational(1));
}

TEST(Recovery, SingleAlternative) {
  const auto data = parse_stochastic<Rational>("frame,alternative,probability\n,a,1\na,a,1\n");
  const auto mu = recover_constructive(data);
  ASSERT_EQ(mu.entries.size(), 1u);
  EXPECT_EQ(mu.entries[0].type, (ChoiceType{{0}, 0}));
}

TEST(Recovery, RejectedDataThrows) {
  EXPECT_THROW(recover_branch_independent(load_data<Rational>("intro.csv")), ModelError);
  EXPECT_THROW(recover_constructive(load_data<double>("intro.csv")), ModelError);
}

TEST(Recovery, RoundTripOnModelData) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SimConfig config;
    config.seed = seed;
    config.n = 2 + static_cast<int>(seed % 3);
    config.sparsity = seed % 2 ? 1.0 : 0.3;
    const auto mu = sample_mu<Rational>(config);
    const auto data = forward_frum(mu, all_frames(config.n));
    ASSERT_TRUE(test_frum(data).accepted);
    const auto back = recover_branch_independent(data);
    EXPECT_TRUE(forward_frum(back, all_frames(config.n)) == data);

    const auto mu_f = sample_mu<double>(config);
    const auto data_f = forward_frum(mu_f, all_frames(config.n));
    ASSERT_TRUE(test_frum(data_f).accepted);
    EXPECT_LE(testing::max_row_gap(forward_frum(recover_branch_independent(data_f), all_frames(config.n)), data_f),
              8e-9);
  }
}

TEST(Forward, SixTypeMixGivesTwoAlternativeData) {
  const auto data = forward_frum(six_types<Rational>("0.1", "0.3", "0.2", "0.3", "0.1", "0"), all_frames(2));
  EXPECT_EQ(data.prob(0, Frame(3)), num<Rational>("0.4"));
  EXPECT_EQ(data.prob(0, Frame(1)), num<Rational>("0.7"));
  EXPECT_EQ(data.prob(0, Frame(2)), num<Rational>("0.1"));
  EXPECT_EQ(data.prob(0, Frame(0)), num<Rational>("0.6"));
  const auto other = forward_frum(six_types<Rational>("0.1", "0.3", "0.3", "0.2", "0", "0.1"), all_frames(2));
  EXPECT_TRUE(other == data);
}

TEST(Forward, UniformOverTwoAlternativeTypes) {
  TypeDistribution<Rational> mu;
  mu.universe = Universe({"a", "b"});
  int default_a = 0;
  for (const ChoiceType& t : enumerate_types(2)) {
    mu.entries.push_back({t, Rational(1, 6)});
    default_a += t.default_alternative() == 0;
  }
  const auto data = forward_frum(mu, {Frame()});
  EXPECT_EQ(data.prob(0, Frame()), Rational(default_a, 6));
}

TEST(Forward, PointMassIsDeterministic) {
  TypeDistribution<double> mu;
  mu.universe = Universe::letters(3);
  const ChoiceType t{{1}, 0};
  mu.entries.push_back({t, 1.0});
  const auto data = forward_frum(mu, all_frames(3));
  for (Frame f : data.frames()) {
    for (Alternative x = 0; x < 3; ++x) EXPECT_EQ(data.prob(x, f), x == evaluate_type(t, f) ? 1.0 : 0.0);
  }
}

TEST(TypeClauses, HoldsForEverySixTypeRepresentation) {
  const auto data = testing::two_alt(num<Rational>("0.4"), num<Rational>("0.6"));
  for (const auto& mu : {six_types<Rational>("0.1", "0.3", "0.2", "0.3", "0.1", "0"),
                         six_types<Rational>("0.1", "0.3", "0.25", "0.25", "0.05", "0.05"),
                         six_types<Rational>("0.1", "0.3", "0.3", "0.2", "0", "0.1")}) {
    const auto r = check_type_clauses(data, mu);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.max_leak_discrepancy, 0);
    EXPECT_EQ(r.max_edge_discrepancy, 0);
    EXPECT_EQ(r.checked, 4);
  }
  const auto mu = six_types<Rational>("0.1", "0.3", "0.2", "0.3", "0.1", "0");
  EXPECT_EQ(mu.weight_of(kC[2]) + mu.weight_of(kC[3]), compute_bm(data).y(0, Frame()));
}

TEST(TypeClauses, RandomModelData) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SimConfig config;
    config.seed = seed;
    config.n = 3;
    const auto mu = sample_mu<Rational>(config);
    EXPECT_TRUE(check_type_clauses(forward_frum(mu, all_frames(3)), mu).passed);
  }
}

TEST(TypeClauses, WrongDistributionFails) {
  const auto data = testing::two_alt(num<Rational>("0.4"), num<Rational>("0.6"));
  EXPECT_FALSE(check_type_clauses(data, six_types<Rational>("1", "0", "0", "0", "0", "0")).passed);
}

TEST(Feasible, IntroPartialHasInterimCertificate) {
  for (const char* file : {"intro_partial.csv", "intro_partial_n4.csv"}) {
    const auto f = feasible_completion(load_data<Rational>(file));
    EXPECT_FALSE(f.feasible) << file;
    ASSERT_TRUE(f.interim.has_value()) << file;
    EXPECT_EQ(f.interim->kind, ViolationKind::kInterimY);
    EXPECT_EQ(f.interim->alternative, 0);
    EXPECT_EQ(f.interim->frame, Frame());
    EXPECT_EQ(f.interim->upper, Frame(6));
    EXPECT_EQ(f.interim->value, Rational(-1, 10));
  }
}

TEST(Feasible, TwoAlternativeHasVertexWitness) {
  const auto data = testing::two_alt(num<Rational>("0.4"), num<Rational>("0.6"));
  const auto f = feasible_completion(data);
  ASSERT_TRUE(f.feasible);
  ASSERT_TRUE(f.witness.has_value());
  EXPECT_TRUE(forward_frum(*f.witness, data.frames()) == data);
  EXPECT_TRUE(check_type_clauses(data, *f.witness).passed);
}

TEST(Feasible, SingleObservation) {
  const auto data = parse_stochastic<Rational>("frame,alternative,probability\n,a,0.5\n,b,0.5\n");
  const auto f = feasible_completion(data);
  ASSERT_TRUE(f.feasible);
  EXPECT_TRUE(forward_frum(*f.witness, data.frames()) == data);
}

TEST(Feasible, FarkasWhenNoInterimApplies) {
  // {a} and {b} are not nested, so no interim polynomial is computable.
  const auto data = parse_stochastic<Rational>(
      "frame,alternative,probability\na,a,0\na,b,1\na,c,0\nb,a,0\nb,b,0\nb,c,1\n");
  EXPECT_TRUE(interim_violations(data).empty());
  const auto f = feasible_completion(data);
  EXPECT_FALSE(f.feasible);
  EXPECT_FALSE(f.interim.has_value());
  EXPECT_FALSE(f.farkas.empty());
  const auto ff = feasible_completion(parse_stochastic<double>(
      "frame,alternative,probability\na,a,0\na,b,1\na,c,0\nb,a,0\nb,b,0\nb,c,1\n"));
  EXPECT_FALSE(ff.feasible);
}

TEST(Feasible, AgreesWithFullDomainTest) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SimConfig config;
    config.seed = seed;
    config.n = 2 + static_cast<int>(seed % 2);
    const auto data = sample_arbitrary<Rational>(config);
    EXPECT_EQ(feasible_completion(data).feasible, test_frum(data).accepted) << seed;
  }
}

TEST(Feasible, TooManyAlternatives) {
  SimConfig config;
  config.n = 7;
  EXPECT_THROW(feasible_completion(sample_arbitrary<double>(config)), PreconditionError);
}

}  // namespace
}  // namespace framechoice
