#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace skewrs;
using namespace testing_support;

TEST(Harness, RandomErrorHasExactWeight) {
  const auto L = gf4096_frob10();
  Rng rng(1);
  std::set<std::size_t> seen;
  for (std::size_t w = 0; w <= 6; ++w)
    for (int i = 0; i < 50; ++i) {
      const auto e = random_error(L, 6, w, rng);
      EXPECT_EQ(hamming_weight<FiniteField>(L, e), w);
      for (std::size_t j = 0; j < 6; ++j)
        if (!L.is_zero(e[j])) seen.insert(j);
    }
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_THROW(random_error(L, 6, 7, rng), std::invalid_argument);
}

TEST(Harness, SimulationIsDeterministic) {
  static const auto L = gf4096_frob10();
  const auto code = build_code(L, L.generator(), 0, 5);
  const SimulationOptions opts{300, {0, 1, 2, 3}, 42};
  const auto a = simulate(code, opts);
  const auto b = simulate(code, opts);
  EXPECT_TRUE(a.same_outcome(b));
  const auto c = simulate(code, SimulationOptions{300, {0, 1, 2, 3}, 43});
  EXPECT_EQ(c.trials, 300u);
}

TEST(Harness, StatsInvariants) {
  static const auto L = gf4096_frob10();
  const auto code = build_code(L, L.generator(), 0, 5);
  const auto s = simulate(code, SimulationOptions{400, {0, 1, 2, 3, 4}, 7});
  EXPECT_EQ(s.trials, 400u);
  EXPECT_EQ(s.successes + s.failures, s.trials);
  EXPECT_EQ(s.decoder_failures + s.miscorrections, s.failures);
  std::size_t trials = 0, successes = 0, echelon = 0;
  for (const auto& [w, ws] : s.per_weight) {
    trials += ws.trials;
    successes += ws.successes;
    echelon += ws.echelon;
    EXPECT_EQ(ws.trials, 80u);
    if (w <= code.correction_capability()) {
      EXPECT_EQ(ws.successes, ws.trials) << "weight " << w;
    }
  }
  EXPECT_EQ(trials, s.trials);
  EXPECT_EQ(successes, s.successes);
  EXPECT_EQ(echelon, s.echelon_branch_count);
  EXPECT_EQ(s.per_weight.at(0).echelon, 0u);
  EXPECT_EQ(s.per_weight.at(1).echelon, 0u);
}

TEST(Harness, FormatStats) {
  TrialStats s;
  s.trials = 2;
  s.successes = 2;
  s.per_weight[1] = {2, 2, 0};
  const auto text = format_stats(s);
  EXPECT_NE(text.find("trials = 2\n"), std::string::npos);
  EXPECT_NE(text.find("weight.1 = 2/2 ok, 0 echelon\n"), std::string::npos);
}

TEST(Harness, TrialSeedsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(trial_seed(1, i));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
}

TEST(Harness, NearestCodewordOracleGf8) {
  static const FiniteField L(GaloisField(2, 3), 1);
  const auto code = build_code(L, find_normal_element(L), 0, 3);
  const auto rep = nearest_codeword_oracle(code);
  EXPECT_EQ(rep.vectors_scanned, 512u);
  EXPECT_EQ(rep.min_distance, 3u);
  EXPECT_EQ(rep.disagreements, 0u);
  // 8 codewords, each with 1 + 3 * 7 words in its radius-1 ball.
  EXPECT_EQ(rep.within_radius, 8u * 22u);
  EXPECT_THROW(nearest_codeword_oracle(code, 100), std::length_error);
}
