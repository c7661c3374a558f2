#include <gtest/gtest.h>

#include <vector>

#include "wilnot/sim.hpp"
#include "wilnot/synth.hpp"

namespace wilnot {

namespace {

std::vector<CnotGate> unit_gates(const Circuit& c) {
  std::vector<CnotGate> out;
  for (const auto& g : c.gates())
    for (int i = 0; i < g.multiplicity; ++i) out.push_back({g.control, g.target, 1});
  return out;
}

// Exact stage-2 row k of the final step: C(k - m + d - 2, d - 2) for m <= k.
long long stage2_final(int d, int k, int m) {
  if (m > k) return 0;
  long long n = k - m + d - 2, r = d - 2, acc = 1;
  for (long long i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

// Brute-force search for a_s: the unique residue that gives wire s+2 the
// coefficient (-1)^s on input label 0 after the weighted stage 3.
std::vector<int> search_a(int d) {
  std::vector<int> a;
  for (int k = 2; k <= d - 1; ++k) {
    int found = -1;
    for (int cand = 0; cand < d; ++cand) {
      std::vector<int> trial = a;
      trial.push_back(cand);
      long long coeff = stage2_final(d, k, 0);
      for (int s = 0; s <= k - 2; ++s) coeff += trial[s] * stage2_final(d, k - 2 - s, 0);
      long long want = (k % 2 == 0) ? 1 : d - 1;
      if (coeff % d == want) {
        EXPECT_EQ(found, -1) << "non-unique a at k=" << k;
        found = cand;
      }
    }
    a.push_back(found);
  }
  return a;
}

}  // namespace

TEST(Wilnot, QubitIsThreeCnotSwap) {
  Circuit c = wilnot(2);
  std::vector<CnotGate> want{{0, 1, 1}, {1, 0, 1}, {0, 1, 1}};
  EXPECT_EQ(c.gates(), want);
}

TEST(Wilnot, QutritStageSequence) {
  // U1 = (0->1)(1->2), twice; U3 = 0->2; U4 = 1->0; U5 = 2->1; U6 = 0->2; U7 = 1->2, twice.
  std::vector<CnotGate> want{{0, 1, 1}, {1, 2, 1}, {0, 1, 1}, {1, 2, 1}, {0, 2, 1},
                             {1, 0, 1}, {2, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 2, 1}};
  EXPECT_EQ(unit_gates(wilnot(3)), want);
}

TEST(Wilnot, StageMarks) {
  Circuit c = wilnot(5);
  std::vector<std::string> labels;
  for (const auto& s : c.stages()) labels.push_back(s.label);
  std::vector<std::string> want{"stage2.step1", "stage2.step2", "stage2.step3", "stage2.step4",
                                "stage3",       "stage4",       "stage5"};
  EXPECT_EQ(labels, want);
  EXPECT_EQ(c.stages().back().to, c.gates().size());
  // d = 2 has no stage-3 gates and no empty mark.
  EXPECT_FALSE(wilnot(2).find_stage("stage3"));
}

TEST(Wilnot, GateCounts) {
  EXPECT_EQ(gate_count(wilnot(5)), 33);
  for (int d : {2, 3, 5, 7, 11, 13}) EXPECT_EQ(gate_count(wilnot(d)), expected_unit_gate_count(d)) << d;
}

TEST(Wilnot, RejectsNonPrime) {
  for (int d : {0, 1, 4, 6, 9, 15}) EXPECT_THROW(wilnot(d), std::invalid_argument) << d;
}

TEST(Wilnot, CyclicShiftForPrimes) {
  for (int d : {2, 3, 5, 7, 11, 13}) {
    EXPECT_EQ(linear_map(wilnot(d)), LinearMapZd::cyclic_shift(d, d, 1)) << d;
  }
}

TEST(EtaWeights, ParityRule) {
  EXPECT_EQ(eta_weights(3, Variant::Prime).weights, (std::vector<int>{1, 2}));
  EXPECT_EQ(eta_weights(2, Variant::Prime).weights, (std::vector<int>{1}));
  EXPECT_EQ(eta_weights(4, Variant::Even).weights, (std::vector<int>{3, 1, 3}));
  EXPECT_EQ(eta_weights(7, Variant::Prime).weights, (std::vector<int>{1, 6, 1, 6, 1, 6}));
  EXPECT_THROW(eta_weights(1, Variant::Prime), std::invalid_argument);
}

TEST(ACoeffs, DimensionFour) {
  ACoeffs a = a_coeffs(4);
  ASSERT_EQ(a.values.size(), 2u);
  EXPECT_EQ(a.values[0], 3);
  EXPECT_EQ(a.values[1], 0);
}

TEST(ACoeffs, FrozenVectors) {
  EXPECT_EQ(a_coeffs(6).values, (std::vector<int>{4, 4, 1, 4}));
  EXPECT_EQ(a_coeffs(8).values, (std::vector<int>{5, 0, 3, 0, 7, 0}));
}

TEST(ACoeffs, RecurrenceAgreesWithSearch) {
  for (int d : {4, 6, 8, 10, 12}) EXPECT_EQ(a_coeffs(d).values, search_a(d)) << d;
}

TEST(ACoeffs, RejectsOddOrSmall) {
  EXPECT_THROW(a_coeffs(2), std::invalid_argument);
  EXPECT_THROW(a_coeffs(5), std::invalid_argument);
}

TEST(WilnotEven, SignedShift) {
  Circuit c = wilnot_even(4);
  EXPECT_EQ(apply_labels(c, make_labels(4, {1, 0, 0, 0})).labels, (std::vector<int>{0, 0, 0, 3}));
  EXPECT_EQ(apply_labels(c, make_labels(4, {0, 1, 2, 3})).labels, (std::vector<int>{1, 2, 3, 0}));
  for (int d : {4, 6, 8, 10}) {
    LinearMapZd want = LinearMapZd::cyclic_shift(d, d, 1);
    want.set(d - 1, 0, d - 1);
    EXPECT_EQ(linear_map(wilnot_even(d)), want) << d;
  }
}

TEST(WilnotEven, ZeroCoefficientsEmitNoGate) {
  Circuit c = wilnot_even(4);
  auto s3 = c.find_stage("stage3");
  ASSERT_TRUE(s3);
  // k = 3: controls 0 (a_1 = 0, dropped) and 1 (a_0 = 3); k = 2: control 0 (a_0 = 3).
  std::vector<CnotGate> stage3(c.gates().begin() + static_cast<long>(s3->from),
                               c.gates().begin() + static_cast<long>(s3->to));
  EXPECT_EQ(stage3, (std::vector<CnotGate>{{1, 3, 3}, {0, 2, 3}}));
}

TEST(WilnotEven, RejectsOdd) {
  EXPECT_THROW(wilnot_even(5), std::invalid_argument);
  EXPECT_THROW(wilnot_even(2), std::invalid_argument);
}

TEST(WilnotPower, Shifts) {
  EXPECT_EQ(linear_map(wilnot_power(3, 3)), LinearMapZd::identity(3, 3));
  EXPECT_EQ(linear_map(wilnot_power(5, 2)), LinearMapZd::cyclic_shift(5, 5, 2));
  EXPECT_EQ(wilnot_power(2, 1), wilnot(2));
  EXPECT_THROW(wilnot_power(3, 0), std::invalid_argument);
  EXPECT_THROW(wilnot_power(4, 1), std::invalid_argument);
}

TEST(Synthesize, Dispatch) {
  EXPECT_EQ(synthesize(5, Variant::Prime), wilnot(5));
  EXPECT_EQ(synthesize(6, Variant::Even), wilnot_even(6));
  EXPECT_THROW(synthesize(5, Variant::Custom), std::invalid_argument);
}

}  // namespace wilnot
