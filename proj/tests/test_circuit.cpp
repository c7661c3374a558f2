#include <gtest/gtest.h>

#include <random>

#include "wilnot/circuit.hpp"
#include "wilnot/synth.hpp"

namespace wilnot {

TEST(Append, SingleGate) {
  Circuit c(3, 3);
  c.append({0, 1, 1});
  ASSERT_EQ(c.gates().size(), 1u);
  EXPECT_EQ(c.gates()[0], (CnotGate{0, 1, 1}));
}

TEST(Append, FoldsAdjacentModD) {
  Circuit c(3, 3);
  c.append({0, 1, 2}, AppendMode::FoldAdjacent);
  EXPECT_EQ(c.gates()[0].multiplicity, 2);
  c.append({0, 1, 2}, AppendMode::FoldAdjacent);
  ASSERT_EQ(c.gates().size(), 1u);
  EXPECT_EQ(c.gates()[0].multiplicity, 1);  // 4 mod 3
  c.append({0, 1, 2}, AppendMode::FoldAdjacent);
  EXPECT_TRUE(c.empty());  // 1 + 2 folds to 0
}

TEST(Append, PlainModeKeepsSeparateGatesAndDropsZero) {
  Circuit c(3, 3);
  c.append({0, 1, 2});
  c.append({0, 1, 2});
  EXPECT_EQ(c.gates().size(), 2u);
  c.append({1, 2, 3});
  c.append({1, 2, -1});
  EXPECT_EQ(c.gates().size(), 3u);
  EXPECT_EQ(c.gates().back().multiplicity, 2);
}

TEST(Append, FoldStopsAtStageBoundary) {
  Circuit c(5, 3);
  c.append({0, 1, 1});
  c.mark_stage("a", 0, 1);
  c.append({0, 1, 1}, AppendMode::FoldAdjacent);
  EXPECT_EQ(c.gates().size(), 2u);
}

TEST(Append, RejectsInvalidGates) {
  Circuit c(3, 3);
  EXPECT_THROW(c.append({0, 0, 1}), CircuitError);
  EXPECT_THROW(c.append({0, 3, 1}), CircuitError);
  EXPECT_THROW(c.append({-1, 1, 1}), CircuitError);
}

TEST(StageMarks, RejectOverlapAndOutOfRange) {
  Circuit c(3, 3);
  c.append({0, 1, 1}).append({1, 2, 1}).append({0, 2, 1});
  c.mark_stage("a", 0, 2);
  EXPECT_THROW(c.mark_stage("b", 1, 3), CircuitError);
  EXPECT_THROW(c.mark_stage("b", 2, 4), CircuitError);
  c.mark_stage("b", 2, 3);
  EXPECT_EQ(c.find_stage("b")->from, 2u);
  EXPECT_FALSE(c.find_stage("missing"));
}

TEST(Concat, IdentityElementAndCounts) {
  Circuit w = wilnot(3);
  Circuit empty(3, 3, Variant::Prime);
  EXPECT_EQ(concat(w, empty), w);
  Circuit twice = concat(w, w);
  EXPECT_EQ(gate_count(twice), 20);
  EXPECT_EQ(twice.stages().size(), 2 * w.stages().size());
  EXPECT_EQ(twice.stages().back().to, twice.gates().size());
}

TEST(Concat, DimensionMismatch) {
  EXPECT_THROW(concat(wilnot(3), wilnot(5)), CircuitError);
  EXPECT_THROW(concat(Circuit(3, 3), Circuit(3, 4)), CircuitError);
}

TEST(GateCount, Examples) {
  EXPECT_EQ(gate_count(wilnot(2)), 3);
  EXPECT_EQ(gate_count(wilnot(3)), 10);
  EXPECT_EQ(gate_count(Circuit(5, 5)), 0);
}

TEST(GateCount, AdditiveUnderConcat) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int d = 2 + static_cast<int>(rng() % 6);
    Circuit a(d, 4), b(d, 4);
    for (int i = 0; i < 12; ++i) {
      int c = static_cast<int>(rng() % 4), t = static_cast<int>(rng() % 3);
      if (t >= c) ++t;
      ((rng() & 1) ? a : b).append({c, t, static_cast<int>(rng() % 20)});
    }
    EXPECT_EQ(gate_count(concat(a, b)), gate_count(a) + gate_count(b));
  }
}

TEST(Prefix, ThroughStage) {
  Circuit w = wilnot(3);
  auto p = w.prefix_through("stage2.step1");
  ASSERT_TRUE(p);
  EXPECT_EQ(p->gates().size(), 2u);
  EXPECT_EQ(p->stages().size(), 1u);
  EXPECT_FALSE(w.prefix_through("stage9"));
}

TEST(Serialize, RoundTripSynthesized) {
  for (int d : {2, 3, 5, 7}) EXPECT_EQ(deserialize(serialize(wilnot(d))), wilnot(d));
  for (int d : {4, 6}) EXPECT_EQ(deserialize(serialize(wilnot_even(d))), wilnot_even(d));
  EXPECT_EQ(deserialize(serialize(wilnot_power(5, 3))), wilnot_power(5, 3));
}

TEST(Serialize, RoundTripRandomCircuits) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int d = 2 + static_cast<int>(rng() % 9);
    int n = 2 + static_cast<int>(rng() % 5);
    Circuit c(d, n, static_cast<Variant>(rng() % 3));
    int gates = static_cast<int>(rng() % 15);
    for (int i = 0; i < gates; ++i) {
      int ctl = static_cast<int>(rng() % n), t = static_cast<int>(rng() % (n - 1));
      if (t >= ctl) ++t;
      c.append({ctl, t, 1 + static_cast<int>(rng() % (d - 1))});
    }
    if (c.gates().size() >= 2) c.mark_stage("head", 0, c.gates().size() / 2);
    ASSERT_EQ(deserialize(serialize(c)), c);
  }
}

TEST(Deserialize, EvenVariantDocument) {
  const char* doc = R"({"dimension": 4, "wires": 4, "variant": "even",
    "gates": [{"control": 0, "target": 1, "multiplicity": 3}], "stages": []})";
  Circuit c = deserialize(doc);
  EXPECT_EQ(c.variant(), Variant::Even);
  EXPECT_EQ(c.d(), 4);
  EXPECT_EQ(c.gates()[0].multiplicity, 3);
  Circuit full = deserialize(serialize(wilnot_even(4)));
  EXPECT_EQ(full.variant(), Variant::Even);
  EXPECT_EQ(full, wilnot_even(4));
}

TEST(Deserialize, Rejections) {
  auto fails_with = [](const char* doc, const std::string& needle) {
    try {
      deserialize(doc);
    } catch (const ParseError& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  EXPECT_TRUE(fails_with(R"({"dimension":3,"wires":3,"gates":[{"control":1,"target":1,"multiplicity":1}]})",
                         "gates[0]: control equals target"));
  EXPECT_TRUE(fails_with(R"({"dimension":3,"wires":3,"gates":[],"extra":1})", "unknown field 'extra'"));
  EXPECT_TRUE(fails_with(R"({"dimension":3,"wires":3,"gates":[{"control":0,"target":1,"multiplicity":3}]})",
                         "gates[0].multiplicity"));
  EXPECT_TRUE(fails_with(R"({"dimension":3,"wires":3,"gates":[{"control":0,"target":5,"multiplicity":1}]})",
                         "gates[0].target"));
  EXPECT_TRUE(fails_with(R"({"dimension":3,"gates":[]})", "missing field 'wires'"));
  EXPECT_TRUE(fails_with(R"({"dimension":3,"wires":3,"variant":"odd","gates":[]})", "unknown variant"));
  EXPECT_TRUE(fails_with("{\"dimension\": 3,\n \"wires\": }", "line 2"));
  EXPECT_TRUE(fails_with(R"({"dimension":3,"wires":3,"gates":[{"control":0,"target":1,"multiplicity":1}],
      "stages":[{"label":"a","from":0,"to":2}]})",
                         "stages[0]"));
}

}  // namespace wilnot
