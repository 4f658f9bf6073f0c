#include <gtest/gtest.h>

#include "anet/error.hpp"
#include "anet/path_model.hpp"
#include "anet/structures.hpp"
#include "corpus.hpp"

using namespace anet;
using anet::testing::Rng;

namespace {

Model single_edge() {
  ModelBuilder b(Signature({"P"}, {"R"}));
  b.add_node("a");
  b.add_node("b");
  b.add_edge("R", "a", "b");
  return std::move(b).build();
}

Model undirected_path_abc() {
  ModelBuilder b(Signature({}, {"R"}));
  for (auto n : {"a", "b", "c"}) b.add_node(n);
  b.add_symmetric_edge(0, 0, 1);
  b.add_symmetric_edge(0, 1, 2);
  return std::move(b).build();
}

Model two_node_pn(std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges,
                  std::vector<std::pair<std::string, std::string>> labels, unsigned n) {
  ModelBuilder b(pn_signature(n));
  b.add_node("u");
  b.add_node("v");
  for (auto& [r, e] : edges) b.add_edge(r, e.first, e.second);
  for (auto& [p, w] : labels) b.add_label(p, w);
  return std::move(b).build();
}

}  // namespace

TEST(Signature, RejectsDuplicateNames) {
  EXPECT_THROW(Signature({"P", "P"}, {"R"}), InputError);
  EXPECT_THROW(Signature({"P"}, {"P"}), InputError);
  EXPECT_THROW(Signature({}, {"R", "R"}), InputError);
}

TEST(Signature, LooksUpIndices) {
  Signature s({"P", "Q"}, {"R", "S"});
  EXPECT_EQ(s.unary_index("Q"), 1u);
  EXPECT_EQ(s.binary_index("R"), 0u);
  EXPECT_FALSE(s.find_unary("R"));
  EXPECT_THROW(s.unary_index("X"), InputError);
}

TEST(Model, SuccessorsOfSingleEdge) {
  const Model m = single_edge();
  EXPECT_EQ(successors(m, "R", "a"), std::vector<std::string>{"b"});
  EXPECT_TRUE(successors(m, "R", "b").empty());
  EXPECT_EQ(predecessors(m, "R", "b"), std::vector<std::string>{"a"});
  EXPECT_TRUE(predecessors(m, "R", "a").empty());
}

TEST(Model, UndirectedPathNeighbours) {
  const Model m = undirected_path_abc();
  EXPECT_EQ(successors(m, "R", "b"), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(predecessors(m, "R", "b"), (std::vector<std::string>{"a", "c"}));
}

TEST(Model, UnknownNodeOrSymbolIsInputError) {
  const Model m = single_edge();
  EXPECT_THROW(successors(m, "R", "zz"), InputError);
  EXPECT_THROW(successors(m, "S", "a"), InputError);
  EXPECT_THROW(predecessors(m, "S", "a"), InputError);
}

TEST(ModelBuilder, RejectsEmptyDomainAndBadNodes) {
  EXPECT_THROW(ModelBuilder(Signature({}, {"R"})).build(), InputError);
  ModelBuilder b(Signature({"P"}, {"R"}));
  b.add_node("a");
  EXPECT_THROW(b.add_node("a"), InputError);
  EXPECT_THROW(b.add_edge("R", "a", "b"), InputError);
  EXPECT_THROW(b.add_label("P", "b"), InputError);
}

TEST(ModelBuilder, DeduplicatesPairs) {
  ModelBuilder b(Signature({}, {"R"}));
  b.add_node("a");
  b.add_edge(0, 0, 0);
  b.add_edge(0, 0, 0);
  const Model m = std::move(b).build();
  EXPECT_EQ(m.edges(0).size(), 1u);
}

TEST(PointedModel, PointMustBeInDomain) {
  const Model m = single_edge();
  EXPECT_THROW(PointedModel(m, 5), InputError);
  EXPECT_THROW(PointedModel(m, "zz"), InputError);
  EXPECT_EQ(PointedModel(m, "b").point(), 1u);
}

TEST(ModelProperty, EdgeIffSuccessorIffPredecessor) {
  Rng rng(7);
  const Signature sig = anet::testing::small_signature(2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const Model m = anet::testing::random_model(rng, sig, 1 + trial % 6);
    for (SymbolIndex r = 0; r < 2; ++r) {
      for (NodeId u = 0; u < m.size(); ++u) {
        for (NodeId v = 0; v < m.size(); ++v) {
          const auto s = m.successors(r, u);
          const auto p = m.predecessors(r, v);
          const bool in_s = std::find(s.begin(), s.end(), v) != s.end();
          const bool in_p = std::find(p.begin(), p.end(), u) != p.end();
          EXPECT_EQ(m.has_edge(r, u, v), in_s);
          EXPECT_EQ(in_s, in_p);
        }
      }
    }
  }
}

TEST(ValidateSb, TriangleIsOk) {
  ModelBuilder b(Signature({}, {"R"}));
  for (auto n : {"a", "b", "c"}) b.add_node(n);
  b.add_symmetric_edge(0, 0, 1);
  b.add_symmetric_edge(0, 1, 2);
  b.add_symmetric_edge(0, 0, 2);
  EXPECT_TRUE(validate_sb(std::move(b).build()).ok());
}

TEST(ValidateSb, ReportsLoop) {
  ModelBuilder b(Signature({}, {"R"}));
  b.add_node("a");
  b.add_edge(0, 0, 0);
  const auto report = validate_sb(std::move(b).build());
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].message, "irreflexivity at a");
}

TEST(ValidateSb, ReportsMissingReverse) {
  const auto report = validate_sb(single_edge());
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].message, "symmetry at (a,b)");
  EXPECT_EQ(report.violations[0].nodes, (std::vector<std::string>{"a", "b"}));
}

TEST(ValidateSb, NeedsExactlyOneRelation) {
  ModelBuilder b(Signature({}, {"R", "S"}));
  b.add_node("a");
  EXPECT_FALSE(validate_sb(std::move(b).build()).ok());
}

TEST(ValidateSb, PathModelsAreOk) {
  Rng rng(3);
  for (std::size_t len = 1; len <= 30; ++len) {
    EXPECT_TRUE(validate_sb(build_path_model(anet::testing::random_word(rng, len))).ok());
  }
}

TEST(ValidatePn, TwoNodeLinkIsOk) {
  const Model m = two_node_pn({{"R_1_1", {"u", "v"}}, {"R_1_1", {"v", "u"}}},
                              {{"P_1", "u"}, {"P_1", "v"}}, 1);
  EXPECT_TRUE(validate_pn(m, 1).ok()) << validate_pn(m, 1).to_string();
}

TEST(ValidatePn, IsolatedNodeIsOk) {
  ModelBuilder b(pn_signature(1));
  b.add_node("w");
  b.add_label("P_0", "w");
  EXPECT_TRUE(validate_pn(std::move(b).build(), 1).ok());
}

TEST(ValidatePn, OneSidedPortPairViolatesCondition3) {
  const Model m = two_node_pn({{"R_1_2", {"u", "v"}}}, {}, 2);
  const auto report = validate_pn(m, 2);
  EXPECT_TRUE(report.conditions().contains(3)) << report.to_string();
}

TEST(ValidatePn, SignatureMismatchNamesSymbols) {
  ModelBuilder b(Signature({"P_0", "P_1", "X"}, {"R_1_1"}));
  b.add_node("w");
  try {
    validate_pn(std::move(b).build(), 2);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("missing: P_2 R_1_2 R_2_1 R_2_2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("extra: X"), std::string::npos) << msg;
  }
}

TEST(ValidatePn, GeneratedStructuresPass) {
  Rng rng(11);
  for (unsigned n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Model m = anet::testing::random_pn_structure(rng, n, 2 + trial % 6);
      EXPECT_TRUE(validate_pn(m, n).ok()) << validate_pn(m, n).to_string();
    }
  }
}

TEST(ValidatePn, DegreeLabelMismatchViolatesCondition7) {
  const Model m = two_node_pn({{"R_1_1", {"u", "v"}}, {"R_1_1", {"v", "u"}}},
                              {{"P_1", "u"}, {"P_0", "v"}}, 1);
  EXPECT_EQ(validate_pn(m, 1).conditions(), std::set<int>{7});
}

TEST(Ball, PathBallIsSegment) {
  const Model m = build_path_model(Word::parse("0110100"));
  const Ball b = ball(m, 3, 2);
  EXPECT_EQ(b.model.size(), 5u);
  EXPECT_EQ(b.model.name(b.center), "3");
  EXPECT_EQ(b.model.domain(), (std::vector<std::string>{"1", "2", "3", "4", "5"}));
}

TEST(Isomorphism, DetectsLabelDifference) {
  const Model a = build_path_model(Word::parse("01101"));
  const Model b = build_path_model(Word::parse("01111"));
  EXPECT_TRUE(pointed_isomorphic(a, 2, a, 2));
  EXPECT_FALSE(pointed_isomorphic(a, 2, b, 2));
}

TEST(Isomorphism, RespectsPoint) {
  const Model m = undirected_path_abc();
  EXPECT_TRUE(pointed_isomorphic(m, 0, m, 2));
  EXPECT_FALSE(pointed_isomorphic(m, 0, m, 1));
}
