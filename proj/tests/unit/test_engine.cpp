#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "anet/engine.hpp"
#include "anet/error.hpp"
#include "anet/evaluate.hpp"
#include "anet/locality.hpp"
#include "anet/path_model.hpp"
#include "anet/tm_automaton.hpp"
#include "anet/trace_io.hpp"
#include "anet/type_automaton.hpp"
#include "corpus.hpp"
#include "hash_automaton.hpp"

using namespace anet;
using anet::testing::HashAutomaton;
using anet::testing::Rng;

namespace {

// State = size of the last received R-set.
struct CountingAutomaton {
  using State = int;
  using Message = int;
  Signature sig{{}, {"R"}};
  const Signature& signature() const { return sig; }
  int init(LabelSet) const { return -1; }
  int transit(std::span<const MessageSet<int>> received, int) const {
    return static_cast<int>(received[0].size());
  }
  int emit(int, SymbolIndex) const { return 7; }
  bool is_accepting(int) const { return false; }
  bool is_rejecting(int) const { return false; }
  std::string render(int s) const { return std::to_string(s); }
};

// State = round number; accepts/rejects at fixed rounds and keeps counting.
struct ClockAutomaton {
  using State = int;
  using Message = int;
  int accept_at = -1;
  int reject_at = -1;
  Signature sig{{}, {"R"}};
  const Signature& signature() const { return sig; }
  int init(LabelSet) const { return 0; }
  int transit(std::span<const MessageSet<int>>, int s) const { return s + 1; }
  int emit(int s, SymbolIndex) const { return s; }
  bool is_accepting(int s) const { return s == accept_at; }
  bool is_rejecting(int s) const { return s == reject_at; }
  std::string render(int s) const { return std::to_string(s); }
};

Model star(std::size_t leaves) {
  ModelBuilder b(Signature({}, {"R"}));
  b.add_node("c");
  for (std::size_t i = 0; i < leaves; ++i) {
    const NodeId v = b.add_node("l" + std::to_string(i));
    b.add_edge(0, 0, v);
  }
  return std::move(b).build();
}

Model single(const Signature& sig, LabelSet labels) {
  ModelBuilder b(sig);
  b.add_node("w");
  for (SymbolIndex p = 0; p < sig.unary().size(); ++p) {
    if (labels.contains(p)) b.add_label(p, 0);
  }
  return std::move(b).build();
}

}  // namespace

TEST(MessageSet, DeduplicatesSmallAndLarge) {
  MessageSet<int> s;
  for (int round = 0; round < 3; ++round) {
    for (int i = 0; i < 100; ++i) s.insert(i % 40);
  }
  EXPECT_EQ(s.size(), 40u);
  EXPECT_TRUE(s.contains(39));
  EXPECT_FALSE(s.contains(40));
  s.clear();
  EXPECT_TRUE(s.empty());
  s.insert(3);
  EXPECT_EQ(s.size(), 1u);
}

TEST(InitConfiguration, TypeAutomatonStartsAtLevelZeroType) {
  const Signature sig({"P"}, {"R"});
  TypeTable table(sig);
  const auto a = make_type_automaton(sig, {}, {}, table);
  const auto f = init_configuration(single(sig, LabelSet(1)), a);
  EXPECT_EQ(f.round, 0u);
  EXPECT_EQ(f.states[0], table.base_type(LabelSet(1)));
}

TEST(InitConfiguration, BareNodeAndEqualLabels) {
  const Signature sig({}, {"R"});
  const HashAutomaton a(sig, 1);
  EXPECT_EQ(init_configuration(single(sig, LabelSet()), a).states[0], a.init(LabelSet()));
  const Model path = star(3);
  const auto f = init_configuration(path, a);
  EXPECT_EQ(f.states[1], f.states[2]);
}

TEST(InitConfiguration, SignatureMismatchIsInputError) {
  const HashAutomaton a(Signature({"P"}, {"R"}), 1);
  EXPECT_THROW(init_configuration(star(1), a), InputError);
}

TEST(Step, NoSuccessorsGivesEmptySets) {
  const Signature sig({}, {"R", "S"});
  const HashAutomaton a(sig, 5);
  const Model m = single(sig, LabelSet());
  const auto f0 = init_configuration(m, a);
  const auto f1 = step(m, a, f0);
  std::vector<MessageSet<std::uint64_t>> empty(2);
  EXPECT_EQ(f1.round, 1u);
  EXPECT_EQ(f1.states[0], a.transit(empty, f0.states[0]));
}

TEST(Step, EqualMessagesCollapse) {
  const CountingAutomaton a;
  const Model m = star(2);
  const auto f1 = step(m, a, init_configuration(m, a));
  EXPECT_EQ(f1.states[0], 1);
  EXPECT_EQ(f1.states[1], 0);
}

TEST(Step, TypeAutomatonOnReflexiveNode) {
  const Signature sig({"P"}, {"R"});
  ModelBuilder b(sig);
  b.add_node("w");
  b.add_label(0, 0);
  b.add_edge(0, 0, 0);
  const Model m = std::move(b).build();
  TypeTable table(sig);
  const auto a = make_type_automaton(sig, {}, {}, table);
  const auto f1 = step(m, a, init_configuration(m, a));
  EXPECT_EQ(type_to_formula(f1.states[0], table), parse_modal("((P & <R>P) & ~<R>~P)"));
}

TEST(Run, CapZeroAndPrefixes) {
  Rng rng(2);
  const Signature sig = anet::testing::small_signature(2, 2);
  const HashAutomaton a(sig, 99);
  const Model m = anet::testing::random_model(rng, sig, 5);
  EXPECT_EQ(run(m, a, 0).configurations.size(), 1u);
  const auto t3 = run(m, a, 3);
  const auto t5 = run(m, a, 5);
  EXPECT_EQ(t5.cap(), 5u);
  for (std::size_t n = 0; n <= 3; ++n) {
    EXPECT_EQ(t3.configurations[n].states, t5.configurations[n].states);
    EXPECT_EQ(t5.configurations[n].round, n);
  }
}

TEST(Run, Deterministic) {
  Rng rng(13);
  const Signature sig = anet::testing::small_signature(2, 2);
  for (int i = 0; i < 20; ++i) {
    const Model m = anet::testing::random_model(rng, sig, 1 + i % 6);
    const HashAutomaton a(sig, i);
    const auto x = run(m, a, 6);
    const auto y = run(m, a, 6);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(x.configurations[n].states, y.configurations[n].states);
  }
}

TEST(Run, TypeAutomatonMatchesComputeTypes) {
  Rng rng(17);
  const Signature sig = anet::testing::small_signature(2, 2);
  for (int i = 0; i < 40; ++i) {
    const Model m = anet::testing::random_model(rng, sig, 1 + i % 6);
    TypeTable table(sig);
    const auto a = make_type_automaton(sig, {}, {}, table);
    const auto trace = run(m, a, 6);
    const auto levels = compute_type_levels(m, 6, table);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(trace.configurations[n].states, levels[n]);
  }
}

TEST(Verdict, AcceptRejectUndecided) {
  const Model m = star(0);
  ClockAutomaton acc;
  acc.accept_at = 2;
  EXPECT_EQ(verdict(run(m, acc, 5), acc, 0), Verdict::accept(2));
  ClockAutomaton rej;
  rej.reject_at = 1;
  EXPECT_EQ(verdict(run(m, rej, 5), rej, 0), Verdict::reject(1));
  ClockAutomaton none;
  EXPECT_EQ(verdict(run(m, none, 4), none, 0), Verdict::undecided(4));
  EXPECT_EQ(Verdict::accept(2).to_string(), "accept@2");
  EXPECT_THROW(verdict(run(m, none, 1), none, 3), InputError);
}

TEST(Verdict, FirstFinalStateWinsAndTraceContinues) {
  const Model m = star(0);
  ClockAutomaton a;
  a.accept_at = 2;
  a.reject_at = 3;
  const auto trace = run(m, a, 6);
  EXPECT_EQ(verdict(trace, a, 0), Verdict::accept(2));
  EXPECT_EQ(trace.state(6, 0), 6);
  EXPECT_FALSE(final_states_absorbing(trace, a));
  EXPECT_TRUE(converged(trace, a));
}

TEST(Verdict, StableUnderCapExtension) {
  Rng rng(23);
  const Signature sig = anet::testing::small_signature(1, 2);
  for (int i = 0; i < 30; ++i) {
    const Model m = anet::testing::random_model(rng, sig, 1 + i % 6);
    const HashAutomaton a(sig, 1000 + i);
    const auto shorter = run(m, a, 3);
    const auto longer = run(m, a, 9);
    for (NodeId w = 0; w < m.size(); ++w) {
      const Verdict v = verdict(shorter, a, w);
      if (v.decided()) {
        EXPECT_EQ(verdict(longer, a, w), v);
      }
    }
  }
}

TEST(Verdict, FinalSetsDisjointOnTraces) {
  Rng rng(29);
  const Signature sig = anet::testing::small_signature(1, 1);
  const TmAutomaton tm;
  for (int i = 0; i < 30; ++i) {
    const Model m = anet::testing::random_model(rng, sig, 1 + i % 6);
    const HashAutomaton a(sig, i);
    for (const auto& f : run(m, a, 8).configurations) {
      for (auto s : f.states) EXPECT_FALSE(a.is_accepting(s) && a.is_rejecting(s));
    }
    const Model walk = anet::testing::random_walk_model(rng, 1 + i % 6);
    for (const auto& f : run(walk, tm, 8).configurations) {
      for (const auto& s : f.states) EXPECT_FALSE(tm.is_accepting(s) && tm.is_rejecting(s));
    }
  }
}

TEST(TypeAutomaton, OverlapIsInputError) {
  const Signature sig({"P"}, {"R"});
  TypeTable table(sig);
  const TypeId t = table.base_type(LabelSet(1));
  EXPECT_THROW(make_type_automaton(sig, {t}, {t}, table), InputError);
  EXPECT_THROW(make_type_automaton(sig, {TypeId{77}}, {}, table), InputError);
  EXPECT_THROW(make_type_automaton(Signature({"Q"}, {"R"}), {}, {}, table), InputError);
}

TEST(TypeAutomaton, AcceptsExactlyPAtRoundZero) {
  const Signature sig({"P"}, {"R"});
  TypeTable table(sig);
  const auto a = make_type_automaton(sig, {table.base_type(LabelSet(1))}, {}, table);
  const ModalFormula p = parse_modal("P");
  anet::testing::for_each_model(sig, 2, [&](const Model& m) {
    const auto trace = run(m, a, 2);
    const auto truth = satisfying_nodes(m, p);
    for (NodeId w = 0; w < m.size(); ++w) {
      const Verdict v = verdict(trace, a, w);
      EXPECT_EQ(v.decided(), truth[w]);
      if (truth[w]) {
        EXPECT_EQ(v, Verdict::accept(0));
      }
    }
  });
}

TEST(TypeAutomaton, NoFinalTypesMeansUndecided) {
  const Signature sig({"P"}, {"R"});
  TypeTable table(sig);
  const auto a = make_type_automaton(sig, {}, {}, table);
  anet::testing::for_each_model(sig, 2, [&](const Model& m) {
    const auto trace = run(m, a, 3);
    for (NodeId w = 0; w < m.size(); ++w) EXPECT_EQ(verdict(trace, a, w), Verdict::undecided(3));
  });
}

TEST(TypeAutomaton, DiamondPAsTypeDisjunction) {
  const Signature sig({"P"}, {"R"});
  const ModalFormula phi = parse_modal("<R>P");
  std::vector<Model> family;
  anet::testing::for_each_model(sig, 2, [&](const Model& m) { family.push_back(m); });
  TypeTable table(sig);
  std::set<TypeId> accepting;
  for (const Model& m : family) {
    const auto types = compute_types(m, 1, table);
    const auto truth = satisfying_nodes(m, phi);
    for (NodeId w = 0; w < m.size(); ++w) {
      if (truth[w]) accepting.insert(types[w]);
    }
  }
  const auto a = make_type_automaton(sig, accepting, {}, table);
  for (const Model& m : family) {
    const auto trace = run(m, a, 1);
    const auto truth = satisfying_nodes(m, phi);
    for (NodeId w = 0; w < m.size(); ++w) EXPECT_EQ(verdict(trace, a, w).accepted(), truth[w]);
  }
}

TEST(Locality, SameModelHolds) {
  const Model m = star(2);
  const HashAutomaton a(m.signature(), 4);
  const auto check = check_type_determines_state(PointedModel(m, 0), PointedModel(m, 0), 3, a);
  EXPECT_TRUE(check.applicable);
  EXPECT_TRUE(check.holds);
}

TEST(Locality, ChainHeads) {
  const Model five = anet::testing::directed_chain(5);
  const Model six = anet::testing::directed_chain(6);
  const HashAutomaton h(five.signature(), 8);
  TypeTable table(five.signature());
  const auto t = make_type_automaton(five.signature(), {}, {}, table);
  const PointedModel a(five, 0);
  const PointedModel b(six, 0);
  for (const auto& check : {check_type_determines_state(a, b, 4, h), check_type_determines_state(a, b, 4, t)}) {
    EXPECT_TRUE(check.applicable);
    EXPECT_TRUE(check.holds);
  }
  const auto at5 = check_type_determines_state(a, b, 5, h);
  EXPECT_FALSE(at5.applicable);
  EXPECT_TRUE(at5.holds);
}

TEST(Locality, HoldsOnRandomTypeSharingPairs) {
  Rng rng(37);
  const Signature sig = anet::testing::small_signature(1, 1);
  const HashAutomaton h(sig, 77);
  std::vector<Model> models;
  for (int i = 0; i < 60; ++i) models.push_back(anet::testing::random_model(rng, sig, 1 + i % 6, 0.5, 0.25));
  int applicable = 0;
  for (std::size_t i = 0; i < models.size(); ++i) {
    for (std::size_t j = i + 1; j < models.size(); ++j) {
      const auto c = check_type_determines_state(PointedModel(models[i], 0), PointedModel(models[j], 0), 2, h);
      applicable += c.applicable;
      EXPECT_TRUE(c.holds);
    }
  }
  EXPECT_GT(applicable, 0);
}

TEST(EffectiveRunningTime, EmptyFamilyIsZero) {
  const HashAutomaton a(Signature({}, {"R"}), 1);
  EXPECT_EQ(effective_running_time(a, std::span<const PointedModel>(), 5), 0u);
}

TEST(EffectiveRunningTime, LabelledSingletons) {
  const Signature sig({"P"}, {"R"});
  TypeTable table(sig);
  const auto a =
      make_type_automaton(sig, {table.base_type(LabelSet(1))}, {table.base_type(LabelSet(0))}, table);
  const Model yes = single(sig, LabelSet(1));
  const Model no = single(sig, LabelSet(0));
  const std::vector<PointedModel> family{PointedModel(yes, 0), PointedModel(no, 0)};
  EXPECT_EQ(effective_running_time(a, std::span<const PointedModel>(family), 3), 0u);
}

TEST(EffectiveRunningTime, TmOnPathsNeedsLongerCaps) {
  std::vector<Model> paths;
  for (std::size_t len = 5; len <= 30; len += 5) paths.push_back(build_path_model(thue_morse_prefix(len)));
  std::vector<PointedModel> family;
  for (const Model& m : paths) family.emplace_back(m, m.size() / 2);
  const TmAutomaton tm;
  const auto enough = effective_running_time(tm, std::span<const PointedModel>(family), 40);
  ASSERT_TRUE(enough);
  EXPECT_FALSE(effective_running_time(tm, std::span<const PointedModel>(family), *enough - 1));
}

TEST(TraceIo, OneJsonLinePerRound) {
  const Model m = build_path_model(Word::parse("011"));
  const TmAutomaton tm;
  std::ostringstream out;
  write_trace_jsonl(out, run(m, tm, 2), tm);
  std::istringstream in(out.str());
  std::string line;
  std::vector<nlohmann::json> lines;
  while (std::getline(in, line)) lines.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0]["round"], 0);
  EXPECT_EQ(lines[0]["states"]["1"], "aux{P1,Q2}");
  EXPECT_EQ(lines[1]["states"]["1"], "({1},1,Q2,run,1)");
  EXPECT_EQ(lines[1]["states"]["0"], "({},0,Q1,halt,1)");
}

TEST(TraceIo, TypeStatesRenderAsIds) {
  const Signature sig({"P"}, {"R"});
  TypeTable table(sig);
  const auto a = make_type_automaton(sig, {}, {}, table);
  std::ostringstream out;
  write_trace_jsonl(out, run(single(sig, LabelSet(1)), a, 0), a);
  EXPECT_EQ(out.str(), "{\"round\":0,\"states\":{\"w\":\"t1\"}}\n");
}
