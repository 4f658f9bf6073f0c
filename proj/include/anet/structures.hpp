#ifndef ANET_STRUCTURES_HPP
#define ANET_STRUCTURES_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace anet {

/// Index of a node in a model's domain. Iteration always follows this order.
using NodeId = std::size_t;
/// Position of a symbol inside the unary or binary list of a Signature.
using SymbolIndex = std::size_t;

/// Subset of the unary symbols of a signature; bit i stands for unary symbol i.
class LabelSet {
 public:
  static constexpr std::size_t kMaxSymbols = 64;

  constexpr LabelSet() = default;
  constexpr explicit LabelSet(std::uint64_t bits) : bits_(bits) {}

  constexpr bool contains(SymbolIndex i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(SymbolIndex i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(SymbolIndex i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }

  friend constexpr auto operator<=>(LabelSet, LabelSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Unary symbols (Π) and binary symbols (R_1..R_k), each list ordered and
/// duplicate-free; no name may appear in both lists.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<std::string> unary, std::vector<std::string> binary);

  const std::vector<std::string>& unary() const { return unary_; }
  const std::vector<std::string>& binary() const { return binary_; }

  std::optional<SymbolIndex> find_unary(std::string_view name) const;
  std::optional<SymbolIndex> find_binary(std::string_view name) const;
  // Throwing lookups (InputError on unknown names).
  SymbolIndex unary_index(std::string_view name) const;
  SymbolIndex binary_index(std::string_view name) const;

  /// "{P,Q}" in signature order.
  std::string describe(LabelSet labels) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.unary_ == b.unary_ && a.binary_ == b.binary_;
  }

 private:
  std::vector<std::string> unary_;
  std::vector<std::string> binary_;
};

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite relational structure over a Signature. Immutable once built;
/// construct through ModelBuilder.
class Model {
 public:
  const Signature& signature() const { return signature_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& domain() const { return names_; }
  const std::string& name(NodeId w) const { return names_.at(w); }

  std::optional<NodeId> find(std::string_view name) const;
  NodeId node(std::string_view name) const;  // InputError if absent

  LabelSet labels(NodeId w) const { return labels_[w]; }
  bool has_label(SymbolIndex p, NodeId w) const { return labels_[w].contains(p); }
  /// Members of P^M in domain order.
  std::span<const NodeId> members(SymbolIndex p) const { return members_[p]; }

  /// Pairs of R^M sorted by (from, to) in domain order.
  std::span<const Edge> edges(SymbolIndex r) const { return relations_[r].edges; }
  std::span<const NodeId> successors(SymbolIndex r, NodeId w) const {
    return relations_[r].succ[w];
  }
  std::span<const NodeId> predecessors(SymbolIndex r, NodeId w) const {
    return relations_[r].pred[w];
  }
  bool has_edge(SymbolIndex r, NodeId u, NodeId v) const;

  friend bool operator==(const Model& a, const Model& b);

 private:
  friend class ModelBuilder;

  struct Relation {
    std::vector<Edge> edges;
    std::vector<std::vector<NodeId>> succ;
    std::vector<std::vector<NodeId>> pred;
  };

  Signature signature_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<LabelSet> labels_;
  std::vector<std::vector<NodeId>> members_;
  std::vector<Relation> relations_;
};

/// Accumulates nodes, labels and pairs; duplicates of labels or pairs are
/// merged. build() checks the domain is nonempty.
class ModelBuilder {
 public:
  explicit ModelBuilder(Signature signature);

  const Signature& signature() const { return signature_; }
  std::size_t size() const { return names_.size(); }

  NodeId add_node(std::string name);
  std::optional<NodeId> find(std::string_view name) const;

  void add_label(SymbolIndex p, NodeId w);
  void add_label(std::string_view p, std::string_view w);
  void add_edge(SymbolIndex r, NodeId u, NodeId v);
  void add_edge(std::string_view r, std::string_view u, std::string_view v);
  /// Both (u,v) and (v,u).
  void add_symmetric_edge(SymbolIndex r, NodeId u, NodeId v);

  Model build() &&;

 private:
  void check_node(NodeId w) const;

  Signature signature_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<LabelSet> labels_;
  std::vector<std::vector<Edge>> edges_;
};

/// A model with a distinguished point. Non-owning: the model must outlive it.
class PointedModel {
 public:
  PointedModel(const Model& model, NodeId point);
  PointedModel(const Model& model, std::string_view point);

  const Model& model() const { return *model_; }
  NodeId point() const { return point_; }

 private:
  const Model* model_;
  NodeId point_;
};

// Name-based neighbourhood queries; InputError on unknown node or symbol.
std::vector<std::string> successors(const Model& model, std::string_view rel, std::string_view w);
std::vector<std::string> predecessors(const Model& model, std::string_view rel, std::string_view w);

struct Violation {
  int condition = 0;  // PN(n) condition 1..7; 0 for SB checks
  std::string kind;
  std::vector<std::string> nodes;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::set<int> conditions() const;
  std::string to_string() const;
};

/// Exactly one binary symbol, interpreted symmetric and irreflexive.
ValidationReport validate_sb(const Model& model);

/// Π = {P_0..P_n}, R = {R_i_j | 1 <= i,j <= n}.
Signature pn_signature(unsigned n);

/// Conditions 1-7 of the port-numbering encoding. Every violation found is
/// reported, ordered by condition number.
/// InputError if the signature is not pn_signature(n) up to symbol order.
ValidationReport validate_pn(const Model& model, unsigned n);

/// An undirected edge of a port-numbered network: port `from_port` of `a`
/// is wired to port `to_port` of `b` (1-based).
struct PortLink {
  NodeId a = 0;
  unsigned from_port = 1;
  NodeId b = 0;
  unsigned to_port = 1;
};

/// Encodes a port-numbered network as a PN(n)-structure over pn_signature(n):
/// R_i_j(a,b) and R_j_i(b,a) per link, P_d at every node of degree d.
/// Nodes are named "0".."count-1". No validation beyond range checks.
Model port_numbered_model(unsigned n, std::size_t count, std::span<const PortLink> links);

/// Nodes within `radius` steps of `center`, following pairs of every binary
/// relation in either direction, with all induced labels and pairs.
struct Ball {
  Model model;
  NodeId center;
};
Ball ball(const Model& model, NodeId center, unsigned radius);

/// Label- and relation-preserving bijection mapping one point to the other.
/// Backtracking search with distance/degree/label pruning; intended for the
/// small, sparse balls the experiments compare.
bool pointed_isomorphic(const Model& a, NodeId pa, const Model& b, NodeId pb);

}  // namespace anet

#endif  // ANET_STRUCTURES_HPP
