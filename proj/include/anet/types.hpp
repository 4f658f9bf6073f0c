#ifndef ANET_TYPES_HPP
#define ANET_TYPES_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "anet/formula.hpp"
#include "anet/structures.hpp"

namespace anet {

/// Handle into a TypeTable. Only meaningful relative to the table that
/// issued it.
struct TypeId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(TypeId, TypeId) = default;
};

}  // namespace anet

template <>
struct std::hash<anet::TypeId> {
  std::size_t operator()(anet::TypeId t) const noexcept { return std::hash<std::uint32_t>{}(t.value); }
};

namespace anet {

/// Append-only, hash-consed store of modal types.
///
/// A level-0 record is a set U of unary symbols (the conjunction of P for P
/// in U and ~P for the rest). A level-(n+1) record is its own level-n type
/// plus, for every binary symbol R_i, the set of level-n types realised by
/// R_i-successors. Structurally equal records share one TypeId, so two
/// pointed models computed in the same table have the same level-n id iff
/// they satisfy the same level-n type.
///
/// When the signature has at most kSeededUnaryLimit unary symbols, the
/// constructor interns every level-0 type up front, in order of the subset
/// bitmask; the level-0 id of U is then U's bitmask.
class TypeTable {
 public:
  static constexpr std::size_t kSeededUnaryLimit = 10;

  explicit TypeTable(Signature signature);

  const Signature& signature() const { return signature_; }
  std::size_t size() const { return records_.size(); }
  bool contains(TypeId t) const { return t.value < records_.size(); }

  TypeId base_type(LabelSet labels);
  /// The level-(n+1) type with the given level-n type and per-relation
  /// successor types (any order, duplicates allowed). Needs one set per
  /// binary symbol, all of the level of `previous`; InputError otherwise.
  TypeId refine(TypeId previous, std::span<const std::vector<TypeId>> successor_types);

  unsigned level(TypeId t) const { return record(t).level; }
  LabelSet base(TypeId t) const { return record(t).base; }
  std::optional<TypeId> previous(TypeId t) const;
  /// Sorted, duplicate-free.
  std::span<const TypeId> children(TypeId t, SymbolIndex relation) const;
  /// Every id of the given level, ascending.
  std::span<const TypeId> ids_at_level(unsigned level) const;

  /// Stable short name "t<id>".
  static std::string name(TypeId t) { return "t" + std::to_string(t.value); }
  /// One-line DAG record, e.g. "L1 prev=t1 R:{t0,t1}" or "L0 {P}".
  std::string describe(TypeId t) const;

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  struct Record {
    unsigned level;
    LabelSet base;
    std::uint32_t previous;
    std::uint32_t bounds;  // index of this record's k+1 offsets in bounds_
  };

  const Record& record(TypeId t) const;
  std::uint64_t hash_key(unsigned level, LabelSet base, std::uint32_t previous) const;
  std::optional<TypeId> find(std::uint64_t h, unsigned level, LabelSet base,
                             std::uint32_t previous) const;
  TypeId insert(std::uint64_t h, unsigned level, LabelSet base, std::uint32_t previous);

  Signature signature_;
  std::vector<Record> records_;
  std::vector<std::uint32_t> bounds_;
  std::vector<TypeId> children_;
  std::vector<std::vector<TypeId>> by_level_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;

  // Canonicalised key under construction: scratch_ids_ split by scratch_bounds_.
  std::vector<TypeId> scratch_ids_;
  std::vector<std::uint32_t> scratch_bounds_;
};

/// Level-0..n type ids of every node, levels[m][w]. Interns into `table`,
/// whose signature must equal the model's.
std::vector<std::vector<TypeId>> compute_type_levels(const Model& model, unsigned n,
                                                     TypeTable& table);

/// Level-n type id of every node.
std::vector<TypeId> compute_types(const Model& model, unsigned n, TypeTable& table);

/// Canonical type formula of t. Level 0: positive symbols then negated ones,
/// in signature order (T for an empty signature). Level n+1: the formula of
/// the previous type, then per relation <R>tau for child types and ~<R>tau
/// for every other level-n type currently in the table, in id order.
/// Negative conjuncts are relative to the table's content at call time.
/// Subformulas are shared, so the result is DAG-sized. InputError for an id
/// the table did not issue.
ModalFormula type_to_formula(TypeId t, const TypeTable& table);

}  // namespace anet

#endif  // ANET_TYPES_HPP
