#ifndef ANET_FORMULA_HPP
#define ANET_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "anet/structures.hpp"

namespace anet {

/// Modal formula over T | P | ~phi | (phi & psi) | <R>phi.
///
/// Immutable and cheaply copyable; subformulas are shared, so a formula may
/// be a DAG far smaller than its printed tree (type formulas are). Equality
/// is syntactic.
class ModalFormula {
 public:
  enum class Kind { Top, Prop, Not, And, Diamond };

  static ModalFormula top();
  static ModalFormula prop(std::string symbol);
  static ModalFormula negation(ModalFormula f);
  static ModalFormula conjunction(ModalFormula a, ModalFormula b);
  static ModalFormula diamond(std::string relation, ModalFormula f);
  /// Left-nested ((a & b) & c); a lone part is returned as is; T when empty.
  static ModalFormula conjunction_of(std::span<const ModalFormula> parts);

  Kind kind() const;
  const std::string& symbol() const;
  const ModalFormula& operand() const;
  const ModalFormula& left() const;
  const ModalFormula& right() const;

  /// Shared-node identity, for DAG-aware traversals.
  const void* identity() const { return node_.get(); }

  /// Number of symbols in the printed tree, saturating at `limit`.
  std::size_t tree_size(std::size_t limit = SIZE_MAX) const;
  std::string to_string() const;

  friend bool operator==(const ModalFormula& a, const ModalFormula& b);

 private:
  struct Node;
  explicit ModalFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// First-order formula over T | x=y | P(x) | R(x,y) | ~phi | (phi & psi) | exists x phi.
class FoFormula {
 public:
  enum class Kind { Top, Eq, Pred, Rel, Not, And, Exists };

  static FoFormula top();
  static FoFormula eq(std::string x, std::string y);
  static FoFormula pred(std::string symbol, std::string x);
  static FoFormula rel(std::string symbol, std::string x, std::string y);
  static FoFormula negation(FoFormula f);
  static FoFormula conjunction(FoFormula a, FoFormula b);
  static FoFormula exists(std::string var, FoFormula f);

  Kind kind() const;
  const std::string& symbol() const;    // Pred, Rel
  const std::string& first_var() const;  // Eq, Pred, Rel, Exists
  const std::string& second_var() const; // Eq, Rel
  const FoFormula& operand() const;      // Not, Exists
  const FoFormula& left() const;
  const FoFormula& right() const;

  std::set<std::string> free_variables() const;
  std::string to_string() const;

  friend bool operator==(const FoFormula& a, const FoFormula& b);

 private:
  struct Node;
  explicit FoFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ModalFormula::Node {
  Kind kind = Kind::Top;
  std::string symbol;
  std::optional<ModalFormula> a;
  std::optional<ModalFormula> b;
};

struct FoFormula::Node {
  Kind kind = Kind::Top;
  std::string symbol;
  std::string x;
  std::string y;
  std::optional<FoFormula> a;
  std::optional<FoFormula> b;
};

// Text syntax as printed by to_string(). With a signature, symbols are
// resolved against it and unknown ones rejected; without, any identifier is
// accepted. "T" and "exists" are reserved. ParseError carries the offset.
ModalFormula parse_modal(std::string_view text, const Signature* signature = nullptr);
FoFormula parse_fo(std::string_view text, const Signature* signature = nullptr);

}  // namespace anet

#endif  // ANET_FORMULA_HPP
