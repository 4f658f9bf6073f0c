#include "anet/types.hpp"

#include <algorithm>
#include <unordered_map>

#include "anet/error.hpp"

namespace anet {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h;
}

}  // namespace

TypeTable::TypeTable(Signature signature) : signature_(std::move(signature)) {
  const std::size_t unary = signature_.unary().size();
  if (unary <= kSeededUnaryLimit) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << unary); ++mask) {
      base_type(LabelSet(mask));
    }
  }
}

const TypeTable::Record& TypeTable::record(TypeId t) const {
  if (!contains(t)) throw InputError("type id " + name(t) + " is not in this table");
  return records_[t.value];
}

std::optional<TypeId> TypeTable::previous(TypeId t) const {
  const auto& r = record(t);
  if (r.previous == kNone) return std::nullopt;
  return TypeId{r.previous};
}

std::span<const TypeId> TypeTable::children(TypeId t, SymbolIndex relation) const {
  const auto& r = record(t);
  if (relation >= signature_.binary().size()) throw InputError("relation index out of range");
  const auto begin = bounds_[r.bounds + relation];
  const auto end = bounds_[r.bounds + relation + 1];
  return std::span<const TypeId>(children_.data() + begin, end - begin);
}

std::span<const TypeId> TypeTable::ids_at_level(unsigned level) const {
  if (level >= by_level_.size()) return {};
  return by_level_[level];
}

std::uint64_t TypeTable::hash_key(unsigned level, LabelSet base, std::uint32_t previous) const {
  std::uint64_t h = mix(level, base.bits());
  h = mix(h, previous);
  for (std::size_t r = 0; r + 1 < scratch_bounds_.size(); ++r) {
    h = mix(h, 0xffffffffULL + r);
    for (auto i = scratch_bounds_[r]; i < scratch_bounds_[r + 1]; ++i) {
      h = mix(h, scratch_ids_[i].value);
    }
  }
  return h;
}

std::optional<TypeId> TypeTable::find(std::uint64_t h, unsigned level, LabelSet base,
                                      std::uint32_t previous) const {
  auto [lo, hi] = index_.equal_range(h);
  const std::size_t k = signature_.binary().size();
  for (auto it = lo; it != hi; ++it) {
    const Record& rec = records_[it->second];
    if (rec.level != level || rec.base != base || rec.previous != previous) continue;
    bool same = true;
    for (std::size_t r = 0; r < k && same; ++r) {
      const auto b0 = bounds_[rec.bounds + r];
      const auto b1 = bounds_[rec.bounds + r + 1];
      const auto s0 = scratch_bounds_[r];
      const auto s1 = scratch_bounds_[r + 1];
      same = (b1 - b0 == s1 - s0) && std::equal(children_.begin() + b0, children_.begin() + b1,
                                                scratch_ids_.begin() + s0);
    }
    if (same) return TypeId{it->second};
  }
  return std::nullopt;
}

TypeId TypeTable::insert(std::uint64_t h, unsigned level, LabelSet base, std::uint32_t previous) {
  const auto id = static_cast<std::uint32_t>(records_.size());
  const auto offset = static_cast<std::uint32_t>(children_.size());
  records_.push_back({level, base, previous, static_cast<std::uint32_t>(bounds_.size())});
  for (auto b : scratch_bounds_) bounds_.push_back(offset + b);
  children_.insert(children_.end(), scratch_ids_.begin(), scratch_ids_.end());
  if (by_level_.size() <= level) by_level_.resize(level + 1);
  by_level_[level].push_back(TypeId{id});
  index_.emplace(h, id);
  return TypeId{id};
}

TypeId TypeTable::base_type(LabelSet labels) {
  if (signature_.unary().size() < LabelSet::kMaxSymbols &&
      (labels.bits() >> signature_.unary().size()) != 0) {
    throw InputError("label set mentions symbols outside the signature");
  }
  scratch_ids_.clear();
  scratch_bounds_.assign(signature_.binary().size() + 1, 0);
  const auto h = hash_key(0, labels, kNone);
  if (auto found = find(h, 0, labels, kNone)) return *found;
  return insert(h, 0, labels, kNone);
}

TypeId TypeTable::refine(TypeId previous, std::span<const std::vector<TypeId>> successor_types) {
  const std::size_t k = signature_.binary().size();
  if (successor_types.size() != k) {
    throw InputError("refine needs one successor set per binary symbol");
  }
  const Record prev = record(previous);
  scratch_ids_.clear();
  scratch_bounds_.assign(k + 1, 0);
  for (std::size_t r = 0; r < k; ++r) {
    const auto begin = scratch_ids_.size();
    for (TypeId c : successor_types[r]) {
      if (record(c).level != prev.level) {
        throw InputError("successor type " + name(c) + " has level " +
                         std::to_string(record(c).level) + ", expected " +
                         std::to_string(prev.level));
      }
      scratch_ids_.push_back(c);
    }
    std::sort(scratch_ids_.begin() + begin, scratch_ids_.end());
    scratch_ids_.erase(std::unique(scratch_ids_.begin() + begin, scratch_ids_.end()),
                       scratch_ids_.end());
    scratch_bounds_[r] = static_cast<std::uint32_t>(begin);
  }
  scratch_bounds_[k] = static_cast<std::uint32_t>(scratch_ids_.size());
  const unsigned level = prev.level + 1;
  const auto h = hash_key(level, prev.base, previous.value);
  if (auto found = find(h, level, prev.base, previous.value)) return *found;
  return insert(h, level, prev.base, previous.value);
}

std::string TypeTable::describe(TypeId t) const {
  const Record& rec = record(t);
  std::string out = "L" + std::to_string(rec.level);
  if (rec.previous == kNone) return out + " " + signature_.describe(rec.base);
  out += " prev=" + name(TypeId{rec.previous});
  for (SymbolIndex r = 0; r < signature_.binary().size(); ++r) {
    out += " " + signature_.binary()[r] + ":{";
    bool first = true;
    for (TypeId c : children(t, r)) {
      if (!first) out += ',';
      out += name(c);
      first = false;
    }
    out += '}';
  }
  return out;
}

std::vector<std::vector<TypeId>> compute_type_levels(const Model& model, unsigned n,
                                                     TypeTable& table) {
  if (!(model.signature() == table.signature())) {
    throw InputError("type table signature differs from the model's");
  }
  const std::size_t k = model.signature().binary().size();
  std::vector<std::vector<TypeId>> levels(n + 1, std::vector<TypeId>(model.size()));
  for (NodeId w = 0; w < model.size(); ++w) levels[0][w] = table.base_type(model.labels(w));
  std::vector<std::vector<TypeId>> succ(k);
  for (unsigned m = 0; m < n; ++m) {
    for (NodeId w = 0; w < model.size(); ++w) {
      for (SymbolIndex r = 0; r < k; ++r) {
        succ[r].clear();
        for (NodeId v : model.successors(r, w)) succ[r].push_back(levels[m][v]);
      }
      levels[m + 1][w] = table.refine(levels[m][w], succ);
    }
  }
  return levels;
}

std::vector<TypeId> compute_types(const Model& model, unsigned n, TypeTable& table) {
  auto levels = compute_type_levels(model, n, table);
  return std::move(levels.back());
}

ModalFormula type_to_formula(TypeId t, const TypeTable& table) {
  const Signature& sig = table.signature();
  std::unordered_map<std::uint32_t, ModalFormula> memo;
  auto go = [&](auto&& self, TypeId id) -> ModalFormula {
    if (auto it = memo.find(id.value); it != memo.end()) return it->second;
    std::vector<ModalFormula> parts;
    if (auto prev = table.previous(id)) {
      parts.push_back(self(self, *prev));
      const unsigned child_level = table.level(id) - 1;
      for (SymbolIndex r = 0; r < sig.binary().size(); ++r) {
        const auto present = table.children(id, r);
        const auto& rel = sig.binary()[r];
        for (TypeId c : present) parts.push_back(ModalFormula::diamond(rel, self(self, c)));
        for (TypeId c : table.ids_at_level(child_level)) {
          if (!std::binary_search(present.begin(), present.end(), c)) {
            parts.push_back(ModalFormula::negation(ModalFormula::diamond(rel, self(self, c))));
          }
        }
      }
    } else {
      const LabelSet base = table.base(id);
      for (SymbolIndex p = 0; p < sig.unary().size(); ++p) {
        if (base.contains(p)) parts.push_back(ModalFormula::prop(sig.unary()[p]));
      }
      for (SymbolIndex p = 0; p < sig.unary().size(); ++p) {
        if (!base.contains(p)) {
          parts.push_back(ModalFormula::negation(ModalFormula::prop(sig.unary()[p])));
        }
      }
    }
    ModalFormula f = ModalFormula::conjunction_of(parts);
    memo.emplace(id.value, f);
    return f;
  };
  return go(go, t);
}

}  // namespace anet
