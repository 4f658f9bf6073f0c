#include "anet/structures.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_set>

#include "anet/error.hpp"

namespace anet {

namespace {

std::optional<SymbolIndex> find_in(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<SymbolIndex>(it - names.begin());
}

}  // namespace

Signature::Signature(std::vector<std::string> unary, std::vector<std::string> binary)
    : unary_(std::move(unary)), binary_(std::move(binary)) {
  if (unary_.size() > LabelSet::kMaxSymbols) {
    throw InputError("signature has " + std::to_string(unary_.size()) +
                     " unary symbols; at most 64 are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto* list : {&unary_, &binary_}) {
    for (const auto& name : *list) {
      if (name.empty()) throw InputError("empty symbol name in signature");
      if (!seen.insert(name).second) throw InputError("duplicate symbol '" + name + "' in signature");
    }
  }
}

std::optional<SymbolIndex> Signature::find_unary(std::string_view name) const {
  return find_in(unary_, name);
}

std::optional<SymbolIndex> Signature::find_binary(std::string_view name) const {
  return find_in(binary_, name);
}

SymbolIndex Signature::unary_index(std::string_view name) const {
  if (auto i = find_unary(name)) return *i;
  throw InputError("unknown unary symbol '" + std::string(name) + "'");
}

SymbolIndex Signature::binary_index(std::string_view name) const {
  if (auto i = find_binary(name)) return *i;
  throw InputError("unknown binary symbol '" + std::string(name) + "'");
}

std::string Signature::describe(LabelSet labels) const {
  std::string out = "{";
  bool first = true;
  for (SymbolIndex i = 0; i < unary_.size(); ++i) {
    if (!labels.contains(i)) continue;
    if (!first) out += ',';
    out += unary_[i];
    first = false;
  }
  return out + "}";
}

std::optional<NodeId> Model::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId Model::node(std::string_view name) const {
  if (auto w = find(name)) return *w;
  throw InputError("node '" + std::string(name) + "' is not in the domain");
}

bool Model::has_edge(SymbolIndex r, NodeId u, NodeId v) const {
  const auto& succ = relations_[r].succ[u];
  return std::binary_search(succ.begin(), succ.end(), v);
}

bool operator==(const Model& a, const Model& b) {
  if (!(a.signature_ == b.signature_) || a.names_ != b.names_ || a.labels_ != b.labels_) {
    return false;
  }
  for (std::size_t r = 0; r < a.relations_.size(); ++r) {
    if (a.relations_[r].edges != b.relations_[r].edges) return false;
  }
  return true;
}

ModelBuilder::ModelBuilder(Signature signature)
    : signature_(std::move(signature)), edges_(signature_.binary().size()) {}

NodeId ModelBuilder::add_node(std::string name) {
  if (name.empty()) throw InputError("empty node name");
  auto [it, fresh] = index_.emplace(name, names_.size());
  if (!fresh) throw InputError("duplicate node '" + name + "'");
  names_.push_back(std::move(name));
  labels_.emplace_back();
  return it->second;
}

std::optional<NodeId> ModelBuilder::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void ModelBuilder::check_node(NodeId w) const {
  if (w >= names_.size()) throw InputError("node index " + std::to_string(w) + " out of range");
}

void ModelBuilder::add_label(SymbolIndex p, NodeId w) {
  check_node(w);
  if (p >= signature_.unary().size()) throw InputError("unary symbol index out of range");
  labels_[w].insert(p);
}

void ModelBuilder::add_label(std::string_view p, std::string_view w) {
  auto node = find(w);
  if (!node) throw InputError("node '" + std::string(w) + "' is not in the domain");
  add_label(signature_.unary_index(p), *node);
}

void ModelBuilder::add_edge(SymbolIndex r, NodeId u, NodeId v) {
  check_node(u);
  check_node(v);
  if (r >= edges_.size()) throw InputError("binary symbol index out of range");
  edges_[r].push_back({u, v});
}

void ModelBuilder::add_edge(std::string_view r, std::string_view u, std::string_view v) {
  auto from = find(u);
  auto to = find(v);
  if (!from) throw InputError("node '" + std::string(u) + "' is not in the domain");
  if (!to) throw InputError("node '" + std::string(v) + "' is not in the domain");
  add_edge(signature_.binary_index(r), *from, *to);
}

void ModelBuilder::add_symmetric_edge(SymbolIndex r, NodeId u, NodeId v) {
  add_edge(r, u, v);
  add_edge(r, v, u);
}

Model ModelBuilder::build() && {
  if (names_.empty()) throw InputError("model domain must be nonempty");
  Model m;
  const std::size_t n = names_.size();
  m.signature_ = std::move(signature_);
  m.names_ = std::move(names_);
  m.index_ = std::move(index_);
  m.labels_ = std::move(labels_);
  m.members_.resize(m.signature_.unary().size());
  for (NodeId w = 0; w < n; ++w) {
    for (SymbolIndex p = 0; p < m.members_.size(); ++p) {
      if (m.labels_[w].contains(p)) m.members_[p].push_back(w);
    }
  }
  m.relations_.resize(edges_.size());
  for (std::size_t r = 0; r < edges_.size(); ++r) {
    auto& rel = m.relations_[r];
    rel.edges = std::move(edges_[r]);
    std::sort(rel.edges.begin(), rel.edges.end());
    rel.edges.erase(std::unique(rel.edges.begin(), rel.edges.end()), rel.edges.end());
    rel.succ.assign(n, {});
    rel.pred.assign(n, {});
    for (const Edge& e : rel.edges) {
      rel.succ[e.from].push_back(e.to);
      rel.pred[e.to].push_back(e.from);
    }
  }
  return m;
}

PointedModel::PointedModel(const Model& model, NodeId point) : model_(&model), point_(point) {
  if (point >= model.size()) throw InputError("point index out of range");
}

PointedModel::PointedModel(const Model& model, std::string_view point)
    : model_(&model), point_(model.node(point)) {}

namespace {

std::vector<std::string> names_of(const Model& model, std::span<const NodeId> ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (NodeId id : ids) out.push_back(model.name(id));
  return out;
}

}  // namespace

std::vector<std::string> successors(const Model& model, std::string_view rel, std::string_view w) {
  return names_of(model, model.successors(model.signature().binary_index(rel), model.node(w)));
}

std::vector<std::string> predecessors(const Model& model, std::string_view rel,
                                      std::string_view w) {
  return names_of(model, model.predecessors(model.signature().binary_index(rel), model.node(w)));
}

std::set<int> ValidationReport::conditions() const {
  std::set<int> out;
  for (const auto& v : violations) out.insert(v.condition);
  return out;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "OK\n";
  std::ostringstream out;
  for (const auto& v : violations) {
    if (v.condition > 0) out << "condition " << v.condition << ": ";
    out << v.message << '\n';
  }
  return out.str();
}

ValidationReport validate_sb(const Model& model) {
  ValidationReport report;
  const auto& binary = model.signature().binary();
  if (binary.size() != 1) {
    report.violations.push_back(
        {0, "signature", {},
         "expected exactly one binary symbol, found " + std::to_string(binary.size())});
    return report;
  }
  for (const Edge& e : model.edges(0)) {
    const auto& u = model.name(e.from);
    const auto& v = model.name(e.to);
    if (e.from == e.to) {
      report.violations.push_back({0, "irreflexivity", {u}, "irreflexivity at " + u});
    } else if (!model.has_edge(0, e.to, e.from)) {
      report.violations.push_back({0, "symmetry", {u, v}, "symmetry at (" + u + "," + v + ")"});
    }
  }
  return report;
}

namespace {

std::string pn_relation_name(unsigned i, unsigned j) {
  return "R_" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

Signature pn_signature(unsigned n) {
  if (n == 0) throw InputError("PN(n) requires n >= 1");
  std::vector<std::string> unary;
  for (unsigned i = 0; i <= n; ++i) unary.push_back("P_" + std::to_string(i));
  std::vector<std::string> binary;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) binary.push_back(pn_relation_name(i, j));
  }
  return Signature(std::move(unary), std::move(binary));
}

ValidationReport validate_pn(const Model& model, unsigned n) {
  const Signature expected = pn_signature(n);
  const Signature& sig = model.signature();
  {
    std::vector<std::string> missing;
    std::vector<std::string> extra;
    for (const auto& s : expected.unary()) {
      if (!sig.find_unary(s)) missing.push_back(s);
    }
    for (const auto& s : expected.binary()) {
      if (!sig.find_binary(s)) missing.push_back(s);
    }
    for (const auto& s : sig.unary()) {
      if (!expected.find_unary(s)) extra.push_back(s);
    }
    for (const auto& s : sig.binary()) {
      if (!expected.find_binary(s)) extra.push_back(s);
    }
    if (!missing.empty() || !extra.empty()) {
      std::string msg = "signature is not PN(" + std::to_string(n) + ")";
      if (!missing.empty()) {
        msg += "; missing:";
        for (const auto& s : missing) msg += " " + s;
      }
      if (!extra.empty()) {
        msg += "; extra:";
        for (const auto& s : extra) msg += " " + s;
      }
      throw InputError(msg);
    }
  }

  // rel[i][j] = binary index of R_i_j, 1-based.
  std::vector<std::vector<SymbolIndex>> rel(n + 1, std::vector<SymbolIndex>(n + 1));
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) rel[i][j] = sig.binary_index(pn_relation_name(i, j));
  }
  std::vector<SymbolIndex> label(n + 1);
  for (unsigned i = 0; i <= n; ++i) label[i] = sig.unary_index("P_" + std::to_string(i));

  const std::size_t size = model.size();
  ValidationReport report;
  auto pair_text = [&](NodeId u, NodeId v) {
    return "(" + model.name(u) + "," + model.name(v) + ")";
  };
  auto add = [&](int cond, std::string kind, std::vector<NodeId> nodes, std::string msg) {
    std::vector<std::string> names;
    for (NodeId w : nodes) names.push_back(model.name(w));
    report.violations.push_back({cond, std::move(kind), std::move(names), std::move(msg)});
  };

  // Union relation as sorted successor lists.
  std::vector<std::vector<NodeId>> union_succ(size);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      for (const Edge& e : model.edges(rel[i][j])) union_succ[e.from].push_back(e.to);
    }
  }
  for (auto& s : union_succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  auto in_union = [&](NodeId u, NodeId v) {
    return std::binary_search(union_succ[u].begin(), union_succ[u].end(), v);
  };

  // 1. union symmetric and irreflexive
  for (NodeId u = 0; u < size; ++u) {
    for (NodeId v : union_succ[u]) {
      if (u == v) {
        add(1, "irreflexivity", {u}, "union relation is reflexive at " + model.name(u));
      } else if (!in_union(v, u)) {
        add(1, "symmetry", {u, v}, "union relation lacks the reverse of " + pair_text(u, v));
      }
    }
  }
  // 2. relations pairwise disjoint
  for (NodeId u = 0; u < size; ++u) {
    for (NodeId v : union_succ[u]) {
      std::vector<std::string> holders;
      for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
          if (model.has_edge(rel[i][j], u, v)) holders.push_back(pn_relation_name(i, j));
        }
      }
      if (holders.size() > 1) {
        std::string msg = pair_text(u, v) + " is in several relations:";
        for (const auto& h : holders) msg += " " + h;
        add(2, "disjointness", {u, v}, msg);
      }
    }
  }
  // 3. R_i_j(u,v) implies R_j_i(v,u)
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      for (const Edge& e : model.edges(rel[i][j])) {
        if (!model.has_edge(rel[j][i], e.to, e.from)) {
          add(3, "port-symmetry", {e.from, e.to},
              pn_relation_name(i, j) + pair_text(e.from, e.to) + " without " +
                  pn_relation_name(j, i) + pair_text(e.to, e.from));
        }
      }
    }
  }
  // 4. each R_i_j has in- and out-degree at most one
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      const SymbolIndex r = rel[i][j];
      for (NodeId u = 0; u < size; ++u) {
        const auto out = model.successors(r, u).size();
        const auto in = model.predecessors(r, u).size();
        if (out > 1 || in > 1) {
          add(4, "degree", {u},
              pn_relation_name(i, j) + " has out-degree " + std::to_string(out) +
                  " and in-degree " + std::to_string(in) + " at " + model.name(u));
        }
      }
    }
  }
  // 5. R_i_j(u,v), k < i: u uses some out-port k
  auto has_out_port = [&](NodeId u, unsigned k) {
    for (unsigned l = 1; l <= n; ++l) {
      if (!model.successors(rel[k][l], u).empty()) return true;
    }
    return false;
  };
  // 6. R_i_j(u,v), k < j: v uses some in-port k
  auto has_in_port = [&](NodeId v, unsigned k) {
    for (unsigned l = 1; l <= n; ++l) {
      if (!model.predecessors(rel[l][k], v).empty()) return true;
    }
    return false;
  };
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      for (const Edge& e : model.edges(rel[i][j])) {
        for (unsigned k = 1; k < i; ++k) {
          if (!has_out_port(e.from, k)) {
            add(5, "out-port-gap", {e.from, e.to},
                pn_relation_name(i, j) + pair_text(e.from, e.to) + " but " +
                    model.name(e.from) + " has no out-port " + std::to_string(k));
            break;
          }
        }
        for (unsigned k = 1; k < j; ++k) {
          if (!has_in_port(e.to, k)) {
            add(6, "in-port-gap", {e.from, e.to},
                pn_relation_name(i, j) + pair_text(e.from, e.to) + " but " + model.name(e.to) +
                    " has no in-port " + std::to_string(k));
            break;
          }
        }
      }
    }
  }
  // 7. u in P_i iff the union out-degree at u is i
  for (NodeId u = 0; u < size; ++u) {
    const std::size_t degree = union_succ[u].size();
    for (unsigned i = 0; i <= n; ++i) {
      const bool labelled = model.has_label(label[i], u);
      if (labelled != (degree == i)) {
        add(7, "degree-label", {u},
            model.name(u) + " has degree " + std::to_string(degree) +
                (labelled ? " but is labelled P_" : " but is not labelled P_") +
                std::to_string(i));
      }
    }
  }

  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.condition < b.condition; });
  return report;
}

Model port_numbered_model(unsigned n, std::size_t count, std::span<const PortLink> links) {
  ModelBuilder b(pn_signature(n));
  for (std::size_t w = 0; w < count; ++w) b.add_node(std::to_string(w));
  std::vector<std::set<NodeId>> neighbours(count);
  for (const PortLink& link : links) {
    if (link.from_port < 1 || link.from_port > n || link.to_port < 1 || link.to_port > n) {
      throw InputError("port number out of range 1.." + std::to_string(n));
    }
    const auto fwd = b.signature().binary_index(pn_relation_name(link.from_port, link.to_port));
    const auto back = b.signature().binary_index(pn_relation_name(link.to_port, link.from_port));
    b.add_edge(fwd, link.a, link.b);
    b.add_edge(back, link.b, link.a);
    neighbours[link.a].insert(link.b);
    neighbours[link.b].insert(link.a);
  }
  for (NodeId w = 0; w < count; ++w) {
    if (neighbours[w].size() <= n) {
      b.add_label(b.signature().unary_index("P_" + std::to_string(neighbours[w].size())), w);
    }
  }
  return std::move(b).build();
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> undirected_distances(const Model& model, NodeId source) {
  std::vector<std::size_t> dist(model.size(), kUnreached);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  const std::size_t relations = model.signature().binary().size();
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (SymbolIndex r = 0; r < relations; ++r) {
      for (auto span : {model.successors(r, u), model.predecessors(r, u)}) {
        for (NodeId v : span) {
          if (dist[v] == kUnreached) {
            dist[v] = dist[u] + 1;
            queue.push_back(v);
          }
        }
      }
    }
  }
  return dist;
}

}  // namespace

Ball ball(const Model& model, NodeId center, unsigned radius) {
  if (center >= model.size()) throw InputError("ball center out of range");
  const auto dist = undirected_distances(model, center);
  ModelBuilder b(model.signature());
  std::vector<std::optional<NodeId>> remap(model.size());
  for (NodeId w = 0; w < model.size(); ++w) {
    if (dist[w] != kUnreached && dist[w] <= radius) remap[w] = b.add_node(model.name(w));
  }
  for (NodeId w = 0; w < model.size(); ++w) {
    if (!remap[w]) continue;
    for (SymbolIndex p = 0; p < model.signature().unary().size(); ++p) {
      if (model.has_label(p, w)) b.add_label(p, *remap[w]);
    }
  }
  for (SymbolIndex r = 0; r < model.signature().binary().size(); ++r) {
    for (const Edge& e : model.edges(r)) {
      if (remap[e.from] && remap[e.to]) b.add_edge(r, *remap[e.from], *remap[e.to]);
    }
  }
  const NodeId c = *remap[center];
  return {std::move(b).build(), c};
}

namespace {

struct IsoSearch {
  const Model& a;
  const Model& b;
  std::vector<NodeId> order;  // nodes of a, by distance from the point
  std::vector<std::vector<NodeId>> candidates;
  std::vector<std::optional<NodeId>> forward;
  std::vector<bool> used;

  bool consistent(NodeId x, NodeId y) const {
    const std::size_t relations = a.signature().binary().size();
    for (SymbolIndex r = 0; r < relations; ++r) {
      if (a.has_edge(r, x, x) != b.has_edge(r, y, y)) return false;
      for (NodeId z = 0; z < a.size(); ++z) {
        if (!forward[z]) continue;
        const NodeId fz = *forward[z];
        if (a.has_edge(r, x, z) != b.has_edge(r, y, fz)) return false;
        if (a.has_edge(r, z, x) != b.has_edge(r, fz, y)) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const NodeId x = order[depth];
    for (NodeId y : candidates[x]) {
      if (used[y] || !consistent(x, y)) continue;
      forward[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      forward[x].reset();
      used[y] = false;
    }
    return false;
  }
};

// Invariant used to prune candidate images.
struct NodeProfile {
  std::size_t distance;
  LabelSet labels;
  std::vector<std::pair<std::size_t, std::size_t>> degrees;
  bool operator==(const NodeProfile&) const = default;
};

NodeProfile profile(const Model& m, const std::vector<std::size_t>& dist, NodeId w) {
  NodeProfile p{dist[w], m.labels(w), {}};
  for (SymbolIndex r = 0; r < m.signature().binary().size(); ++r) {
    p.degrees.emplace_back(m.successors(r, w).size(), m.predecessors(r, w).size());
  }
  return p;
}

}  // namespace

bool pointed_isomorphic(const Model& a, NodeId pa, const Model& b, NodeId pb) {
  if (!(a.signature() == b.signature()) || a.size() != b.size()) return false;
  if (pa >= a.size() || pb >= b.size()) throw InputError("point out of range");
  const auto da = undirected_distances(a, pa);
  const auto db = undirected_distances(b, pb);

  std::vector<NodeProfile> pb_profiles;
  for (NodeId y = 0; y < b.size(); ++y) pb_profiles.push_back(profile(b, db, y));

  IsoSearch search{a, b, {}, std::vector<std::vector<NodeId>>(a.size()),
                   std::vector<std::optional<NodeId>>(a.size()), std::vector<bool>(b.size())};
  for (NodeId x = 0; x < a.size(); ++x) {
    const auto px = profile(a, da, x);
    for (NodeId y = 0; y < b.size(); ++y) {
      if (pb_profiles[y] == px) search.candidates[x].push_back(y);
    }
    if (search.candidates[x].empty()) return false;
  }
  search.candidates[pa] = {pb};
  search.order.resize(a.size());
  for (NodeId x = 0; x < a.size(); ++x) search.order[x] = x;
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](NodeId x, NodeId y) { return da[x] < da[y]; });
  return search.extend(0);
}

}  // namespace anet
