#include "anet/path_model.hpp"

#include <string>

#include "anet/error.hpp"

namespace anet {

const Signature& walk_signature() {
  static const Signature sig({"P0", "P1", "Q1", "Q2", "Q3"}, {"R"});
  return sig;
}

namespace {

// Unary indices in walk_signature().
constexpr SymbolIndex kP0 = 0;
constexpr SymbolIndex kQ1 = 2;

ModelBuilder labelled_line(const Word& v) {
  ModelBuilder b(walk_signature());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const NodeId w = b.add_node(std::to_string(i));
    b.add_label(kP0 + static_cast<SymbolIndex>(v[i]), w);
    b.add_label(kQ1 + i % 3, w);
    if (i > 0) b.add_symmetric_edge(0, w - 1, w);
  }
  return b;
}

}  // namespace

Model build_path_model(const Word& v) {
  if (v.empty()) throw InputError("path model needs a nonempty word");
  return labelled_line(v).build();
}

Model build_cycle_model(const Word& v) {
  if (v.size() < 3) throw InputError("cycle model needs at least 3 nodes");
  auto b = labelled_line(v);
  b.add_symmetric_edge(0, v.size() - 1, 0);
  return std::move(b).build();
}

}  // namespace anet
