#ifndef ANET_MODEL_IO_HPP
#define ANET_MODEL_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "anet/structures.hpp"

namespace anet {

// Model file layout:
//   {"signature": {"unary": [...], "binary": [...]},
//    "domain": [node, ...],
//    "unary_interp": {symbol: [node, ...]},
//    "binary_interp": {symbol: [[node, node], ...]}}
// Every signature symbol needs an entry. Duplicate names, keys, members or
// pairs are rejected. Errors are ParseError with a JSON-pointer location.

Model load_model(std::string_view text);
Model load_model_file(const std::filesystem::path& path);

/// Canonical form: symbols in signature order, members and pairs in domain
/// order. load_model(save_model(m)) == m.
std::string save_model(const Model& model);

}  // namespace anet

#endif  // ANET_MODEL_IO_HPP
