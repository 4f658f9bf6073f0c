#include "anet/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "anet/error.hpp"

namespace anet {

using nlohmann::json;

namespace {

// nlohmann keeps the last of duplicate keys silently; catch them while parsing.
json parse_rejecting_duplicate_keys(std::string_view text) {
  std::vector<std::set<std::string>> keys;
  std::string duplicate;
  json::parser_callback_t cb = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        keys.emplace_back();
        break;
      case json::parse_event_t::object_end:
        keys.pop_back();
        break;
      case json::parse_event_t::key:
        if (!keys.back().insert(parsed.get<std::string>()).second && duplicate.empty()) {
          duplicate = parsed.get<std::string>();
        }
        break;
      default:
        break;
    }
    return true;
  };
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON: " + std::string(e.what()));
  }
  if (!duplicate.empty()) throw ParseError("", "duplicate key '" + duplicate + "'");
  return doc;
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, std::string("missing key '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where, "expected an array");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!arr[i].is_string()) throw ParseError(at, "expected a string");
    auto s = arr[i].get<std::string>();
    if (!seen.insert(s).second) throw ParseError(at, "duplicate entry '" + s + "'");
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Model load_model(std::string_view text) {
  const json doc = parse_rejecting_duplicate_keys(text);
  const json& sig = member(doc, "signature", "");
  auto unary = string_list(member(sig, "unary", "/signature"), "/signature/unary");
  auto binary = string_list(member(sig, "binary", "/signature"), "/signature/binary");
  Signature signature;
  try {
    signature = Signature(std::move(unary), std::move(binary));
  } catch (const InputError& e) {
    throw ParseError("/signature", e.what());
  }

  ModelBuilder b(signature);
  for (auto& name : string_list(member(doc, "domain", ""), "/domain")) {
    try {
      b.add_node(std::move(name));
    } catch (const InputError& e) {
      throw ParseError("/domain", e.what());
    }
  }
  if (b.size() == 0) throw ParseError("/domain", "domain must be nonempty");

  auto node_at = [&](const json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError(where, "expected a node name");
    const auto name = v.get<std::string>();
    auto w = b.find(name);
    if (!w) throw ParseError(where, "node '" + name + "' is not in the domain");
    return *w;
  };

  const json& uinterp = member(doc, "unary_interp", "");
  if (!uinterp.is_object()) throw ParseError("/unary_interp", "expected an object");
  for (auto it = uinterp.begin(); it != uinterp.end(); ++it) {
    if (!signature.find_unary(it.key())) {
      throw ParseError("/unary_interp/" + it.key(), "unknown unary symbol '" + it.key() + "'");
    }
  }
  for (SymbolIndex p = 0; p < signature.unary().size(); ++p) {
    const auto& sym = signature.unary()[p];
    const std::string where = "/unary_interp/" + sym;
    const json& members = member(uinterp, sym.c_str(), "/unary_interp");
    if (!members.is_array()) throw ParseError(where, "expected an array");
    std::set<NodeId> seen;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::string at = where + "/" + std::to_string(i);
      const NodeId w = node_at(members[i], at);
      if (!seen.insert(w).second) throw ParseError(at, "duplicate member");
      b.add_label(p, w);
    }
  }

  const json& binterp = member(doc, "binary_interp", "");
  if (!binterp.is_object()) throw ParseError("/binary_interp", "expected an object");
  for (auto it = binterp.begin(); it != binterp.end(); ++it) {
    if (!signature.find_binary(it.key())) {
      throw ParseError("/binary_interp/" + it.key(), "unknown binary symbol '" + it.key() + "'");
    }
  }
  for (SymbolIndex r = 0; r < signature.binary().size(); ++r) {
    const auto& sym = signature.binary()[r];
    const std::string where = "/binary_interp/" + sym;
    const json& pairs = member(binterp, sym.c_str(), "/binary_interp");
    if (!pairs.is_array()) throw ParseError(where, "expected an array");
    std::set<std::pair<NodeId, NodeId>> seen;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string at = where + "/" + std::to_string(i);
      const json& pair = pairs[i];
      if (!pair.is_array() || pair.size() != 2) throw ParseError(at, "expected [node, node]");
      const NodeId u = node_at(pair[0], at + "/0");
      const NodeId v = node_at(pair[1], at + "/1");
      if (!seen.emplace(u, v).second) throw ParseError(at, "duplicate pair");
      b.add_edge(r, u, v);
    }
  }
  return std::move(b).build();
}

Model load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_model(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + (e.where().empty() ? "" : ":" + e.where()), e.message());
  }
}

std::string save_model(const Model& model) {
  const Signature& sig = model.signature();
  nlohmann::ordered_json doc;
  doc["signature"]["unary"] = sig.unary();
  doc["signature"]["binary"] = sig.binary();
  doc["domain"] = model.domain();
  doc["unary_interp"] = nlohmann::ordered_json::object();
  for (SymbolIndex p = 0; p < sig.unary().size(); ++p) {
    auto members = nlohmann::ordered_json::array();
    for (NodeId w : model.members(p)) members.push_back(model.name(w));
    doc["unary_interp"][sig.unary()[p]] = std::move(members);
  }
  doc["binary_interp"] = nlohmann::ordered_json::object();
  for (SymbolIndex r = 0; r < sig.binary().size(); ++r) {
    auto pairs = nlohmann::ordered_json::array();
    for (const Edge& e : model.edges(r)) pairs.push_back({model.name(e.from), model.name(e.to)});
    doc["binary_interp"][sig.binary()[r]] = std::move(pairs);
  }
  return doc.dump(2) + "\n";
}

}  // namespace anet
