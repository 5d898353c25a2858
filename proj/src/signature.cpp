#include "sortal/signature.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sortal {

namespace {

bool token_ok(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string diag_message(const std::string& code, const std::string& subject) {
  return code + ": \"" + subject + "\"";
}

}  // namespace

InvalidSignature::InvalidSignature(std::vector<Diagnostic> diags)
    : std::runtime_error(diags.empty() ? "invalid signature"
                                       : "invalid signature: " + diags.front().message),
      diagnostics(std::move(diags)) {}

Signature::Signature(std::vector<Sort> sorts, std::vector<OpDecl> ops)
    : sorts_(std::move(sorts)), ops_(std::move(ops)) {
  for (std::size_t i = 0; i < sorts_.size(); ++i) sort_index_.emplace(sorts_[i].name, i);
  for (std::size_t i = 0; i < ops_.size(); ++i) op_index_.emplace(ops_[i].name, i);
}

bool Signature::has_sort(const Sort& s) const { return sort_index_.count(s.name) > 0; }

const OpDecl* Signature::find_op(std::string_view name) const {
  auto it = op_index_.find(name);
  return it == op_index_.end() ? nullptr : &ops_[it->second];
}

std::size_t Signature::op_index(std::string_view name) const {
  auto it = op_index_.find(name);
  if (it == op_index_.end()) throw DomainError("unknown op: \"" + std::string(name) + "\"");
  return it->second;
}

std::vector<Diagnostic> validate(const Signature& sig) {
  std::vector<Diagnostic> out;
  std::set<std::string> seen_sorts;
  for (const Sort& s : sig.sorts()) {
    if (!token_ok(s.name))
      out.push_back({"bad-sort-name", diag_message("sort name must be a nonempty token", s.name)});
    if (!seen_sorts.insert(s.name).second)
      out.push_back({"duplicate-sort", diag_message("duplicate sort", s.name)});
  }
  auto check_sort = [&](const Sort& s, const std::string& where) {
    if (!seen_sorts.count(s.name))
      out.push_back({"unknown-sort", diag_message("unknown sort", s.name) + " in " + where});
  };
  std::set<std::string> seen_ops;
  for (const OpDecl& op : sig.ops()) {
    if (!token_ok(op.name))
      out.push_back({"bad-op-name", diag_message("op name must be a nonempty token", op.name)});
    if (!seen_ops.insert(op.name).second)
      out.push_back({"duplicate-op", diag_message("duplicate op", op.name)});
    check_sort(op.result, "result of op \"" + op.name + "\"");
    for (std::size_t j = 0; j < op.args.size(); ++j) {
      const Argument& a = op.args[j];
      std::string where = "argument " + std::to_string(j) + " of op \"" + op.name + "\"";
      check_sort(a.sort, where);
      for (const Sort& b : a.binders) check_sort(b, "binders of " + where);
    }
  }
  return out;
}

Signature sum(const Signature& a, const Signature& b) {
  if (a.sorts() != b.sorts())
    throw DomainError("sum: sort-universe mismatch between the two signatures");
  std::vector<OpDecl> ops = a.ops();
  std::set<std::string> taken;
  for (const OpDecl& op : ops) taken.insert(op.name);
  for (OpDecl op : b.ops()) {
    if (taken.count(op.name)) {
      std::size_t k = 2;
      while (taken.count(op.name + "#" + std::to_string(k))) ++k;
      op.name += "#" + std::to_string(k);
    }
    taken.insert(op.name);
    ops.push_back(std::move(op));
  }
  return Signature(a.sorts(), std::move(ops));
}

namespace {

using nlohmann::json;

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const std::string& where) {
  for (const char* k : keys)
    if (!obj.contains(k)) throw ParseError("schema violation: missing \"" + std::string(k) + "\" in " + where);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = std::any_of(keys.begin(), keys.end(),
                             [&](const char* k) { return it.key() == k; });
    if (!known) throw ParseError("schema violation: unknown key \"" + it.key() + "\" in " + where);
  }
}

std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError("schema violation: expected a string in " + where);
  return v.get<std::string>();
}

const json& require_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError("schema violation: expected an array in " + where);
  return v;
}

}  // namespace

Signature parse_signature_unvalidated(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("schema violation: top level must be an object");
  require_keys(root, {"sorts", "ops"}, "top level");

  std::vector<Sort> sorts;
  for (const json& s : require_array(root["sorts"], "\"sorts\""))
    sorts.push_back(Sort{require_string(s, "\"sorts\"")});

  std::vector<OpDecl> ops;
  for (const json& o : require_array(root["ops"], "\"ops\"")) {
    if (!o.is_object()) throw ParseError("schema violation: each op must be an object");
    require_keys(o, {"name", "args", "result"}, "op");
    OpDecl op;
    op.name = require_string(o["name"], "op \"name\"");
    op.result = Sort{require_string(o["result"], "op \"result\"")};
    for (const json& a : require_array(o["args"], "op \"args\"")) {
      if (!a.is_object()) throw ParseError("schema violation: each arg must be an object");
      require_keys(a, {"binders", "sort"}, "arg of op \"" + op.name + "\"");
      Argument arg;
      for (const json& b : require_array(a["binders"], "\"binders\""))
        arg.binders.push_back(Sort{require_string(b, "\"binders\"")});
      arg.sort = Sort{require_string(a["sort"], "arg \"sort\"")};
      op.args.push_back(std::move(arg));
    }
    ops.push_back(std::move(op));
  }
  return Signature(std::move(sorts), std::move(ops));
}

Signature parse_signature(std::string_view text) {
  Signature sig = parse_signature_unvalidated(text);
  std::vector<Diagnostic> diags = validate(sig);
  if (!diags.empty()) throw InvalidSignature(std::move(diags));
  return sig;
}

std::string serialize_signature(const Signature& sig) {
  nlohmann::ordered_json root;
  root["sorts"] = nlohmann::ordered_json::array();
  for (const Sort& s : sig.sorts()) root["sorts"].push_back(s.name);
  root["ops"] = nlohmann::ordered_json::array();
  for (const OpDecl& op : sig.ops()) {
    nlohmann::ordered_json o;
    o["name"] = op.name;
    o["args"] = nlohmann::ordered_json::array();
    for (const Argument& a : op.args) {
      nlohmann::ordered_json arg;
      arg["binders"] = nlohmann::ordered_json::array();
      for (const Sort& b : a.binders) arg["binders"].push_back(b.name);
      arg["sort"] = a.sort.name;
      o["args"].push_back(std::move(arg));
    }
    o["result"] = op.result.name;
    root["ops"].push_back(std::move(o));
  }
  return root.dump(2) + "\n";
}

namespace {

// Sort names for arrows parenthesize composite operands: b->b, (b->b)->b, b->(b->b).
struct ArrowSort {
  std::string name;
  bool composite;
};

std::string arrow_name(const ArrowSort& s, const ArrowSort& t) {
  auto wrap = [](const ArrowSort& x) { return x.composite ? "(" + x.name + ")" : x.name; };
  return wrap(s) + "->" + wrap(t);
}

}  // namespace

Signature stlc_finitized(const std::vector<Sort>& base_sorts, std::size_t arrow_depth) {
  if (base_sorts.empty()) throw DomainError("stlc_finitized: base_sorts must be nonempty");

  // Universe by levels: depth(base) = 0, depth(s->t) = max(depth s, depth t) + 1.
  std::vector<ArrowSort> universe;
  std::vector<std::size_t> depth;
  std::map<std::string, std::size_t> index;
  for (const Sort& b : base_sorts) {
    universe.push_back({b.name, false});
    depth.push_back(0);
    index.emplace(b.name, universe.size() - 1);
  }
  for (std::size_t d = 1; d <= arrow_depth; ++d) {
    std::size_t existing = universe.size();
    for (std::size_t i = 0; i < existing; ++i)
      for (std::size_t j = 0; j < existing; ++j) {
        if (std::max(depth[i], depth[j]) != d - 1) continue;
        ArrowSort arrow{arrow_name(universe[i], universe[j]), true};
        universe.push_back(arrow);
        depth.push_back(d);
        index.emplace(arrow.name, universe.size() - 1);
      }
  }

  std::vector<Sort> sorts;
  for (const ArrowSort& s : universe) sorts.push_back(Sort{s.name});

  // One app and one lam instance per pair (s, t) with s->t in-universe;
  // all apps first, then all lams, mirroring the two coproduct summands.
  std::vector<OpDecl> apps, lams;
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = 0; j < universe.size(); ++j) {
      auto it = index.find(arrow_name(universe[i], universe[j]));
      if (it == index.end()) continue;
      const Sort s = sorts[i], t = sorts[j], st = sorts[it->second];
      apps.push_back({"app_" + s.name + "_" + t.name,
                      {Argument{{}, st}, Argument{{}, s}},
                      t});
      lams.push_back({"lam_" + s.name + "_" + t.name, {Argument{{s}, t}}, st});
    }
  std::vector<OpDecl> ops = std::move(apps);
  ops.insert(ops.end(), std::make_move_iterator(lams.begin()), std::make_move_iterator(lams.end()));
  return Signature(std::move(sorts), std::move(ops));
}

}  // namespace sortal
