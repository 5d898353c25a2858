#include "sortal/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace sortal {

struct Term::Node {
  Context ctx;
  Sort sort;
  // var when op_name empty
  std::string op_name;
  std::size_t var_index = 0;
  std::vector<Term> args;
};

bool Term::is_var() const { return node_->op_name.empty(); }
std::size_t Term::var_index() const { return node_->var_index; }
const std::string& Term::op_name() const { return node_->op_name; }
const std::vector<Term>& Term::args() const { return node_->args; }
const Context& Term::context() const { return node_->ctx; }
const Sort& Term::sort() const { return node_->sort; }

namespace {

// Structure-only comparison; subterm contexts are forced by the root's.
bool same_structure(const Term& a, const Term& b) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.var_index() == b.var_index();
  if (a.op_name() != b.op_name()) return false;
  if (a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!same_structure(a.args()[i], b.args()[i])) return false;
  return true;
}

}  // namespace

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->ctx != other.node_->ctx || node_->sort != other.node_->sort) return false;
  return same_structure(*this, other);
}

std::string Term::str() const { return print_term(*this); }

Term var(const Context& ctx, std::size_t index) {
  if (index >= ctx.size())
    throw DomainError("var: index " + std::to_string(index) + " out of range for context \"" +
                      ctx.str() + "\"");
  auto node = std::make_shared<Term::Node>();
  node->ctx = ctx;
  node->sort = ctx[index];
  node->var_index = index;
  return Term(std::move(node));
}

namespace {

Term mk_op_impl(const Signature& sig, const Context& ctx, const OpDecl& op,
                std::vector<Term> args, bool check) {
  if (check) {
    if (args.size() != op.args.size())
      throw DomainError("mk_op: op \"" + op.name + "\" expects " +
                        std::to_string(op.args.size()) + " arguments, got " +
                        std::to_string(args.size()));
    for (std::size_t j = 0; j < args.size(); ++j) {
      if (!args[j].valid()) throw DomainError("mk_op: empty term at argument " + std::to_string(j));
      Context expected = option_list(sig, ctx, op.args[j].binders);
      if (args[j].context() != expected)
        throw DomainError("mk_op: argument " + std::to_string(j) + " of \"" + op.name +
                          "\" lives over context \"" + args[j].context().str() +
                          "\", expected \"" + expected.str() + "\"");
      if (args[j].sort() != op.args[j].sort)
        throw DomainError("mk_op: argument " + std::to_string(j) + " of \"" + op.name +
                          "\" has sort \"" + args[j].sort().name + "\", expected \"" +
                          op.args[j].sort.name + "\"");
    }
  }
  auto node = std::make_shared<Term::Node>();
  node->ctx = ctx;
  node->sort = op.result;
  node->op_name = op.name;
  node->args = std::move(args);
  return Term(std::move(node));
}

}  // namespace

Term mk_op(const Signature& sig, const Context& ctx, std::string_view op_name,
           std::vector<Term> args) {
  const OpDecl* op = sig.find_op(op_name);
  if (!op) throw DomainError("mk_op: unknown op \"" + std::string(op_name) + "\"");
  return mk_op_impl(sig, ctx, *op, std::move(args), true);
}

namespace {

Term rename_impl(const Signature* sig, const Term& t, const Renaming& rho) {
  if (t.is_var()) {
    Term out = var(rho.target, rho(t.var_index()));
    return out;
  }
  // Rebuild without re-checking: the renaming is sort-preserving, so the
  // shape stays well-sorted.
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) {
    std::size_t block = a.context().size() - t.context().size();
    std::span<const Sort> binders(a.context().entries.data(), block);
    args.push_back(rename_impl(sig, a, rho.under_binders(binders)));
  }
  auto node = std::make_shared<Term::Node>();
  node->ctx = rho.target;
  node->sort = t.sort();
  node->op_name = t.op_name();
  node->args = std::move(args);
  return Term(std::move(node));
}

}  // namespace

Term rename(const Term& t, const Renaming& rho) {
  if (!t.valid()) throw DomainError("rename: empty term");
  if (t.context() != rho.source)
    throw DomainError("rename: term context \"" + t.context().str() +
                      "\" does not match renaming source \"" + rho.source.str() + "\"");
  return rename_impl(nullptr, t, rho);
}

std::size_t height(const Term& t) {
  if (t.is_var()) return 1;
  std::size_t h = 0;
  for (const Term& a : t.args()) h = std::max(h, height(a));
  return h + 1;
}

namespace {

struct EnumMemo {
  std::map<std::tuple<std::string, std::string, std::size_t>, std::vector<Term>> table;
  std::uint64_t produced = 0;
  std::uint64_t budget = 0;
};

const std::vector<Term>& enum_rec(const Signature& sig, const Context& ctx, const Sort& s,
                                  std::size_t h, EnumMemo& memo) {
  auto key = std::make_tuple(ctx.str(), s.name, h);
  if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;

  std::vector<Term> out;
  if (h > 0) {
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (ctx[i] == s) out.push_back(var(ctx, i));
    for (const OpDecl& op : sig.ops()) {
      if (op.result != s) continue;
      if (op.args.empty()) {
        out.push_back(mk_op_impl(sig, ctx, op, {}, false));
        continue;
      }
      if (h < 2) continue;
      std::vector<const std::vector<Term>*> arg_lists;
      bool feasible = true;
      for (const Argument& a : op.args) {
        const auto& lst = enum_rec(sig, option_list(sig, ctx, a.binders), a.sort, h - 1, memo);
        if (lst.empty()) {
          feasible = false;
          break;
        }
        arg_lists.push_back(&lst);
      }
      if (!feasible) continue;
      // Odometer over argument tuples, leftmost argument most significant.
      std::vector<std::size_t> idx(op.args.size(), 0);
      while (true) {
        std::vector<Term> args;
        args.reserve(idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) args.push_back((*arg_lists[j])[idx[j]]);
        out.push_back(mk_op_impl(sig, ctx, op, std::move(args), false));
        std::size_t j = idx.size();
        while (j > 0 && ++idx[j - 1] == arg_lists[j - 1]->size()) idx[--j] = 0;
        if (j == 0) break;
      }
    }
  }
  memo.produced += out.size();
  if (memo.produced > memo.budget)
    throw DomainError("enumerate: budget exceeded (" + std::to_string(memo.budget) + " terms)");
  return memo.table.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

std::vector<Term> enumerate_terms(const Signature& sig, const Context& ctx, const Sort& s,
                                  std::size_t max_height, const EnumerateOptions& opts) {
  if (max_height > opts.height_bound)
    throw DomainError("enumerate: max_height " + std::to_string(max_height) +
                      " exceeds bound " + std::to_string(opts.height_bound));
  if (!sig.has_sort(s)) throw DomainError("enumerate: unknown sort \"" + s.name + "\"");
  check_context(sig, ctx);
  EnumMemo memo;
  memo.budget = opts.budget;
  return enum_rec(sig, ctx, s, max_height, memo);
}

std::string print_term(const Term& t) {
  if (!t.valid()) throw DomainError("print_term: empty term");
  if (t.is_var()) return "(var " + std::to_string(t.var_index()) + ")";
  std::string out = "(op " + t.op_name();
  for (const Term& a : t.args()) {
    out += ' ';
    out += print_term(a);
  }
  out += ')';
  return out;
}

namespace {

struct Tokens {
  std::vector<std::string> toks;
  std::size_t pos = 0;

  const std::string& peek() const {
    if (pos >= toks.size()) throw ParseError("term: unexpected end of input");
    return toks[pos];
  }
  std::string take() {
    std::string t = peek();
    ++pos;
    return t;
  }
  bool done() const { return pos == toks.size(); }
};

Tokens tokenize(std::string_view text) {
  Tokens out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.toks.push_back(cur);
      cur.clear();
    }
  };
  for (char c : text) {
    if (c == '(' || c == ')') {
      flush();
      out.toks.push_back(std::string(1, c));
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

Term parse_rec(const Signature& sig, const Context& ctx, Tokens& toks) {
  if (toks.take() != "(") throw ParseError("term: expected '('");
  std::string head = toks.take();
  if (head == "var") {
    std::string num = toks.take();
    if (num.empty() || num.size() > 9 ||
        !std::all_of(num.begin(), num.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("term: expected a variable index, got \"" + num + "\"");
    if (toks.take() != ")") throw ParseError("term: expected ')' after variable");
    return var(ctx, std::stoul(num));
  }
  if (head != "op") throw ParseError("term: expected \"var\" or \"op\", got \"" + head + "\"");
  std::string name = toks.take();
  const OpDecl* op = sig.find_op(name);
  if (!op) throw DomainError("term: unknown op \"" + name + "\"");
  std::vector<Term> args;
  while (toks.peek() != ")") {
    if (args.size() == op->args.size())
      throw DomainError("term: too many arguments for op \"" + name + "\"");
    const Argument& decl = op->args[args.size()];
    args.push_back(parse_rec(sig, option_list(sig, ctx, decl.binders), toks));
  }
  toks.take();  // ')'
  return mk_op(sig, ctx, name, std::move(args));
}

}  // namespace

Term parse_term(const Signature& sig, const Context& ctx, std::string_view text,
                const std::optional<Sort>& expect) {
  check_context(sig, ctx);
  Tokens toks = tokenize(text);
  if (toks.done()) throw ParseError("term: empty input");
  Term t = parse_rec(sig, ctx, toks);
  if (!toks.done()) throw ParseError("term: trailing input after term");
  if (expect && t.sort() != *expect)
    throw DomainError("term: has sort \"" + t.sort().name + "\", expected \"" + expect->name +
                      "\"");
  return t;
}

bool well_sorted(const Signature& sig, const Term& t) {
  if (!t.valid()) return false;
  if (t.is_var()) {
    return t.var_index() < t.context().size() &&
           t.context()[t.var_index()] == t.sort();
  }
  const OpDecl* op = sig.find_op(t.op_name());
  if (!op || t.sort() != op->result || t.args().size() != op->args.size()) return false;
  for (std::size_t j = 0; j < t.args().size(); ++j) {
    const Term& a = t.args()[j];
    if (a.context() != option_list(sig, t.context(), op->args[j].binders)) return false;
    if (a.sort() != op->args[j].sort) return false;
    if (!well_sorted(sig, a)) return false;
  }
  return true;
}

}  // namespace sortal
