#include "sortal/sampler.hpp"

#include <algorithm>

namespace sortal::sampling {

const std::vector<Term>& TermPool::pool(const Context& ctx, const Sort& s) {
  auto key = std::make_pair(ctx.str(), s.name);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::vector<Term> terms = enumerate_terms(sig_, ctx, s, height_);
  return memo_.emplace(std::move(key), std::move(terms)).first->second;
}

bool Inhabitation::at(const Context& ctx, const Sort& s, std::size_t h) {
  if (h == 0) return false;
  auto key = std::make_tuple(ctx.str(), s.name, h);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  memo_.emplace(key, false);  // cycle-safe placeholder; heights strictly decrease anyway
  bool found = false;
  for (std::size_t i = 0; i < ctx.size() && !found; ++i)
    if (ctx[i] == s) found = true;
  if (!found) {
    for (const OpDecl& op : sig_.ops()) {
      if (op.result != s) continue;
      if (!op.args.empty() && h < 2) continue;
      bool all = true;
      for (const Argument& a : op.args)
        if (!at(option_list(sig_, ctx, a.binders), a.sort, h - 1)) {
          all = false;
          break;
        }
      if (all) {
        found = true;
        break;
      }
    }
  }
  memo_[key] = found;
  return found;
}

Context sample_context(Rng& rng, const Signature& sig, std::size_t max_len) {
  Context ctx;
  if (sig.sorts().empty()) return ctx;
  std::size_t len = rng.pick(max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    ctx.entries.push_back(sig.sorts()[rng.pick(sig.sorts().size())]);
  return ctx;
}

Context sample_assignable_context(Rng& rng, const Signature& sig, TermPool& pool,
                                  const Context& target, std::size_t max_len) {
  std::vector<Sort> usable;
  for (const Sort& s : sig.sorts())
    if (pool.inhabited(target, s)) usable.push_back(s);
  Context ctx;
  if (usable.empty()) return ctx;
  std::size_t len = rng.pick(max_len + 1);
  for (std::size_t i = 0; i < len; ++i) ctx.entries.push_back(usable[rng.pick(usable.size())]);
  return ctx;
}

std::optional<Term> sample_term(Rng& rng, const Signature& sig, Inhabitation& inhab,
                                const Context& ctx, const Sort& s, std::size_t max_height) {
  if (!inhab.at(ctx, s, max_height)) return std::nullopt;
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (ctx[i] == s) vars.push_back(i);
  std::vector<std::size_t> ops;
  for (std::size_t oi = 0; oi < sig.ops().size(); ++oi) {
    const OpDecl& op = sig.ops()[oi];
    if (op.result != s) continue;
    if (!op.args.empty() && max_height < 2) continue;
    bool all = true;
    for (const Argument& a : op.args)
      if (!inhab.at(option_list(sig, ctx, a.binders), a.sort, max_height - 1)) {
        all = false;
        break;
      }
    if (all) ops.push_back(oi);
  }
  // Prefer operation nodes so sampled terms actually grow.
  bool use_op = !ops.empty() && (vars.empty() || rng.chance(7, 10));
  if (!use_op && vars.empty()) use_op = true;
  if (!use_op) return var(ctx, vars[rng.pick(vars.size())]);
  const OpDecl& op = sig.ops()[ops[rng.pick(ops.size())]];
  std::vector<Term> args;
  for (const Argument& a : op.args) {
    auto sub = sample_term(rng, sig, inhab, option_list(sig, ctx, a.binders), a.sort,
                           max_height - 1);
    if (!sub) return std::nullopt;  // unreachable given the feasibility filter
    args.push_back(std::move(*sub));
  }
  return mk_op(sig, ctx, op.name, std::move(args));
}

Assignment sample_assignment(Rng& rng, TermPool& pool, const Context& source,
                             const Context& target) {
  Assignment f;
  f.source = source;
  f.target = target;
  for (const Sort& s : source.entries) {
    const std::vector<Term>& candidates = pool.pool(target, s);
    if (candidates.empty())
      throw DomainError("sample_assignment: sort \"" + s.name + "\" uninhabited over \"" +
                        target.str() + "\"");
    f.map.push_back(candidates[rng.pick(candidates.size())]);
  }
  return f;
}

std::vector<PointedEndo> pointed_endo_generators(const Signature& sig) {
  std::vector<PointedEndo> out;
  out.push_back(PointedEndo::identity());
  for (const Sort& s : sig.sorts()) out.push_back(PointedEndo::option_sort(s));
  out.push_back(PointedEndo::option_list({}));
  for (const Sort& s : sig.sorts())
    for (const Sort& t : sig.sorts()) out.push_back(PointedEndo::option_list({s, t}));
  out.push_back(PointedEndo::monad({}));
  for (const Sort& s : sig.sorts()) out.push_back(PointedEndo::monad({s}));
  for (const Sort& s : sig.sorts())
    for (const Sort& t : sig.sorts()) out.push_back(PointedEndo::monad({s, t}));
  return out;
}

PointedEndo sample_pointed_endo(Rng& rng, const Signature& sig, std::size_t depth) {
  const auto& sorts = sig.sorts();
  if (sorts.empty()) return PointedEndo::identity();
  auto sort_at = [&](std::size_t i) { return sorts[i % sorts.size()]; };
  switch (depth > 0 && rng.chance(1, 3) ? 4 : rng.pick(4)) {
    case 0:
      return PointedEndo::identity();
    case 1:
      return PointedEndo::option_sort(sort_at(rng.pick(sorts.size())));
    case 2: {
      std::vector<Sort> block;
      std::size_t n = rng.pick(3);
      for (std::size_t i = 0; i < n; ++i) block.push_back(sort_at(rng.pick(sorts.size())));
      return PointedEndo::option_list(std::move(block));
    }
    case 3: {
      std::vector<Sort> window;
      std::size_t n = rng.pick(3);
      for (std::size_t i = 0; i < n; ++i) window.push_back(sort_at(rng.pick(sorts.size())));
      return PointedEndo::monad(std::move(window));
    }
    default:
      return PointedEndo::composite(sample_pointed_endo(rng, sig, depth - 1),
                                    sample_pointed_endo(rng, sig, depth - 1));
  }
}

}  // namespace sortal::sampling
