#include "mutants.hpp"

namespace sortal::testing {

namespace {

Assignment lift_with_cutoff_bug(const Signature& sig, const Assignment& f,
                                std::span<const Sort> binders) {
  Assignment out;
  out.source = option_list(sig, f.source, binders);
  out.target = option_list(sig, f.target, binders);
  for (std::size_t i = 0; i < binders.size(); ++i) out.map.push_back(var(out.target, i));
  Renaming weaken = Renaming::weakening(f.target, binders);
  for (std::size_t j = 0; j < f.map.size(); ++j) {
    if (j == 0 && !binders.empty() && binders.size() < out.target.size() &&
        out.target[binders.size()] == out.source[binders.size()]) {
      // the first free variable is mistaken for a bound one
      out.map.push_back(var(out.target, binders.size()));
    } else {
      out.map.push_back(rename(f.map[j], weaken));
    }
  }
  return out;
}

}  // namespace

Term mutant_bind_lift_off_by_one(const Signature& sig, const Assignment& f, const Term& t) {
  if (t.is_var()) return f.map[t.var_index()];
  const OpDecl& op = *sig.find_op(t.op_name());
  std::vector<Term> args;
  for (std::size_t j = 0; j < t.args().size(); ++j) {
    Assignment lifted = lift_with_cutoff_bug(sig, f, op.args[j].binders);
    args.push_back(mutant_bind_lift_off_by_one(sig, lifted, t.args()[j]));
  }
  return mk_op(sig, f.target, t.op_name(), std::move(args));
}

Renaming mutant_dist_skip_weakening(const Signature& sig, std::span<const Sort> binders,
                                    const PointedEndo& z, const Context& ctx) {
  Context extended = option_list(sig, ctx, binders);
  Renaming out;
  out.source = option_list(sig, z.apply(sig, ctx), binders);
  out.target = z.apply(sig, extended);
  out.map.resize(out.source.size());
  for (std::size_t i = 0; i < binders.size(); ++i)
    out.map[i] = z.point_var(sig, extended, i);
  for (std::size_t v = 0; v + binders.size() < out.source.size(); ++v)
    out.map[binders.size() + v] = std::min(v, out.target.size() - 1);
  return out;
}

Renaming mutant_dist_dropped(const Signature& sig, std::span<const Sort> binders,
                             const PointedEndo& z, const Context& ctx) {
  Context extended = option_list(sig, ctx, binders);
  Renaming out;
  out.source = option_list(sig, z.apply(sig, ctx), binders);
  out.target = z.apply(sig, extended);
  out.map.resize(out.source.size());
  for (std::size_t i = 0; i < out.map.size(); ++i)
    out.map[i] = std::min(i, out.target.size() - 1);
  return out;
}

Term mutant_subst_swapped_injections(const Signature& sig, const Assignment& f, const Term& t) {
  Coproduct cop = coproduct(f.source, f.target);
  Assignment copair;
  copair.source = cop.context;
  copair.target = f.target;
  // wrong order: units first, then the images
  for (std::size_t j = 0; j < f.source.size(); ++j)
    copair.map.push_back(var(f.target, j < f.target.size() ? j : 0));
  for (const Term& img : f.map) copair.map.push_back(img);
  for (std::size_t j = copair.map.size(); j < cop.context.size(); ++j)
    copair.map.push_back(var(f.target, j - f.source.size()));
  copair.map.resize(cop.context.size());
  return bind(sig, copair, t);
}

Term mutant_bind_wrong_eta(const Signature& sig, const Assignment& f, const Term& t) {
  if (t.is_var()) {
    std::size_t v = t.var_index();
    if (v < f.target.size() && f.target[v] == f.source[v]) return var(f.target, v);
    return f.map[v];
  }
  const OpDecl& op = *sig.find_op(t.op_name());
  std::vector<Term> args;
  for (std::size_t j = 0; j < t.args().size(); ++j) {
    Assignment lifted;
    const auto& binders = op.args[j].binders;
    lifted.source = option_list(sig, f.source, binders);
    lifted.target = option_list(sig, f.target, binders);
    for (std::size_t i = 0; i < binders.size(); ++i) lifted.map.push_back(var(lifted.target, i));
    Renaming weaken = Renaming::weakening(f.target, binders);
    for (const Term& img : f.map) lifted.map.push_back(rename(img, weaken));
    args.push_back(mutant_bind_wrong_eta(sig, lifted, t.args()[j]));
  }
  return mk_op(sig, f.target, t.op_name(), std::move(args));
}

Term mutant_bind_non_recursive(const Signature& sig, const Assignment& f, const Term& t) {
  if (t.is_var()) return f.map[t.var_index()];
  std::vector<Term> args = t.args();
  return mk_op(sig, f.target, t.op_name(), std::move(args));
}

std::vector<SkeletonPtr> mutant_eval_H_drop_nullary(const Signature& sig, const LevelFn& argument,
                                                    const Context& ctx, const Sort& s) {
  std::vector<SkeletonPtr> out;
  for (const SkeletonPtr& sk : eval_H(sig, argument, ctx, s)) {
    if (!sk->is_var && sk->kids.empty()) continue;
    out.push_back(sk);
  }
  return out;
}

std::vector<Term> mutant_enumerate_height_off(const Signature& sig, const Context& ctx,
                                              const Sort& s, std::size_t max_height) {
  std::vector<Term> out;
  // wrong: variables are admitted one level early, so the grading no longer
  // matches the chain levels
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (ctx[i] == s) out.push_back(var(ctx, i));
  if (max_height == 0) return out;
  for (const OpDecl& op : sig.ops()) {
    if (op.result != s) continue;
    if (op.args.empty()) {
      out.push_back(mk_op(sig, ctx, op.name, {}));
      continue;
    }
    if (max_height < 2) continue;
    std::vector<std::vector<Term>> arg_lists;
    bool feasible = true;
    for (const Argument& a : op.args) {
      auto lst = mutant_enumerate_height_off(sig, option_list(sig, ctx, a.binders), a.sort,
                                             max_height - 1);
      if (lst.empty()) {
        feasible = false;
        break;
      }
      arg_lists.push_back(std::move(lst));
    }
    if (!feasible) continue;
    std::vector<std::size_t> idx(op.args.size(), 0);
    while (true) {
      std::vector<Term> args;
      for (std::size_t j = 0; j < idx.size(); ++j) args.push_back(arg_lists[j][idx[j]]);
      out.push_back(mk_op(sig, ctx, op.name, std::move(args)));
      std::size_t j = idx.size();
      while (j > 0 && ++idx[j - 1] == arg_lists[j - 1].size()) idx[--j] = 0;
      if (j == 0) break;
    }
  }
  return out;
}

}  // namespace sortal::testing
