#include "sortal/chain.hpp"

#include <algorithm>

namespace sortal {

std::string Skeleton::str() const {
  if (is_var) return "(v " + std::to_string(var_index) + ")";
  std::string out = "(o " + std::to_string(op);
  for (const SkeletonPtr& k : kids) {
    out += ' ';
    out += k->str();
  }
  out += ')';
  return out;
}

std::vector<SkeletonPtr> eval_H(const Signature& sig, const LevelFn& argument,
                                const Context& ctx, const Sort& s) {
  std::vector<SkeletonPtr> out;
  for (std::size_t oi = 0; oi < sig.ops().size(); ++oi) {
    const OpDecl& op = sig.ops()[oi];
    if (op.result != s) continue;  // the hat functor concentrates at the result sort
    if (op.args.empty()) {
      auto sk = std::make_shared<Skeleton>();
      sk->is_var = false;
      sk->op = oi;
      out.push_back(std::move(sk));
      continue;
    }
    std::vector<const std::vector<SkeletonPtr>*> sets;
    bool feasible = true;
    for (const Argument& a : op.args) {
      const auto& set = argument(option_list(sig, ctx, a.binders), a.sort);
      if (set.empty()) {
        feasible = false;  // a product with an empty factor is empty
        break;
      }
      sets.push_back(&set);
    }
    if (!feasible) continue;
    std::vector<std::size_t> idx(op.args.size(), 0);
    while (true) {
      auto sk = std::make_shared<Skeleton>();
      sk->is_var = false;
      sk->op = oi;
      sk->kids.reserve(idx.size());
      for (std::size_t j = 0; j < idx.size(); ++j) sk->kids.push_back((*sets[j])[idx[j]]);
      out.push_back(std::move(sk));
      std::size_t j = idx.size();
      while (j > 0 && ++idx[j - 1] == sets[j - 1]->size()) idx[--j] = 0;
      if (j == 0) break;
    }
  }
  return out;
}

ChainOracle::ChainOracle(const Signature& sig, ChainOptions opts) : sig_(sig), opts_(opts) {}

std::uint64_t ChainOracle::level_count(std::size_t n, const Context& ctx, const Sort& s) {
  if (n == 0) return 0;
  auto key = std::make_tuple(n, ctx.str(), s.name);
  if (auto it = count_memo_.find(key); it != count_memo_.end()) return it->second;

  auto sat_add = [](std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
  };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    return (a != 0 && b > UINT64_MAX / a) ? UINT64_MAX : a * b;
  };

  std::uint64_t total = 0;
  for (const Sort& e : ctx.entries)
    if (e == s) total = sat_add(total, 1);
  for (const OpDecl& op : sig_.ops()) {
    if (op.result != s) continue;
    std::uint64_t prod = 1;
    for (const Argument& a : op.args)
      prod = sat_mul(prod, level_count(n - 1, option_list(sig_, ctx, a.binders), a.sort));
    total = sat_add(total, prod);
  }
  count_memo_.emplace(std::move(key), total);
  return total;
}

const std::vector<SkeletonPtr>& ChainOracle::level(std::size_t n, const Context& ctx,
                                                   const Sort& s) {
  if (n > opts_.level_bound)
    throw DomainError("chain: level " + std::to_string(n) + " exceeds bound " +
                      std::to_string(opts_.level_bound));
  auto key = std::make_tuple(n, ctx.str(), s.name);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  std::uint64_t count = level_count(n, ctx, s);
  if (count > opts_.cell_budget)
    throw DomainError("chain: level " + std::to_string(n) + " at (" + ctx.str() + "; " + s.name +
                      ") has " + std::to_string(count) + " elements, over the budget of " +
                      std::to_string(opts_.cell_budget));

  std::vector<SkeletonPtr> out;
  if (n > 0) {
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (ctx[i] != s) continue;
      auto sk = std::make_shared<Skeleton>();
      sk->is_var = true;
      sk->var_index = i;
      out.push_back(std::move(sk));
    }
    LevelFn prev = [&](const Context& c, const Sort& t) -> const std::vector<SkeletonPtr>& {
      return level(n - 1, c, t);
    };
    std::vector<SkeletonPtr> inner = eval_H(sig_, prev, ctx, s);
    out.insert(out.end(), std::make_move_iterator(inner.begin()),
               std::make_move_iterator(inner.end()));
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

namespace {

Term skeleton_to_term(const Signature& sig, const SkeletonPtr& sk, const Context& ctx) {
  if (sk->is_var) return var(ctx, sk->var_index);
  const OpDecl& op = sig.ops()[sk->op];
  std::vector<Term> args;
  args.reserve(sk->kids.size());
  for (std::size_t j = 0; j < sk->kids.size(); ++j)
    args.push_back(skeleton_to_term(sig, sk->kids[j], option_list(sig, ctx, op.args[j].binders)));
  return mk_op(sig, ctx, op.name, std::move(args));
}

}  // namespace

Verdict check_against_terms(const Signature& sig, const Context& ctx, const Sort& s,
                            std::size_t n, const ChainOptions& opts) {
  const std::string law = "chain/bijection";
  ChainOracle oracle(sig, opts);

  // Arithmetic feasibility check before any materialization.
  for (std::size_t m = 0; m <= n; ++m) {
    std::uint64_t count = oracle.level_count(m, ctx, s);
    if (count > opts.cell_budget)
      return Verdict::fail(law, 0,
                           {{"reason", "cell budget exceeded"},
                            {"context", ctx.str()},
                            {"sort", s.name},
                            {"level", m},
                            {"exact_count", count},
                            {"budget", opts.cell_budget}});
  }

  nlohmann::json cell{{"context", ctx.str()}, {"sort", s.name}, {"level", n}};

  // Child cells at binder-extended contexts carry their own guards; surface
  // any overrun as a verdict instead of an exception.
  std::vector<std::string> image, listed;
  const std::vector<SkeletonPtr>* skels = nullptr;
  try {
    skels = &oracle.level(n, ctx, s);
    image.reserve(skels->size());
    for (const SkeletonPtr& sk : *skels)
      image.push_back(print_term(skeleton_to_term(sig, sk, ctx)));
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
      cell["reason"] = "skeleton map not injective";
      return Verdict::fail(law, skels->size(), cell);
    }

    EnumerateOptions eopts;
    eopts.height_bound = std::max<std::size_t>(n, eopts.height_bound);
    eopts.budget = opts.cell_budget < UINT64_MAX / 4 ? opts.cell_budget * 4 : UINT64_MAX;
    std::vector<Term> terms = enumerate_terms(sig, ctx, s, n, eopts);
    listed.reserve(terms.size());
    for (const Term& t : terms) listed.push_back(print_term(t));
  } catch (const DomainError& e) {
    cell["reason"] = "budget exceeded during materialization";
    cell["detail"] = e.what();
    return Verdict::fail(law, 0, cell);
  }
  std::sort(listed.begin(), listed.end());
  if (std::adjacent_find(listed.begin(), listed.end()) != listed.end()) {
    cell["reason"] = "enumerate produced duplicates";
    return Verdict::fail(law, listed.size(), cell);
  }

  if (image != listed) {
    cell["reason"] = "image differs from enumeration";
    cell["skeletons"] = image.size();
    cell["terms"] = listed.size();
    std::vector<std::string> diff;
    std::set_symmetric_difference(image.begin(), image.end(), listed.begin(), listed.end(),
                                  std::back_inserter(diff));
    cell["first_difference"] = diff.empty() ? "" : diff.front();
    return Verdict::fail(law, image.size(), cell);
  }

  // Chain inclusion: level n-1 embeds into level n, compatibly with the map
  // (the map is a pure function of the skeleton, so agreement is inclusion).
  if (n > 0) {
    std::vector<std::string> prev;
    for (const SkeletonPtr& sk : oracle.level(n - 1, ctx, s)) prev.push_back(sk->str());
    std::sort(prev.begin(), prev.end());
    std::vector<std::string> cur;
    for (const SkeletonPtr& sk : *skels) cur.push_back(sk->str());
    std::sort(cur.begin(), cur.end());
    if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) {
      cell["reason"] = "level n-1 not included in level n";
      return Verdict::fail(law, skels->size(), cell);
    }
  }

  return Verdict::pass(law, skels->size());
}

std::string count_csv_row(std::size_t n, const Context& ctx, const Sort& s, std::uint64_t count) {
  return std::to_string(n) + "," + ctx.str() + "," + s.name + "," + std::to_string(count);
}

}  // namespace sortal
