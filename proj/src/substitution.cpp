#include "sortal/substitution.hpp"

#include <algorithm>
#include <cassert>

#include "sortal/sampler.hpp"

namespace sortal {

// ---------------------------------------------------------------------------
// Assignment

Assignment Assignment::unit(const Context& ctx) {
  Assignment f;
  f.source = ctx;
  f.target = ctx;
  f.map.reserve(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) f.map.push_back(var(ctx, i));
  return f;
}

void Assignment::check(const Signature& sig) const {
  if (map.size() != source.size())
    throw DomainError("assignment: " + std::to_string(map.size()) + " images for " +
                      std::to_string(source.size()) + " variables");
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (!map[i].valid())
      throw DomainError("assignment: image " + std::to_string(i) + " is empty");
    if (map[i].context() != target)
      throw DomainError("assignment: image " + std::to_string(i) + " lives over \"" +
                        map[i].context().str() + "\", expected \"" + target.str() + "\"");
    if (map[i].sort() != source[i])
      throw DomainError("assignment: image " + std::to_string(i) + " has sort \"" +
                        map[i].sort().name + "\", expected \"" + source[i].name + "\"");
    if (!well_sorted(sig, map[i]))
      throw DomainError("assignment: image " + std::to_string(i) + " is ill-sorted");
  }
}

// ---------------------------------------------------------------------------
// PointedEndo

PointedEndo PointedEndo::identity() { return PointedEndo{}; }

PointedEndo PointedEndo::option_sort(Sort s) {
  PointedEndo z;
  z.kind_ = Kind::option_sort;
  z.sort_ = std::move(s);
  return z;
}

PointedEndo PointedEndo::option_list(std::vector<Sort> sorts) {
  PointedEndo z;
  z.kind_ = Kind::option_list;
  z.sorts_ = std::move(sorts);
  return z;
}

PointedEndo PointedEndo::monad(std::vector<Sort> window) {
  PointedEndo z;
  z.kind_ = Kind::monad;
  z.sorts_ = std::move(window);
  return z;
}

PointedEndo PointedEndo::composite(PointedEndo outer, PointedEndo inner) {
  PointedEndo z;
  z.kind_ = Kind::composite;
  z.outer_ = std::make_shared<PointedEndo>(std::move(outer));
  z.inner_ = std::make_shared<PointedEndo>(std::move(inner));
  return z;
}

Context PointedEndo::apply(const Signature& sig, const Context& ctx) const {
  switch (kind_) {
    case Kind::identity:
      return ctx;
    case Kind::option_sort:
      return sortal::option_sort(sig, ctx, sort_);
    case Kind::option_list:
      return sortal::option_list(sig, ctx, sorts_);
    case Kind::monad: {
      for (const Sort& s : sorts_)
        if (!sig.has_sort(s)) throw DomainError("monad window: unknown sort \"" + s.name + "\"");
      Context out = ctx;
      out.entries.insert(out.entries.end(), sorts_.begin(), sorts_.end());
      return out;
    }
    case Kind::composite:
      return outer_->apply(sig, inner_->apply(sig, ctx));
  }
  throw DomainError("unreachable");
}

std::size_t PointedEndo::point_var(const Signature& sig, const Context& ctx,
                                   std::size_t i) const {
  if (i >= ctx.size()) throw DomainError("point: variable index out of range");
  switch (kind_) {
    case Kind::identity:
      return i;
    case Kind::option_sort:
      return i + 1;
    case Kind::option_list:
      return i + sorts_.size();
    case Kind::monad:
      return i;
    case Kind::composite:
      return outer_->point_var(sig, inner_->apply(sig, ctx), inner_->point_var(sig, ctx, i));
  }
  throw DomainError("unreachable");
}

Renaming PointedEndo::map(const Signature& sig, const Renaming& rho) const {
  switch (kind_) {
    case Kind::identity:
      return rho;
    case Kind::option_sort: {
      const Sort block[1] = {sort_};
      return rho.under_binders(block);
    }
    case Kind::option_list:
      return rho.under_binders(sorts_);
    case Kind::monad: {
      Renaming out;
      out.source = apply(sig, rho.source);
      out.target = apply(sig, rho.target);
      out.map.resize(out.source.size());
      for (std::size_t i = 0; i < rho.source.size(); ++i) out.map[i] = rho(i);
      for (std::size_t j = 0; j < sorts_.size(); ++j)
        out.map[rho.source.size() + j] = rho.target.size() + j;
      return out;
    }
    case Kind::composite:
      return outer_->map(sig, inner_->map(sig, rho));
  }
  throw DomainError("unreachable");
}

std::string PointedEndo::str() const {
  switch (kind_) {
    case Kind::identity:
      return "Id";
    case Kind::option_sort:
      return "opt(" + sort_.name + ")";
    case Kind::option_list: {
      std::string out = "opts(";
      for (std::size_t i = 0; i < sorts_.size(); ++i)
        out += (i ? "," : "") + sorts_[i].name;
      return out + ")";
    }
    case Kind::monad: {
      std::string out = "T[";
      for (std::size_t i = 0; i < sorts_.size(); ++i)
        out += (i ? "," : "+") + sorts_[i].name;
      return out + "]";
    }
    case Kind::composite:
      return "(" + outer_->str() + " . " + inner_->str() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Distributive law and strength

Renaming dist_option_list(const Signature& sig, std::span<const Sort> binders,
                          const PointedEndo& z, const Context& ctx) {
  Context extended = option_list(sig, ctx, binders);
  Renaming out;
  out.source = option_list(sig, z.apply(sig, ctx), binders);
  out.target = z.apply(sig, extended);
  out.map.resize(out.source.size());
  for (std::size_t i = 0; i < binders.size(); ++i)
    out.map[i] = z.point_var(sig, extended, i);
  Renaming zw = z.map(sig, Renaming::weakening(ctx, binders));
  for (std::size_t v = 0; v < zw.map.size(); ++v) out.map[binders.size() + v] = zw(v);
  if (!out.sort_preserving())
    throw DomainError("distributive law produced a non-sort-preserving map");
  return out;
}

Renaming dist_option(const Signature& sig, const Sort& s, const PointedEndo& z,
                     const Context& ctx) {
  const Sort block[1] = {s};
  return dist_option_list(sig, block, z, ctx);
}

std::vector<Term> dist_option_terms(const Signature& sig, const Sort& s, const PointedEndo& z,
                                    const Context& ctx) {
  Renaming r = dist_option(sig, s, z, ctx);
  std::vector<Term> out;
  out.reserve(r.map.size());
  for (std::size_t i = 0; i < r.map.size(); ++i) out.push_back(var(r.target, r(i)));
  return out;
}

namespace {

using DistFn = std::function<Renaming(const Signature&, std::span<const Sort>,
                                      const PointedEndo&, const Context&)>;

DistFn dist_or_default(const SubstHooks& hooks) {
  if (hooks.dist) return hooks.dist;
  return [](const Signature& sig, std::span<const Sort> binders, const PointedEndo& z,
            const Context& ctx) { return dist_option_list(sig, binders, z, ctx); };
}

OpLayer theta_impl(const Signature& sig, const OpLayer& layer, const PointedEndo& z,
                   const PointedEndo& under, const Context& gamma, const DistFn& dist) {
  const OpDecl* op = sig.find_op(layer.op);
  if (!op) throw DomainError("theta: unknown op \"" + layer.op + "\"");
  if (layer.args.size() != op->args.size())
    throw DomainError("theta: arity mismatch for op \"" + layer.op + "\"");
  if (layer.base != z.apply(sig, gamma))
    throw DomainError("theta: layer base \"" + layer.base.str() +
                      "\" is not Z applied to \"" + gamma.str() + "\"");
  OpLayer out;
  out.op = layer.op;
  out.base = gamma;
  out.args.reserve(layer.args.size());
  for (std::size_t j = 0; j < layer.args.size(); ++j) {
    Renaming r = under.map(sig, dist(sig, op->args[j].binders, z, gamma));
    out.args.push_back(rename(layer.args[j], r));
  }
  return out;
}

}  // namespace

OpLayer theta(const Signature& sig, const OpLayer& layer, const PointedEndo& z,
              const Context& gamma) {
  return theta_impl(sig, layer, z, PointedEndo::identity(), gamma, dist_or_default({}));
}

OpLayer theta_under(const Signature& sig, const OpLayer& layer, const PointedEndo& z,
                    const PointedEndo& under, const Context& gamma) {
  return theta_impl(sig, layer, z, under, gamma, dist_or_default({}));
}

// ---------------------------------------------------------------------------
// Bracket, join, bind, subst

namespace {

// The canonical pointed extension of f under a binder block: fresh variables
// map through the unit, everything else is f weakened through Z's action.
Assignment extend_pointed(const Signature& sig, const PointedEndo& z,
                          std::span<const Sort> binders, const Assignment& f) {
  const Context& delta = f.target;
  Context ext = option_list(sig, delta, binders);
  Assignment out;
  out.source = z.apply(sig, ext);
  out.target = ext;
  out.map.resize(out.source.size());
  std::vector<bool> filled(out.source.size(), false);
  for (std::size_t i = 0; i < binders.size(); ++i) {
    std::size_t p = z.point_var(sig, ext, i);
    out.map[p] = var(ext, i);
    filled[p] = true;
  }
  Renaming weaken = Renaming::weakening(delta, binders);
  Renaming zw = z.map(sig, weaken);
  for (std::size_t v = 0; v < f.map.size(); ++v) {
    std::size_t p = zw(v);
    if (filled[p]) throw DomainError("pointed extension: point and weakening images overlap");
    out.map[p] = rename(f.map[v], weaken);
    filled[p] = true;
  }
  if (!std::all_of(filled.begin(), filled.end(), [](bool b) { return b; }))
    throw DomainError("pointed extension: positions left uncovered");
  return out;
}

Term bracket_rec(const Signature& sig, const PointedEndo& z, const Assignment& f,
                 const Term& t) {
  if (t.is_var()) return f.map[t.var_index()];
  const OpDecl& op = *sig.find_op(t.op_name());
  std::vector<Term> out;
  out.reserve(t.args().size());
  for (std::size_t j = 0; j < t.args().size(); ++j) {
    Renaming r = dist_option_list(sig, op.args[j].binders, z, f.target);
    Assignment ext = extend_pointed(sig, z, op.args[j].binders, f);
    out.push_back(bracket_rec(sig, z, ext, rename(t.args()[j], r)));
  }
  return mk_op(sig, f.target, t.op_name(), std::move(out));
}

}  // namespace

Term bracket(const Signature& sig, const PointedEndo& z, const Assignment& f, const Term& t) {
  f.check(sig);
  if (f.source != z.apply(sig, f.target))
    throw DomainError("bracket: morphism source \"" + f.source.str() +
                      "\" is not Z applied to \"" + f.target.str() + "\"");
  for (std::size_t i = 0; i < f.target.size(); ++i) {
    std::size_t p = z.point_var(sig, f.target, i);
    if (!(f.map[p] == var(f.target, i)))
      throw DomainError("bracket: morphism does not commute with the points at variable " +
                        std::to_string(i));
  }
  if (!t.valid() || t.context() != f.source)
    throw DomainError("bracket: term does not live over the morphism source");
  return bracket_rec(sig, z, f, t);
}

Term eta(const Context& ctx, std::size_t i) { return var(ctx, i); }

namespace {

Assignment lift_assignment(const Signature& sig, const Assignment& f,
                           std::span<const Sort> binders) {
  Assignment out;
  out.source = option_list(sig, f.source, binders);
  out.target = option_list(sig, f.target, binders);
  out.map.reserve(out.source.size());
  for (std::size_t i = 0; i < binders.size(); ++i) out.map.push_back(var(out.target, i));
  Renaming weaken = Renaming::weakening(f.target, binders);
  for (const Term& img : f.map) out.map.push_back(rename(img, weaken));
  return out;
}

Term bind_rec(const Signature& sig, const Assignment& f, const Term& t) {
  if (t.is_var()) return f.map[t.var_index()];
  const OpDecl& op = *sig.find_op(t.op_name());
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (std::size_t j = 0; j < t.args().size(); ++j) {
    Assignment lifted = lift_assignment(sig, f, op.args[j].binders);
    args.push_back(bind_rec(sig, lifted, t.args()[j]));
  }
  return mk_op(sig, f.target, t.op_name(), std::move(args));
}

}  // namespace

Term bind(const Signature& sig, const Assignment& f, const Term& t) {
  f.check(sig);
  if (!t.valid() || t.context() != f.source)
    throw DomainError("bind: term lives over \"" + (t.valid() ? t.context().str() : "") +
                      "\", expected \"" + f.source.str() + "\"");
  return bind_rec(sig, f, t);
}

Term join(const Signature& sig, const Term& outer, const Assignment& inner) {
  inner.check(sig);
  if (!outer.valid() || outer.context() != inner.source)
    throw DomainError("join: outer term does not match the inner-term context \"" +
                      inner.source.str() + "\"");
  return bind_rec(sig, inner, outer);
}

Term subst(const Signature& sig, const Assignment& f, const Term& t) {
  f.check(sig);
  Coproduct cop = coproduct(f.source, f.target);
  if (!t.valid() || t.context() != cop.context)
    throw DomainError("subst: term lives over \"" + (t.valid() ? t.context().str() : "") +
                      "\", expected the coproduct \"" + cop.context.str() + "\"");
  Assignment copair;
  copair.source = cop.context;
  copair.target = f.target;
  copair.map = f.map;
  for (std::size_t j = 0; j < f.target.size(); ++j) copair.map.push_back(var(f.target, j));
  return bind_rec(sig, copair, t);
}

// ---------------------------------------------------------------------------
// Law suites

namespace {

using sampling::Inhabitation;
using sampling::TermPool;

using BindFn = std::function<Term(const Signature&, const Assignment&, const Term&)>;

BindFn bind_or_default(const SubstHooks& hooks) {
  if (hooks.bind) return hooks.bind;
  return [](const Signature& sig, const Assignment& f, const Term& t) { return bind(sig, f, t); };
}

struct LawRun {
  std::string law;
  std::uint64_t checked = 0;
  nlohmann::json counterexample;
  bool failed = false;

  explicit LawRun(std::string name) : law(std::move(name)) {}

  void fail(nlohmann::json j) {
    if (!failed) {
      failed = true;
      counterexample = std::move(j);
    }
  }
  Verdict verdict() const {
    return failed ? Verdict::fail(law, checked, counterexample) : Verdict::pass(law, checked);
  }
};

nlohmann::json case_json(std::size_t index, std::uint64_t seed) {
  return {{"case", index}, {"seed", seed}};
}

nlohmann::json merged(nlohmann::json a, const nlohmann::json& b) {
  a.update(b);
  return a;
}

// Smallest term at (ctx, s) of height <= h in enumeration order, without
// materializing the enumeration.
std::optional<Term> minimal_term(const Signature& sig, const Context& ctx, const Sort& s,
                                 std::size_t h) {
  if (h == 0) return std::nullopt;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (ctx[i] == s) return var(ctx, i);
  for (const OpDecl& op : sig.ops()) {
    if (op.result != s) continue;
    if (!op.args.empty() && h < 2) continue;
    std::vector<Term> args;
    bool all = true;
    for (const Argument& a : op.args) {
      auto sub = minimal_term(sig, option_list(sig, ctx, a.binders), a.sort, h - 1);
      if (!sub) {
        all = false;
        break;
      }
      args.push_back(std::move(*sub));
    }
    if (all) return mk_op(sig, ctx, op.name, std::move(args));
  }
  return std::nullopt;
}

// H's action on a family morphism, at one layer.
OpLayer layer_map(const Signature& sig, const OpLayer& layer, const Renaming& rho) {
  const OpDecl& op = *sig.find_op(layer.op);
  OpLayer out;
  out.op = layer.op;
  out.base = rho.target;
  out.args.reserve(layer.args.size());
  for (std::size_t j = 0; j < layer.args.size(); ++j)
    out.args.push_back(rename(layer.args[j], rho.under_binders(op.args[j].binders)));
  return out;
}

Renaming point_renaming(const Signature& sig, const PointedEndo& z, const Context& ctx) {
  Renaming r;
  r.source = ctx;
  r.target = z.apply(sig, ctx);
  r.map.resize(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) r.map[i] = z.point_var(sig, ctx, i);
  return r;
}

nlohmann::json layer_json(const OpLayer& layer) {
  nlohmann::json args = nlohmann::json::array();
  for (const Term& a : layer.args) args.push_back(a.str());
  return {{"op", layer.op}, {"base", layer.base.str()}, {"args", args}};
}

// A sampled layer of the signature functor over `base`, argument heights
// <= h; nullopt when no op is realizable there.
std::optional<OpLayer> sample_layer(Rng& rng, const Signature& sig, Inhabitation& inhab,
                                    const Context& base, std::size_t h) {
  std::vector<std::size_t> feasible;
  for (std::size_t oi = 0; oi < sig.ops().size(); ++oi) {
    const OpDecl& op = sig.ops()[oi];
    bool ok = true;
    for (const Argument& a : op.args)
      if (!inhab.at(option_list(sig, base, a.binders), a.sort, h)) {
        ok = false;
        break;
      }
    if (ok) feasible.push_back(oi);
  }
  if (feasible.empty()) return std::nullopt;
  const OpDecl& op = sig.ops()[feasible[rng.pick(feasible.size())]];
  OpLayer layer;
  layer.op = op.name;
  layer.base = base;
  for (const Argument& a : op.args) {
    auto t = sampling::sample_term(rng, sig, inhab, option_list(sig, base, a.binders), a.sort, h);
    if (!t) return std::nullopt;
    layer.args.push_back(std::move(*t));
  }
  return layer;
}

// First op realizable over `base` with minimal arguments, preferring ops
// that actually bind variables so the strength has work to do; deterministic.
std::optional<OpLayer> minimal_layer(const Signature& sig, const Context& base, std::size_t h) {
  auto build = [&](const OpDecl& op) -> std::optional<OpLayer> {
    OpLayer layer;
    layer.op = op.name;
    layer.base = base;
    for (const Argument& a : op.args) {
      auto t = minimal_term(sig, option_list(sig, base, a.binders), a.sort, h);
      if (!t) return std::nullopt;
      layer.args.push_back(std::move(*t));
    }
    return layer;
  };
  for (const OpDecl& op : sig.ops()) {
    bool binds = std::any_of(op.args.begin(), op.args.end(),
                             [](const Argument& a) { return !a.binders.empty(); });
    if (!binds) continue;
    if (auto layer = build(op)) return layer;
  }
  for (const OpDecl& op : sig.ops())
    if (auto layer = build(op)) return layer;
  return std::nullopt;
}

}  // namespace

std::vector<Verdict> check_monad_laws(const Signature& sig, const CheckConfig& cfg_in,
                                      const SubstHooks& hooks) {
  CheckConfig cfg = cfg_in;
  cfg.max_height = std::max<std::size_t>(cfg.max_height, 2);
  BindFn do_bind = bind_or_default(hooks);
  DistFn do_dist = dist_or_default(hooks);
  TermPool pool(sig, cfg.image_height);
  Inhabitation inhab(sig);

  LawRun right_unit("monad/right-unit");
  LawRun left_unit("monad/left-unit");
  LawRun assoc("monad/assoc");
  LawRun triangle("monad/join-triangle");
  LawRun rectangle("monad/join-rectangle");
  LawRun bracket_tri("monad/bracket-triangle");
  LawRun bracket_rect("monad/bracket-rectangle");
  LawRun bracket_join("monad/bracket-join-agreement");

  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    try {
      Context y = sampling::sample_context(rng, sig, cfg.max_context);
      Context w = sampling::sample_assignable_context(rng, sig, pool, y, cfg.max_context);
      Context x = sampling::sample_assignable_context(rng, sig, pool, w, cfg.max_context);
      Assignment f = sampling::sample_assignment(rng, pool, w, y);
      Assignment g = sampling::sample_assignment(rng, pool, x, w);

      std::vector<Sort> inhabited;
      for (const Sort& s : sig.sorts())
        if (inhab.at(x, s, cfg.max_height)) inhabited.push_back(s);
      std::optional<Term> subject;
      if (!inhabited.empty())
        subject = sampling::sample_term(rng, sig, inhab, x, inhabited[rng.pick(inhabited.size())],
                                        cfg.max_height);

      if (subject) {
        const Term& t = *subject;
        // bind eta = id
        ++right_unit.checked;
        if (do_bind(sig, Assignment::unit(x), t) != t)
          right_unit.fail(merged(case_json(i, seed), nlohmann::json{{"term", t.str()}}));

        // bind f (eta i) = f(i)
        if (!x.empty()) {
          ++left_unit.checked;
          std::size_t ix = rng.pick(x.size());
          if (do_bind(sig, g, var(x, ix)) != g.map[ix])
            left_unit.fail(merged(case_json(i, seed), nlohmann::json{{"index", ix}}));
        }

        // bind f . bind g = bind (bind f . g)
        ++assoc.checked;
        Term lhs = do_bind(sig, f, do_bind(sig, g, t));
        Assignment fg;
        fg.source = x;
        fg.target = y;
        for (const Term& img : g.map) fg.map.push_back(do_bind(sig, f, img));
        Term rhs = do_bind(sig, fg, t);
        if (lhs != rhs)
          assoc.fail(merged(case_json(i, seed), nlohmann::json{{"term", t.str()},
                                                         {"lhs", lhs.str()},
                                                         {"rhs", rhs.str()}}));

        // join (eta_T t) = t: the outer term is one variable standing for t.
        ++triangle.checked;
        Context delta{{t.sort()}};
        Assignment u;
        u.source = delta;
        u.target = x;
        u.map = {t};
        if (do_bind(sig, u, var(delta, 0)) != t)
          triangle.fail(merged(case_json(i, seed), nlohmann::json{{"term", t.str()}}));
      }

      // join . tau T = tau . H join . theta_T on a sampled layer over a
      // monad window (Fig. 1 rectangle).
      {
        std::vector<Sort> window;
        for (const Sort& s : sig.sorts())
          if (pool.inhabited(y, s)) window.push_back(s);
        std::vector<Sort> ws;
        for (std::size_t k = rng.pick(3); k > 0 && !window.empty(); --k)
          ws.push_back(window[rng.pick(window.size())]);
        PointedEndo z = PointedEndo::monad(ws);
        Context deltac = z.apply(sig, y);
        Assignment u;
        u.source = deltac;
        u.target = y;
        for (std::size_t v = 0; v < y.size(); ++v) u.map.push_back(var(y, v));
        for (const Sort& s : ws) {
          const auto& candidates = pool.pool(y, s);
          u.map.push_back(candidates[rng.pick(candidates.size())]);
        }
        auto layer = sample_layer(rng, sig, inhab, deltac, cfg.max_height - 1);
        if (layer) {
          ++rectangle.checked;
          const OpDecl& op = *sig.find_op(layer->op);
          Term lhs = do_bind(sig, u, mk_op(sig, deltac, layer->op, layer->args));
          std::vector<Term> joined;
          for (std::size_t j = 0; j < layer->args.size(); ++j) {
            Renaming r = do_dist(sig, op.args[j].binders, z, y);
            Assignment ext = extend_pointed(sig, z, op.args[j].binders, u);
            joined.push_back(do_bind(sig, ext, rename(layer->args[j], r)));
          }
          Term rhs = mk_op(sig, y, layer->op, std::move(joined));
          if (lhs != rhs)
            rectangle.fail(merged(case_json(i, seed), nlohmann::json{{"layer", layer_json(*layer)},
                                                               {"lhs", lhs.str()},
                                                               {"rhs", rhs.str()}}));
        }

        // Fig. 3 for the bracket at this (Z, u), plus agreement with join.
        auto t_over = sample_layer(rng, sig, inhab, deltac, cfg.max_height - 1);
        for (std::size_t v = 0; v < deltac.size(); ++v) {
          ++bracket_tri.checked;
          if (bracket(sig, z, u, var(deltac, v)) != u.map[v]) {
            bracket_tri.fail(merged(case_json(i, seed), nlohmann::json{{"variable", v}}));
            break;
          }
        }
        if (t_over) {
          Term whole = mk_op(sig, deltac, t_over->op, t_over->args);
          ++bracket_rect.checked;
          const OpDecl& op = *sig.find_op(t_over->op);
          Term lhs = bracket(sig, z, u, whole);
          std::vector<Term> rec;
          for (std::size_t j = 0; j < t_over->args.size(); ++j) {
            Renaming r = dist_option_list(sig, op.args[j].binders, z, y);
            Assignment ext = extend_pointed(sig, z, op.args[j].binders, u);
            rec.push_back(bracket(sig, z, ext, rename(t_over->args[j], r)));
          }
          Term rhs = mk_op(sig, y, t_over->op, std::move(rec));
          if (lhs != rhs)
            bracket_rect.fail(merged(case_json(i, seed), nlohmann::json{{"layer", layer_json(*t_over)}}));

          ++bracket_join.checked;
          Term via_join = do_bind(sig, u, whole);
          if (lhs != via_join)
            bracket_join.fail(merged(case_json(i, seed),
                                     nlohmann::json{{"layer", layer_json(*t_over)},
                                                    {"bracket", lhs.str()},
                                                    {"join", via_join.str()}}));
        }
      }
    } catch (const std::exception& e) {
      nlohmann::json j = merged(case_json(i, seed), nlohmann::json{{"exception", e.what()}});
      right_unit.fail(j);
      assoc.fail(j);
      rectangle.fail(std::move(j));
    }
  }

  return {right_unit.verdict(), left_unit.verdict(),   assoc.verdict(),
          triangle.verdict(),   rectangle.verdict(),   bracket_tri.verdict(),
          bracket_rect.verdict(), bracket_join.verdict()};
}

std::vector<Verdict> check_dist_laws(const Signature& sig, const CheckConfig& cfg,
                                     const SubstHooks& hooks) {
  DistFn do_dist = dist_or_default(hooks);
  LawRun identity_law("distlaw/identity");
  LawRun composite_law("distlaw/composite");
  LawRun block_law("distlaw/block-composition");
  LawRun point_nat("distlaw/point-naturality");

  std::vector<PointedEndo> gens = sampling::pointed_endo_generators(sig);

  // Deterministic contexts: empty, one sort, two sorts.
  std::vector<Context> contexts{Context{}};
  if (!sig.sorts().empty()) {
    contexts.push_back(Context{{sig.sorts().front()}});
    contexts.push_back(Context{{sig.sorts().back(), sig.sorts().front()}});
  }
  std::vector<std::vector<Sort>> blocks{{}};
  if (!sig.sorts().empty()) {
    blocks.push_back({sig.sorts().front()});
    blocks.push_back({sig.sorts().back(), sig.sorts().front()});
  }

  for (const Context& ctx : contexts)
    for (const auto& block : blocks) {
      ++identity_law.checked;
      Renaming d = do_dist(sig, block, PointedEndo::identity(), ctx);
      if (d != Renaming::identity(option_list(sig, ctx, block)))
        identity_law.fail({{"context", ctx.str()}, {"block", Context{block}.str()}});
    }

  // delta at a composite equals the two-step composite, for every generator
  // pair (the acceptance sweep) at deterministic contexts and blocks.
  for (const PointedEndo& zp : gens)
    for (const PointedEndo& z : gens)
      for (const Context& ctx : contexts)
        for (const auto& block : blocks) {
          ++composite_law.checked;
          PointedEndo comp = PointedEndo::composite(zp, z);
          Renaming lhs = do_dist(sig, block, comp, ctx);
          Renaming step1 = do_dist(sig, block, zp, z.apply(sig, ctx));
          Renaming step2 = zp.map(sig, do_dist(sig, block, z, ctx));
          Renaming rhs = step1.then(step2);
          if (lhs != rhs) {
            composite_law.fail({{"outer", zp.str()},
                                {"inner", z.str()},
                                {"context", ctx.str()},
                                {"block", Context{block}.str()}});
            goto composite_done;
          }
        }
composite_done:

  // The block law is the composite of the per-sort laws.
  for (const PointedEndo& z : gens)
    for (const Context& ctx : contexts)
      for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        ++block_law.checked;
        std::span<const Sort> head(block.data(), 1);
        std::span<const Sort> tail(block.data() + 1, block.size() - 1);
        Renaming inner = do_dist(sig, tail, z, ctx).under_binders(head);
        Renaming outer = do_dist(sig, head, z, option_list(sig, ctx, tail));
        Renaming rhs = inner.then(outer);
        Renaming lhs = do_dist(sig, block, z, ctx);
        if (lhs != rhs) {
          block_law.fail({{"z", z.str()}, {"context", ctx.str()}, {"block", Context{block}.str()}});
          break;
        }
      }

  // Naturality of the point over sampled sort-preserving renamings.
  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < std::min<std::size_t>(cfg.samples, 200); ++i) {
    Context src = sampling::sample_context(rng, sig, cfg.max_context);
    Context tgt = sampling::sample_context(rng, sig, cfg.max_context);
    Renaming rho;
    rho.source = src;
    rho.target = tgt;
    bool total = true;
    for (const Sort& s : src.entries) {
      std::vector<std::size_t> slots;
      for (std::size_t p = 0; p < tgt.size(); ++p)
        if (tgt[p] == s) slots.push_back(p);
      if (slots.empty()) {
        total = false;
        break;
      }
      rho.map.push_back(slots[rng.pick(slots.size())]);
    }
    if (!total) continue;
    const PointedEndo& z = gens[rng.pick(gens.size())];
    Renaming zr = z.map(sig, rho);
    for (std::size_t v = 0; v < src.size(); ++v) {
      ++point_nat.checked;
      if (zr(z.point_var(sig, src, v)) != z.point_var(sig, tgt, rho(v))) {
        point_nat.fail({{"z", z.str()},
                        {"source", src.str()},
                        {"target", tgt.str()},
                        {"variable", v}});
        break;
      }
    }
  }

  return {identity_law.verdict(), composite_law.verdict(), block_law.verdict(),
          point_nat.verdict()};
}

std::vector<Verdict> check_strength_laws(const Signature& sig, const CheckConfig& cfg,
                                         const SubstHooks& hooks) {
  DistFn do_dist = dist_or_default(hooks);
  Inhabitation inhab(sig);

  LawRun identity_law("strength/identity");
  LawRun composite_law("strength/composite");
  LawRun nat_context("strength/naturality-context");
  LawRun nat_pointed("strength/naturality-pointed");

  auto theta_with = [&](const OpLayer& layer, const PointedEndo& z, const PointedEndo& under,
                        const Context& gamma) {
    return theta_impl(sig, layer, z, under, gamma, do_dist);
  };

  // theta at the identity is the identity, on deterministic minimal layers.
  {
    Context gamma{};
    auto layer = minimal_layer(sig, gamma, 3);
    if (layer) {
      ++identity_law.checked;
      OpLayer out = theta_with(*layer, PointedEndo::identity(), PointedEndo::identity(), gamma);
      if (out != *layer) identity_law.fail({{"layer", layer_json(*layer)}});
    }
  }

  // Exhaustive sweep: the composite law for every generator pair, one
  // deterministic layer each.
  std::vector<PointedEndo> gens = sampling::pointed_endo_generators(sig);
  Context gamma0 = sig.sorts().empty() ? Context{} : Context{{sig.sorts().front()}};
  for (const PointedEndo& zp : gens) {
    for (const PointedEndo& z : gens) {
      PointedEndo comp = PointedEndo::composite(zp, z);
      Context base = comp.apply(sig, gamma0);
      auto layer = minimal_layer(sig, base, 3);
      if (!layer) continue;
      ++composite_law.checked;
      OpLayer lhs = theta_with(*layer, comp, PointedEndo::identity(), gamma0);
      OpLayer mid = theta_with(*layer, zp, PointedEndo::identity(), z.apply(sig, gamma0));
      OpLayer rhs = theta_with(mid, z, zp, gamma0);
      if (lhs != rhs) {
        composite_law.fail({{"outer", zp.str()},
                            {"inner", z.str()},
                            {"layer", layer_json(*layer)}});
        break;
      }
    }
    if (composite_law.failed) break;
  }

  // Random cases: composites of sampled depth plus both naturality squares.
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    try {
      Context gamma = sampling::sample_context(rng, sig, 2);
      PointedEndo z = sampling::sample_pointed_endo(rng, sig, 2);
      PointedEndo zp = sampling::sample_pointed_endo(rng, sig, 2);
      PointedEndo comp = PointedEndo::composite(zp, z);
      auto layer = sample_layer(rng, sig, inhab, comp.apply(sig, gamma), cfg.max_height - 1);
      if (layer) {
        ++composite_law.checked;
        OpLayer lhs = theta_with(*layer, comp, PointedEndo::identity(), gamma);
        OpLayer mid = theta_with(*layer, zp, PointedEndo::identity(), z.apply(sig, gamma));
        OpLayer rhs = theta_with(mid, z, zp, gamma);
        if (lhs != rhs)
          composite_law.fail(merged(case_json(i, seed), nlohmann::json{{"outer", zp.str()},
                                                                 {"inner", z.str()},
                                                                 {"layer", layer_json(*layer)}}));
      }

      // Naturality in the family argument along a sampled weakening.
      if (!sig.sorts().empty()) {
        const Sort& fresh = sig.sorts()[rng.pick(sig.sorts().size())];
        const Sort block[1] = {fresh};
        Renaming rho = Renaming::weakening(gamma, block);
        auto layer2 = sample_layer(rng, sig, inhab, z.apply(sig, gamma), cfg.max_height - 1);
        if (layer2) {
          ++nat_context.checked;
          OpLayer lhs = theta_with(layer_map(sig, *layer2, z.map(sig, rho)), z, PointedEndo::identity(),
                                   rho.target);
          OpLayer theta_first = theta_with(*layer2, z, PointedEndo::identity(), gamma);
          const OpDecl& op = *sig.find_op(layer2->op);
          OpLayer rhs;
          rhs.op = theta_first.op;
          rhs.base = rho.target;
          for (std::size_t j = 0; j < theta_first.args.size(); ++j)
            rhs.args.push_back(rename(theta_first.args[j],
                                      z.map(sig, rho.under_binders(op.args[j].binders))));
          if (lhs != rhs)
            nat_context.fail(merged(case_json(i, seed), nlohmann::json{{"z", z.str()},
                                                                 {"layer", layer_json(*layer2)}}));
        }
      }

      // Naturality in the pointed argument along the point Id -> (Z, e).
      {
        auto layer3 = sample_layer(rng, sig, inhab, gamma, cfg.max_height - 1);
        if (layer3) {
          ++nat_pointed.checked;
          OpLayer lhs = theta_with(layer_map(sig, *layer3, point_renaming(sig, z, gamma)), z,
                                   PointedEndo::identity(), gamma);
          const OpDecl& op = *sig.find_op(layer3->op);
          OpLayer rhs;
          rhs.op = layer3->op;
          rhs.base = gamma;
          for (std::size_t j = 0; j < layer3->args.size(); ++j)
            rhs.args.push_back(rename(layer3->args[j],
                                      point_renaming(sig, z, option_list(sig, gamma,
                                                                         op.args[j].binders))));
          if (lhs != rhs)
            nat_pointed.fail(merged(case_json(i, seed), nlohmann::json{{"z", z.str()},
                                                                 {"layer", layer_json(*layer3)}}));
        }
      }
    } catch (const std::exception& e) {
      nlohmann::json j = merged(case_json(i, seed), nlohmann::json{{"exception", e.what()}});
      composite_law.fail(j);
      nat_context.fail(j);
      nat_pointed.fail(std::move(j));
    }
  }

  return {identity_law.verdict(), composite_law.verdict(), nat_context.verdict(),
          nat_pointed.verdict()};
}

std::vector<Verdict> check_interchange(const Signature& sig, const CheckConfig& cfg,
                                       const SubstHooks& hooks) {
  BindFn do_bind = bind_or_default(hooks);
  TermPool pool(sig, cfg.image_height);
  Inhabitation inhab(sig);
  LawRun law("interchange/disjoint-blocks");

  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    try {
      Context r = sampling::sample_context(rng, sig, cfg.max_context);
      Context x = sampling::sample_assignable_context(rng, sig, pool, r, 2);
      Context y = sampling::sample_assignable_context(rng, sig, pool, r, 2);
      Assignment f = sampling::sample_assignment(rng, pool, x, r);
      Assignment g = sampling::sample_assignment(rng, pool, y, r);

      Context xyr = coproduct(x, coproduct(y, r).context).context;
      std::vector<Sort> inhabited;
      for (const Sort& s : sig.sorts())
        if (inhab.at(xyr, s, cfg.max_height)) inhabited.push_back(s);
      if (inhabited.empty()) continue;
      auto subject = sampling::sample_term(rng, sig, inhab, xyr,
                                           inhabited[rng.pick(inhabited.size())], cfg.max_height);
      if (!subject) continue;
      ++law.checked;

      Context yr = coproduct(y, r).context;
      Context xr = coproduct(x, r).context;

      // substitute the X block first ...
      Assignment a1;
      a1.source = xyr;
      a1.target = yr;
      for (const Term& img : f.map)
        a1.map.push_back(rename(img, Renaming::weakening(r, y.entries)));
      for (std::size_t j = 0; j < yr.size(); ++j) a1.map.push_back(var(yr, j));
      Assignment a2;
      a2.source = yr;
      a2.target = r;
      a2.map = g.map;
      for (std::size_t k = 0; k < r.size(); ++k) a2.map.push_back(var(r, k));
      Term via_x = do_bind(sig, a2, do_bind(sig, a1, *subject));

      // ... or the Y block first.
      Assignment b1;
      b1.source = xyr;
      b1.target = xr;
      for (std::size_t j = 0; j < x.size(); ++j) b1.map.push_back(var(xr, j));
      for (const Term& img : g.map)
        b1.map.push_back(rename(img, Renaming::weakening(r, x.entries)));
      for (std::size_t k = 0; k < r.size(); ++k) b1.map.push_back(var(xr, x.size() + k));
      Assignment b2;
      b2.source = xr;
      b2.target = r;
      b2.map = f.map;
      for (std::size_t k = 0; k < r.size(); ++k) b2.map.push_back(var(r, k));
      Term via_y = do_bind(sig, b2, do_bind(sig, b1, *subject));

      if (via_x != via_y)
        law.fail(merged(case_json(i, seed), nlohmann::json{{"term", subject->str()},
                                                     {"x", x.str()},
                                                     {"y", y.str()},
                                                     {"r", r.str()},
                                                     {"via_x", via_x.str()},
                                                     {"via_y", via_y.str()}}));
    } catch (const std::exception& e) {
      law.fail(merged(case_json(i, seed), nlohmann::json{{"exception", e.what()}}));
    }
  }

  return {law.verdict()};
}

}  // namespace sortal
