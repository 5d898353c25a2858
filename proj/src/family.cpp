#include "sortal/family.hpp"

#include <algorithm>
#include <sstream>

#include "sortal/rng.hpp"

namespace sortal {

std::string Context::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += entries[i].name;
  }
  return out;
}

Context Context::parse(std::string_view text) {
  Context ctx;
  if (text.empty()) return ctx;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    if (piece.empty()) throw ParseError("empty sort name in context \"" + std::string(text) + "\"");
    ctx.entries.push_back(Sort{std::string(piece)});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ctx;
}

void check_context(const Signature& sig, const Context& ctx) {
  for (const Sort& s : ctx.entries)
    if (!sig.has_sort(s)) throw DomainError("unknown sort \"" + s.name + "\" in context");
}

Renaming Renaming::identity(Context ctx) {
  Renaming r;
  r.map.resize(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) r.map[i] = i;
  r.source = ctx;
  r.target = std::move(ctx);
  return r;
}

Renaming Renaming::weakening(const Context& ctx, std::span<const Sort> block) {
  Renaming r;
  r.source = ctx;
  r.target.entries.assign(block.begin(), block.end());
  r.target.entries.insert(r.target.entries.end(), ctx.entries.begin(), ctx.entries.end());
  r.map.resize(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) r.map[i] = i + block.size();
  return r;
}

std::size_t Renaming::operator()(std::size_t i) const {
  if (i >= map.size()) throw DomainError("renaming applied to out-of-range index");
  return map[i];
}

Renaming Renaming::then(const Renaming& next) const {
  if (target != next.source) throw DomainError("renaming composition: context mismatch");
  Renaming r;
  r.source = source;
  r.target = next.target;
  r.map.resize(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) r.map[i] = next.map[map[i]];
  return r;
}

Renaming Renaming::under_binders(std::span<const Sort> block) const {
  Renaming r;
  r.source.entries.assign(block.begin(), block.end());
  r.source.entries.insert(r.source.entries.end(), source.entries.begin(), source.entries.end());
  r.target.entries.assign(block.begin(), block.end());
  r.target.entries.insert(r.target.entries.end(), target.entries.begin(), target.entries.end());
  r.map.resize(block.size() + map.size());
  for (std::size_t i = 0; i < block.size(); ++i) r.map[i] = i;
  for (std::size_t i = 0; i < map.size(); ++i) r.map[block.size() + i] = map[i] + block.size();
  return r;
}

bool Renaming::sort_preserving() const {
  if (map.size() != source.size()) return false;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= target.size()) return false;
    if (target[map[i]] != source[i]) return false;
  }
  return true;
}

Context option_sort(const Signature& sig, const Context& ctx, const Sort& s) {
  if (!sig.has_sort(s)) throw DomainError("option_sort: unknown sort \"" + s.name + "\"");
  Context out;
  out.entries.reserve(ctx.size() + 1);
  out.entries.push_back(s);
  out.entries.insert(out.entries.end(), ctx.entries.begin(), ctx.entries.end());
  return out;
}

Context option_list(const Signature& sig, const Context& ctx, std::span<const Sort> sorts) {
  for (const Sort& s : sorts)
    if (!sig.has_sort(s)) throw DomainError("option_list: unknown sort \"" + s.name + "\"");
  Context out;
  out.entries.reserve(ctx.size() + sorts.size());
  out.entries.assign(sorts.begin(), sorts.end());
  out.entries.insert(out.entries.end(), ctx.entries.begin(), ctx.entries.end());
  return out;
}

FinSet FinFamily::at(const Sort& s) const {
  auto it = carrier.find(s);
  return it == carrier.end() ? FinSet{} : it->second;
}

FinSet proj(const Signature& sig, const FinFamily& fam, const Sort& s) {
  if (!sig.has_sort(s)) throw DomainError("proj: unknown sort \"" + s.name + "\"");
  return fam.at(s);
}

FinFamily hat(const Signature& sig, const FinSet& a, const Sort& t) {
  if (!sig.has_sort(t)) throw DomainError("hat: unknown sort \"" + t.name + "\"");
  FinFamily fam;
  if (!a.empty()) fam.carrier[t] = a;
  return fam;
}

FinFamily underline(const Signature& sig, const FinSet& a, const Sort& t) {
  if (!sig.has_sort(t)) throw DomainError("underline: unknown sort \"" + t.name + "\"");
  FinFamily fam;
  for (const Sort& s : sig.sorts()) fam.carrier[s] = (s == t) ? a : FinSet{"()"};
  return fam;
}

FinFamily context_to_family(const Context& ctx) {
  FinFamily fam;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    fam.carrier[ctx[i]].push_back(std::to_string(i));
  return fam;
}

Coproduct coproduct(const Context& a, const Context& b) {
  Coproduct c;
  c.context.entries = a.entries;
  c.context.entries.insert(c.context.entries.end(), b.entries.begin(), b.entries.end());
  c.left.source = a;
  c.left.target = c.context;
  c.left.map.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c.left.map[i] = i;
  c.right.source = b;
  c.right.target = c.context;
  c.right.map.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c.right.map[i] = i + a.size();
  return c;
}

// ---------------------------------------------------------------------------
// Adjunction checks. Morphisms of finite families are index maps per sort;
// a component is present exactly when the source carrier is nonempty.

namespace {

using SetMap = std::vector<std::size_t>;
using FamilyMor = std::map<Sort, SetMap>;

// All functions from an n-element set to an m-element set, odometer order.
std::vector<SetMap> all_set_maps(std::size_t n, std::size_t m) {
  std::vector<SetMap> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  if (m == 0) return out;
  SetMap cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] == m) cur[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t hom_count(const FinFamily& f, const FinFamily& g, const Signature& sig) {
  std::uint64_t total = 1;
  for (const Sort& s : sig.sorts()) {
    std::size_t n = f.at(s).size(), m = g.at(s).size();
    if (n == 0) continue;
    if (m == 0) return 0;
    std::uint64_t pw = 1;
    for (std::size_t i = 0; i < n; ++i) pw = sat_mul(pw, m);
    total = sat_mul(total, pw);
  }
  return total;
}

std::vector<FamilyMor> enumerate_family_homs(const FinFamily& f, const FinFamily& g,
                                             const Signature& sig) {
  std::vector<FamilyMor> out{FamilyMor{}};
  for (const Sort& s : sig.sorts()) {
    std::size_t n = f.at(s).size(), m = g.at(s).size();
    if (n == 0) continue;
    std::vector<SetMap> comps = all_set_maps(n, m);
    if (comps.empty()) return {};
    std::vector<FamilyMor> next;
    next.reserve(out.size() * comps.size());
    for (const FamilyMor& partial : out)
      for (const SetMap& c : comps) {
        FamilyMor mor = partial;
        mor[s] = c;
        next.push_back(std::move(mor));
      }
    out = std::move(next);
  }
  return out;
}

FamilyMor sample_family_endo(Rng& rng, const FinFamily& f) {
  FamilyMor mor;
  for (const auto& [s, elems] : f.carrier) {
    if (elems.empty()) continue;
    SetMap comp(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) comp[i] = rng.pick(elems.size());
    mor[s] = comp;
  }
  return mor;
}

SetMap sample_set_endo(Rng& rng, std::size_t n) {
  SetMap out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rng.pick(n);
  return out;
}

FamilyMor compose(const FamilyMor& first, const FamilyMor& second) {
  FamilyMor out;
  for (const auto& [s, comp] : first) {
    auto it = second.find(s);
    SetMap res(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (it == second.end() || comp[i] >= it->second.size())
        throw DomainError("family morphism composition out of range");
      res[i] = it->second[comp[i]];
    }
    out[s] = res;
  }
  return out;
}

SetMap compose_set(const SetMap& first, const SetMap& second) {
  SetMap out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second.at(first[i]);
  return out;
}

nlohmann::json mor_json(const FamilyMor& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [s, comp] : m) j[s.name] = comp;
  return j;
}

void check_sizes(const FinSet& a, const FinFamily& b, const AdjunctionOptions& opts) {
  if (a.size() > opts.size_bound) throw DomainError("adjunction check: size bound exceeded");
  for (const auto& [s, elems] : b.carrier)
    if (elems.size() > opts.size_bound) throw DomainError("adjunction check: size bound exceeded");
}

}  // namespace

std::uint64_t hom_size(const Signature& sig, const FinFamily& f, const FinFamily& g) {
  return hom_count(f, g, sig);
}

std::vector<Verdict> adjunction_suite(const Signature& sig, const AdjunctionOptions& opts) {
  Verdict hat_v = Verdict::pass("adjunction/hat-proj", 0);
  Verdict under_v = Verdict::pass("adjunction/proj-underline", 0);
  auto fold = [](Verdict& acc, Verdict v) {
    acc.samples += v.samples;
    if (acc.ok && !v.ok) {
      acc.ok = false;
      acc.counterexample = std::move(v.counterexample);
    }
  };
  for (const Sort& t : sig.sorts()) {
    const Sort* other = nullptr;
    for (const Sort& u : sig.sorts())
      if (!(u == t)) {
        other = &u;
        break;
      }
    for (std::size_t na = 0; na <= opts.size_bound; ++na) {
      FinSet a;
      for (std::size_t i = 0; i < na; ++i) a.push_back("a" + std::to_string(i));
      for (std::size_t nb = 0; nb <= opts.size_bound; ++nb) {
        for (std::size_t nu : {std::size_t{0}, std::size_t{2}}) {
          if (!other && nu > 0) continue;
          FinFamily fam;
          for (std::size_t i = 0; i < nb; ++i) fam.carrier[t].push_back("b" + std::to_string(i));
          if (other)
            for (std::size_t i = 0; i < nu; ++i)
              fam.carrier[*other].push_back("u" + std::to_string(i));
          fold(hat_v, check_adjunction_hat_proj(sig, a, fam, t, opts));
          fold(under_v, check_adjunction_proj_underline(sig, a, fam, t, opts));
        }
      }
    }
  }
  return {hat_v, under_v};
}

Verdict check_adjunction_hat_proj(const Signature& sig, const FinSet& a, const FinFamily& b,
                                  const Sort& t, const AdjunctionOptions& opts) {
  check_sizes(a, b, opts);
  if (!sig.has_sort(t)) throw DomainError("adjunction check: unknown sort \"" + t.name + "\"");
  const FinFamily hat_a = hat(sig, a, t);
  const FinSet bt = b.at(t);
  const std::string law = "adjunction/hat-proj";

  // Transposes. hat(A,t)(t) carries the same labels as A, so the component
  // at t is directly a map A -> B t.
  auto transpose = [&](const FamilyMor& g) -> SetMap {
    auto it = g.find(t);
    return it == g.end() ? SetMap{} : it->second;
  };
  auto untranspose = [&](const SetMap& f) -> FamilyMor {
    FamilyMor g;
    if (!a.empty()) g[t] = f;
    return g;
  };

  std::vector<FamilyMor> hom_left = enumerate_family_homs(hat_a, b, sig);
  std::vector<SetMap> hom_right = all_set_maps(a.size(), bt.size());
  std::uint64_t checked = 0;

  if (hom_left.size() != hom_right.size())
    return Verdict::fail(law, checked,
                         {{"reason", "hom-set sizes differ"},
                          {"left", hom_left.size()},
                          {"right", hom_right.size()}});

  for (const FamilyMor& g : hom_left) {
    ++checked;
    if (untranspose(transpose(g)) != g)
      return Verdict::fail(law, checked, {{"reason", "transpose not inverse"}, {"g", mor_json(g)}});
  }
  for (const SetMap& f : hom_right) {
    ++checked;
    if (transpose(untranspose(f)) != f)
      return Verdict::fail(law, checked, {{"reason", "transpose not inverse"}, {"f", f}});
  }

  // Naturality: transpose(hat(alpha); g; beta) == alpha; transpose(g); beta_t
  // on sampled (alpha, beta, g) triples.
  if (!hom_left.empty()) {
    Rng rng(opts.seed);
    for (std::size_t k = 0; k < opts.naturality_samples; ++k) {
      ++checked;
      SetMap alpha = sample_set_endo(rng, a.size());
      FamilyMor beta = sample_family_endo(rng, b);
      const FamilyMor& g = hom_left[rng.pick(hom_left.size())];
      // hat(alpha) is alpha placed at sort t.
      FamilyMor hat_alpha;
      if (!a.empty()) hat_alpha[t] = alpha;
      SetMap lhs = transpose(compose(compose(hat_alpha, g), beta));
      SetMap rhs = compose_set(compose_set(alpha, transpose(g)),
                               beta.count(t) ? beta.at(t) : SetMap{});
      if (lhs != rhs)
        return Verdict::fail(law, checked,
                             {{"reason", "naturality square broken"},
                              {"alpha", alpha},
                              {"beta", mor_json(beta)},
                              {"g", mor_json(g)}});
    }
  }
  return Verdict::pass(law, checked);
}

Verdict check_adjunction_proj_underline(const Signature& sig, const FinSet& a, const FinFamily& b,
                                        const Sort& t, const AdjunctionOptions& opts) {
  check_sizes(a, b, opts);
  if (!sig.has_sort(t)) throw DomainError("adjunction check: unknown sort \"" + t.name + "\"");
  const FinFamily under_a = underline(sig, a, t);
  const FinSet bt = b.at(t);
  const std::string law = "adjunction/proj-underline";

  // hom(B t, A) ~ hom(B, underline(A,t)): components away from t are forced
  // (the target carrier is the canonical singleton).
  auto untranspose = [&](const SetMap& f) -> FamilyMor {
    FamilyMor h;
    for (const auto& [s, elems] : b.carrier) {
      if (elems.empty()) continue;
      if (s == t)
        h[s] = f;
      else
        h[s] = SetMap(elems.size(), 0);
    }
    return h;
  };
  auto transpose = [&](const FamilyMor& h) -> SetMap {
    auto it = h.find(t);
    return it == h.end() ? SetMap{} : it->second;
  };

  std::vector<SetMap> hom_left = all_set_maps(bt.size(), a.size());
  std::vector<FamilyMor> hom_right = enumerate_family_homs(b, under_a, sig);
  std::uint64_t checked = 0;

  if (hom_left.size() != hom_right.size())
    return Verdict::fail(law, checked,
                         {{"reason", "hom-set sizes differ"},
                          {"left", hom_left.size()},
                          {"right", hom_right.size()}});

  for (const SetMap& f : hom_left) {
    ++checked;
    if (transpose(untranspose(f)) != f)
      return Verdict::fail(law, checked, {{"reason", "transpose not inverse"}, {"f", f}});
  }
  for (const FamilyMor& h : hom_right) {
    ++checked;
    if (untranspose(transpose(h)) != h)
      return Verdict::fail(law, checked, {{"reason", "transpose not inverse"}, {"h", mor_json(h)}});
  }

  // Naturality: untranspose(beta_t; f; alpha) == beta; untranspose(f); underline(alpha),
  // on sampled (alpha, beta, f) triples.
  if (!hom_left.empty()) {
    Rng rng(opts.seed);
    for (std::size_t k = 0; k < opts.naturality_samples; ++k) {
      ++checked;
      SetMap alpha = sample_set_endo(rng, a.size());
      FamilyMor beta = sample_family_endo(rng, b);
      const SetMap& f = hom_left[rng.pick(hom_left.size())];
      SetMap beta_t = beta.count(t) ? beta.at(t) : SetMap{};
      SetMap lhs_inner = compose_set(compose_set(beta_t, f), alpha);
      FamilyMor lhs = untranspose(bt.empty() ? SetMap{} : lhs_inner);
      FamilyMor under_alpha;
      for (const Sort& s : sig.sorts()) {
        std::size_t n = under_a.at(s).size();
        if (n == 0) continue;
        if (s == t)
          under_alpha[s] = alpha;
        else
          under_alpha[s] = SetMap(n, 0);
      }
      FamilyMor rhs = compose(compose(beta, untranspose(f)), under_alpha);
      if (lhs != rhs)
        return Verdict::fail(law, checked,
                             {{"reason", "naturality square broken"},
                              {"alpha", alpha},
                              {"beta", mor_json(beta)},
                              {"f", f}});
    }
  }
  return Verdict::pass(law, checked);
}

}  // namespace sortal
