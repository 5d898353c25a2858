#ifndef SORTAL_SUBSTITUTION_HPP
#define SORTAL_SUBSTITUTION_HPP

#include <functional>
#include <memory>
#include <span>

#include "sortal/term.hpp"
#include "sortal/verdict.hpp"

namespace sortal {

/// A sort-respecting map from the variables of one context to terms over
/// another: map[i] is well-sorted over `target` at sort source[i].
struct Assignment {
  Context source;
  Context target;
  std::vector<Term> map;

  /// The unit: every variable to itself.
  static Assignment unit(const Context& ctx);

  /// Throws DomainError when any image has the wrong context or sort.
  void check(const Signature& sig) const;

  bool operator==(const Assignment&) const = default;
};

/// The closed set of pointed endofunctors the strength machinery ranges
/// over. Each case acts concretely on contexts:
///   identity        G -> G
///   option_sort(s)  G -> s :: G
///   option_list(l)  G -> l ++ G
///   monad(w)        G -> G ++ w, a finite sampled window of the term monad:
///                   the variables of G (the point) followed by slots for
///                   |w| extra terms; the point embeds variables at their own
///                   indices, and renamings act uniformly.
///   composite(o,i)  G -> o(i(G))
/// The point is always a variable in this model; its term-level unit is
/// var(apply(ctx), point_var(ctx, i)).
class PointedEndo {
 public:
  enum class Kind { identity, option_sort, option_list, monad, composite };

  static PointedEndo identity();
  static PointedEndo option_sort(Sort s);
  static PointedEndo option_list(std::vector<Sort> sorts);
  static PointedEndo monad(std::vector<Sort> window);
  static PointedEndo composite(PointedEndo outer, PointedEndo inner);

  Kind kind() const { return kind_; }
  const PointedEndo& outer() const { return *outer_; }
  const PointedEndo& inner() const { return *inner_; }

  /// Z applied to a context.
  Context apply(const Signature& sig, const Context& ctx) const;
  /// The position of e_ctx(i) inside apply(ctx).
  std::size_t point_var(const Signature& sig, const Context& ctx, std::size_t i) const;
  /// Functorial action on a renaming: apply(source) -> apply(target).
  Renaming map(const Signature& sig, const Renaming& rho) const;

  std::string str() const;

 private:
  Kind kind_ = Kind::identity;
  Sort sort_;
  std::vector<Sort> sorts_;  // option_list block or monad window
  std::shared_ptr<const PointedEndo> outer_, inner_;
};

/// The pointed distributive law for context extension by one sort:
/// option_sort(apply(Z,G), s) -> apply(Z, option_sort(G, s)), sending the
/// fresh variable through the point and old variables through Z's action on
/// the weakening. Exposed as the underlying sort-preserving renaming.
Renaming dist_option(const Signature& sig, const Sort& s, const PointedEndo& z,
                     const Context& ctx);

/// The same law for a binder block, option_list(apply(Z,G), l) ->
/// apply(Z, option_list(G, l)); equals the composite of the per-sort laws.
Renaming dist_option_list(const Signature& sig, std::span<const Sort> binders,
                          const PointedEndo& z, const Context& ctx);

/// dist_option as the spec-level map from variables to terms.
std::vector<Term> dist_option_terms(const Signature& sig, const Sort& s, const PointedEndo& z,
                                    const Context& ctx);

/// One H-layer: an operation applied to argument terms. For a layer read at
/// base context W, argument j lives over option_list(W, binders_j) at the
/// declared sort (further transformed when a functor is precomposed).
struct OpLayer {
  std::string op;
  Context base;
  std::vector<Term> args;

  bool operator==(const OpLayer&) const = default;
};

/// The strength for the generated signature functor, evaluated at one layer:
/// given a layer over apply(Z, gamma), commutes Z past each binder block via
/// the distributive law, yielding the same operation skeleton with arguments
/// over apply(Z, option_list(gamma, binders_j)). `under` is the functor
/// precomposed onto the layer's arguments (theta at first argument X ∘ under);
/// identity gives the plain strength.
OpLayer theta(const Signature& sig, const OpLayer& layer, const PointedEndo& z,
              const Context& gamma);
OpLayer theta_under(const Signature& sig, const OpLayer& layer, const PointedEndo& z,
                    const PointedEndo& under, const Context& gamma);

/// The Mendler-style bracket: for a pointed morphism f from (Z,e) to the term
/// monad, given at `base` as an assignment apply(Z, base) -> terms over base
/// with f(point(i)) = var(i), computes the unique structural-recursion map
/// h : terms over apply(Z, base) -> terms over base. Variables go through f;
/// operation layers go through the strength, the recursive call, and the
/// rebuilt constructor. Under binders f is extended canonically: fresh
/// variables through the unit, everything else weakened.
Term bracket(const Signature& sig, const PointedEndo& z, const Assignment& f, const Term& t);

/// The unit of the monad (alias of var).
Term eta(const Context& ctx, std::size_t i);

/// Grafting: `outer` is a term over inner.source whose variables stand for
/// the terms of `inner`; join replaces each variable by its term with the
/// de Bruijn lifting under binders. This is the bracket at the identity
/// pointed morphism on the term monad, written directly.
Term join(const Signature& sig, const Term& outer, const Assignment& inner);

/// Monadic extension: bind(f) = join after relabelling variables by f.
Term bind(const Signature& sig, const Assignment& f, const Term& t);

/// Parallel substitution subst(f) : T(X+Y) -> T(Y) for f : X -> T(Y):
/// the bind of the copairing [f, eta] over the coproduct context X ++ Y.
Term subst(const Signature& sig, const Assignment& f, const Term& t);

struct CheckConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::size_t max_height = 4;     // sampled subject terms
  std::size_t image_height = 2;   // assignment images come from enumerate at this height
  std::size_t max_context = 3;    // sampled context length
};

/// Operations under test; empty functions mean the library implementations.
/// The mutation suite substitutes deliberately broken variants.
struct SubstHooks {
  std::function<Term(const Signature&, const Assignment&, const Term&)> bind;
  std::function<Renaming(const Signature&, std::span<const Sort>, const PointedEndo&,
                         const Context&)> dist;
};

/// Monad laws: both unit laws and associativity of bind, the join triangle,
/// the join rectangle (through the strength), and the bracket diagram.
std::vector<Verdict> check_monad_laws(const Signature& sig, const CheckConfig& cfg = {},
                                      const SubstHooks& hooks = {});

/// Strength laws: theta at the identity, theta at composites, and naturality
/// in both arguments.
std::vector<Verdict> check_strength_laws(const Signature& sig, const CheckConfig& cfg = {},
                                         const SubstHooks& hooks = {});

/// Distributive-law laws: identity, composites, agreement of the block law
/// with the composite of per-sort laws, and naturality of the point.
std::vector<Verdict> check_dist_laws(const Signature& sig, const CheckConfig& cfg = {},
                                     const SubstHooks& hooks = {});

/// Interchange of two substitutions on disjoint variable blocks, stated at
/// the bind level over a context X ++ Y ++ R with both images landing in R.
std::vector<Verdict> check_interchange(const Signature& sig, const CheckConfig& cfg = {},
                                       const SubstHooks& hooks = {});

}  // namespace sortal

#endif
