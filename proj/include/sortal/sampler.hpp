#ifndef SORTAL_SAMPLER_HPP
#define SORTAL_SAMPLER_HPP

#include <map>
#include <optional>

#include "sortal/rng.hpp"
#include "sortal/substitution.hpp"
#include "sortal/term.hpp"

namespace sortal::sampling {

/// Memoized enumerate-backed pools of small terms, used as assignment images
/// and as the inhabitation test for sampled contexts.
class TermPool {
 public:
  TermPool(const Signature& sig, std::size_t height) : sig_(sig), height_(height) {}

  const std::vector<Term>& pool(const Context& ctx, const Sort& s);
  bool inhabited(const Context& ctx, const Sort& s) { return !pool(ctx, s).empty(); }
  std::size_t height() const { return height_; }

 private:
  const Signature& sig_;
  std::size_t height_;
  std::map<std::pair<std::string, std::string>, std::vector<Term>> memo_;
};

/// Whether any term of height <= h exists at (ctx, s); memoized per sampler.
class Inhabitation {
 public:
  explicit Inhabitation(const Signature& sig) : sig_(sig) {}
  bool at(const Context& ctx, const Sort& s, std::size_t h);

 private:
  const Signature& sig_;
  std::map<std::tuple<std::string, std::string, std::size_t>, bool> memo_;
};

/// A context of length <= max_len over arbitrary universe sorts.
Context sample_context(Rng& rng, const Signature& sig, std::size_t max_len);

/// A context whose sorts are all inhabited over `target` within the pool's
/// height, so that a total assignment into `target` exists.
Context sample_assignable_context(Rng& rng, const Signature& sig, TermPool& pool,
                                  const Context& target, std::size_t max_len);

/// A random term at (ctx, s) of height <= max_height, built top-down;
/// nullopt when the sort is uninhabited within the height.
std::optional<Term> sample_term(Rng& rng, const Signature& sig, Inhabitation& inhab,
                                const Context& ctx, const Sort& s, std::size_t max_height);

/// A sort-respecting assignment source -> terms over target, images drawn
/// from the pool. Requires every source sort inhabited over target.
Assignment sample_assignment(Rng& rng, TermPool& pool, const Context& source,
                             const Context& target);

/// Deterministic generator set for the closed pointed-endofunctor family over
/// a signature: identity, every option_sort, option_list blocks of length <= 2,
/// and monad windows of length <= 2.
std::vector<PointedEndo> pointed_endo_generators(const Signature& sig);

/// A random member of the closed set with composite nesting depth <= depth.
PointedEndo sample_pointed_endo(Rng& rng, const Signature& sig, std::size_t depth);

}  // namespace sortal::sampling

#endif
