#ifndef SORTAL_CHAIN_HPP
#define SORTAL_CHAIN_HPP

#include <functional>
#include <map>
#include <memory>

#include "sortal/term.hpp"
#include "sortal/verdict.hpp"

namespace sortal {

/// A finite approximant of the initial algebra: an element of (Id+H)^n(0)
/// evaluated at a context and sort. Inl = variable, Inr = operation node
/// whose children come from the previous level at binder-extended contexts.
struct Skeleton;
using SkeletonPtr = std::shared_ptr<const Skeleton>;

struct Skeleton {
  bool is_var = true;
  std::size_t var_index = 0;
  std::size_t op = 0;  // index into the signature's op table
  std::vector<SkeletonPtr> kids;

  std::string str() const;  // canonical: "(v 0)" / "(o 3 (v 0) ...)"
};

struct ChainOptions {
  std::size_t level_bound = 6;
  /// Materialization guard: a level whose exact cardinality (computed
  /// arithmetically first) exceeds this is never built.
  std::uint64_t cell_budget = 2'000'000;
};

/// One application of the signature functor H to a level evaluator:
/// set-level coproduct over ops of the cartesian product of the argument
/// level sets (a nullary op contributes a singleton at its result sort).
using LevelFn = std::function<const std::vector<SkeletonPtr>&(const Context&, const Sort&)>;
std::vector<SkeletonPtr> eval_H(const Signature& sig, const LevelFn& argument,
                                const Context& ctx, const Sort& s);

/// Memoized evaluation of the chain 0 -> (Id+H)0 -> (Id+H)^2 0 -> ...
/// Memoization is keyed by (n, canonical context encoding, sort).
class ChainOracle {
 public:
  ChainOracle(const Signature& sig, ChainOptions opts = {});

  /// Level n at (ctx, s); throws DomainError past the level bound or budget.
  const std::vector<SkeletonPtr>& level(std::size_t n, const Context& ctx, const Sort& s);

  /// Exact |level n (ctx, s)| by the counting recurrence, saturating at
  /// UINT64_MAX; never materializes.
  std::uint64_t level_count(std::size_t n, const Context& ctx, const Sort& s);

  const ChainOptions& options() const { return opts_; }

 private:
  const Signature& sig_;
  ChainOptions opts_;
  std::map<std::tuple<std::size_t, std::string, std::string>, std::vector<SkeletonPtr>> memo_;
  std::map<std::tuple<std::size_t, std::string, std::string>, std::uint64_t> count_memo_;
};

/// Builds the structure-preserving map skeleton -> Term (Inl i -> var i,
/// Inr(o, subs) -> mk_op recursively) and checks it is a bijection onto
/// enumerate at height <= n; also checks the level n-1 -> level n inclusion.
/// A level too large for the budget yields a fail verdict carrying the exact
/// cardinality rather than an endless materialization.
Verdict check_against_terms(const Signature& sig, const Context& ctx, const Sort& s,
                            std::size_t n, const ChainOptions& opts = {});

/// CSV row in the count-report format: n,context,sort,count.
std::string count_csv_row(std::size_t n, const Context& ctx, const Sort& s, std::uint64_t count);

}  // namespace sortal

#endif
