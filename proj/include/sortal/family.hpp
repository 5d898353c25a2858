#ifndef SORTAL_FAMILY_HPP
#define SORTAL_FAMILY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sortal/signature.hpp"
#include "sortal/verdict.hpp"

namespace sortal {

/// An ordered list of sorts naming de Bruijn variables: index 0 is the most
/// recently bound variable, binders prepend. The textual form is
/// comma-separated in index order ("b,b->b"); the empty context is "".
struct Context {
  std::vector<Sort> entries;

  Context() = default;
  Context(std::vector<Sort> e) : entries(std::move(e)) {}
  Context(std::initializer_list<Sort> e) : entries(e) {}

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  const Sort& operator[](std::size_t i) const { return entries[i]; }

  auto operator<=>(const Context&) const = default;

  std::string str() const;
  static Context parse(std::string_view text);
};

/// Throws DomainError unless every entry of `ctx` is in `sig`'s universe.
void check_context(const Signature& sig, const Context& ctx);

/// A sort-preserving map between the variables of two contexts.
struct Renaming {
  Context source;
  Context target;
  std::vector<std::size_t> map;

  static Renaming identity(Context ctx);
  /// ctx -> block ++ ctx, shifting every index by |block|.
  static Renaming weakening(const Context& ctx, std::span<const Sort> block);

  std::size_t operator()(std::size_t i) const;
  /// Composition: first this, then `next` (requires target == next.source).
  Renaming then(const Renaming& next) const;
  /// block ++ source -> block ++ target: fixes the first |block| indices.
  Renaming under_binders(std::span<const Sort> block) const;

  bool sort_preserving() const;
  bool operator==(const Renaming&) const = default;
};

/// Prepends one fresh variable of sort s; the old index i becomes i+1.
Context option_sort(const Signature& sig, const Context& ctx, const Sort& s);
/// Prepends a block of binders: option_list(ctx, [s1..sk]) has s1 at index 0.
Context option_list(const Signature& sig, const Context& ctx, std::span<const Sort> sorts);

/// An explicit finite set of labels; order is canonical, labels distinct.
using FinSet = std::vector<std::string>;

/// A finitely supported sorted family: an explicit finite set per sort.
struct FinFamily {
  std::map<Sort, FinSet> carrier;

  FinSet at(const Sort& s) const;
  bool operator==(const FinFamily&) const = default;
};

/// proj_s X = X s.
FinSet proj(const Signature& sig, const FinFamily& fam, const Sort& s);
/// hat(A, t): carrier A at t, empty elsewhere.
FinFamily hat(const Signature& sig, const FinSet& a, const Sort& t);
/// underline(A, t): carrier A at t, the canonical singleton {"()"} elsewhere.
FinFamily underline(const Signature& sig, const FinSet& a, const Sort& t);
/// The family view of a context: carrier(s) = indices of sort s, as labels.
FinFamily context_to_family(const Context& ctx);

struct Coproduct {
  Context context;
  Renaming left;
  Renaming right;
};

/// Concatenation with the left block first; injections are sort-preserving.
Coproduct coproduct(const Context& a, const Context& b);

/// |hom(F, G)| in the category of finitely supported families over sig's
/// sorts: the product over sorts of |G s| ^ |F s|, saturating at UINT64_MAX.
std::uint64_t hom_size(const Signature& sig, const FinFamily& f, const FinFamily& g);

struct AdjunctionOptions {
  std::size_t size_bound = 4;            // per carrier; exceeding it is an error
  std::size_t naturality_samples = 256;  // sampled (alpha, beta, hom) triples
  std::uint64_t seed = 0;
};

/// Checks that transposition hom(hat(A,t), B) ~ hom(A, B t) is a bijection,
/// exhaustively over both hom-sets, with naturality squares on sampled
/// morphism triples. The verdict carries a counterexample on failure.
Verdict check_adjunction_hat_proj(const Signature& sig, const FinSet& a, const FinFamily& b,
                                  const Sort& t, const AdjunctionOptions& opts = {});

/// Same for hom(B t, A) ~ hom(B, underline(A,t)).
Verdict check_adjunction_proj_underline(const Signature& sig, const FinSet& a, const FinFamily& b,
                                        const Sort& t, const AdjunctionOptions& opts = {});

/// The full grid at carriers of size <= size_bound over sig's sorts: for
/// every sort t, every |A|, every |B t| (and a spread of off-sort carriers),
/// both adjunction checks. Two aggregate verdicts.
std::vector<Verdict> adjunction_suite(const Signature& sig, const AdjunctionOptions& opts = {});

}  // namespace sortal

#endif
