#ifndef SORTAL_TERM_HPP
#define SORTAL_TERM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sortal/family.hpp"
#include "sortal/signature.hpp"

namespace sortal {

/// A well-sorted term over a context: a de Bruijn variable or an operation
/// node whose arguments live over binder-extended contexts. Terms carry their
/// context and sort; they are immutable and cheap to copy (shared nodes).
/// Equality is structural and is the equality used by every law check.
class Term {
 public:
  Term() = default;  // empty handle; only produced terms are valid

  bool valid() const { return node_ != nullptr; }
  bool is_var() const;
  std::size_t var_index() const;
  const std::string& op_name() const;
  const std::vector<Term>& args() const;
  const Context& context() const;
  const Sort& sort() const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  /// s-expression form: "(var 0)", "(op lam_b_b (var 0))".
  std::string str() const;

  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<const Node> node_;
};

/// The variable case: index i of ctx, at sort ctx[i].
Term var(const Context& ctx, std::size_t index);

/// Builds an operation node with full checking: the op must exist, arity must
/// match, and args[j] must be well-sorted over option_list(ctx, binders_j) at
/// the declared sort. Errors name the offending argument.
Term mk_op(const Signature& sig, const Context& ctx, std::string_view op_name,
           std::vector<Term> args);

/// Functorial action on a renaming; binders extend the renaming by identity
/// on the fresh block.
Term rename(const Term& t, const Renaming& rho);

/// Every node counts: height(Var) = 1, height(op node) = 1 + max arg height
/// (1 for nullary ops).
std::size_t height(const Term& t);

struct EnumerateOptions {
  std::size_t height_bound = 6;          // max_height above this is an error
  std::uint64_t budget = 10'000'000;     // total produced terms across the call
};

/// All well-sorted terms of height <= max_height at (ctx, s), duplicate-free,
/// in deterministic order: variables by index, then ops in declaration order
/// with argument tuples in lexicographic order (left argument outermost).
std::vector<Term> enumerate_terms(const Signature& sig, const Context& ctx, const Sort& s,
                                  std::size_t max_height, const EnumerateOptions& opts = {});

std::string print_term(const Term& t);

/// Parses the s-expression grammar, checking well-sortedness as it goes.
/// Sorts are inferred bottom-up; `expect` adds a final check when given.
Term parse_term(const Signature& sig, const Context& ctx, std::string_view text,
                const std::optional<Sort>& expect = std::nullopt);

/// Total re-checking pass over an already-built term.
bool well_sorted(const Signature& sig, const Term& t);

}  // namespace sortal

#endif
