#ifndef SORTAL_SIGNATURE_HPP
#define SORTAL_SIGNATURE_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sortal/error.hpp"

namespace sortal {

/// A sort is a name token; sort equality is name equality.
struct Sort {
  std::string name;

  Sort() = default;
  Sort(std::string n) : name(std::move(n)) {}
  Sort(const char* n) : name(n) {}

  auto operator<=>(const Sort&) const = default;
};

/// One argument of an operation: the sorts of the variables it binds
/// (innermost first) and the sort of the argument subterm itself.
struct Argument {
  std::vector<Sort> binders;
  Sort sort;

  bool operator==(const Argument&) const = default;
};

/// An operation declaration: name, argument list, result sort.
struct OpDecl {
  std::string name;
  std::vector<Argument> args;
  Sort result;

  bool operator==(const OpDecl&) const = default;
};

/// A machine-readable validation finding.
struct Diagnostic {
  std::string code;     // e.g. "duplicate-sort", "unknown-sort"
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

/// Thrown when a parsed signature violates the structural invariants.
struct InvalidSignature : std::runtime_error {
  std::vector<Diagnostic> diagnostics;

  explicit InvalidSignature(std::vector<Diagnostic> diags);
};

/// A multi-sorted binding signature: a finite sort universe plus an ordered
/// operation table. Construction never validates; run `validate` to obtain
/// diagnostics. Immutable after construction and safe to share across threads.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<Sort> sorts, std::vector<OpDecl> ops);

  const std::vector<Sort>& sorts() const { return sorts_; }
  const std::vector<OpDecl>& ops() const { return ops_; }

  bool has_sort(const Sort& s) const;
  /// nullptr when no operation of that name exists.
  const OpDecl* find_op(std::string_view name) const;
  /// Index into ops(); throws DomainError for unknown names.
  std::size_t op_index(std::string_view name) const;

  bool operator==(const Signature& other) const {
    return sorts_ == other.sorts_ && ops_ == other.ops_;
  }

 private:
  std::vector<Sort> sorts_;
  std::vector<OpDecl> ops_;
  std::map<std::string, std::size_t, std::less<>> sort_index_;
  std::map<std::string, std::size_t, std::less<>> op_index_;
};

/// Returns every invariant violation; empty iff the signature is valid.
std::vector<Diagnostic> validate(const Signature& sig);

/// Disjoint sum of two signatures over the same sort universe. Colliding
/// names from `b` get a "#2" suffix ("#3", ... until free).
/// Throws DomainError when the sort lists differ.
Signature sum(const Signature& a, const Signature& b);

/// Parses the JSON wire format without running validate; schema errors throw
/// ParseError. Unknown keys are rejected.
Signature parse_signature_unvalidated(std::string_view text);

/// Parses and validates. Throws ParseError or InvalidSignature.
Signature parse_signature(std::string_view text);

/// Canonical JSON form (keys in schema order, 2-space indent).
std::string serialize_signature(const Signature& sig);

/// The simply-typed lambda calculus restricted to the arrow types over
/// `base_sorts` of nesting depth <= arrow_depth: one app and one lam instance
/// for every sort pair whose arrow stays inside the universe.
Signature stlc_finitized(const std::vector<Sort>& base_sorts, std::size_t arrow_depth);

}  // namespace sortal

#endif
