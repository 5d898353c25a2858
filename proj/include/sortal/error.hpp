#ifndef SORTAL_ERROR_HPP
#define SORTAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sortal {

/// Malformed textual input: bad JSON, bad s-expression, schema violations.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A well-formed request that the engine cannot satisfy: unknown sorts or
/// operations, out-of-range indices, context mismatches, exceeded bounds.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sortal

#endif
