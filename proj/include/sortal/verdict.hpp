#ifndef SORTAL_VERDICT_HPP
#define SORTAL_VERDICT_HPP

#include <cstdint>
#include <string>

#include "json.hpp"

namespace sortal {

/// Outcome of one law check. Serializes as
/// {"law": <name>, "status": "pass"|"fail", "samples": N, "counterexample": {...}|null}.
struct Verdict {
  std::string law;
  bool ok = true;
  std::uint64_t samples = 0;
  nlohmann::json counterexample;  // null unless ok == false

  static Verdict pass(std::string law, std::uint64_t samples);
  static Verdict fail(std::string law, std::uint64_t samples, nlohmann::json counterexample);

  nlohmann::json to_json() const;
  std::string str() const;  // single-line JSON
};

}  // namespace sortal

#endif
