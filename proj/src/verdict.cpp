#include "sortal/verdict.hpp"

namespace sortal {

Verdict Verdict::pass(std::string law, std::uint64_t samples) {
  Verdict v;
  v.law = std::move(law);
  v.ok = true;
  v.samples = samples;
  v.counterexample = nullptr;
  return v;
}

Verdict Verdict::fail(std::string law, std::uint64_t samples, nlohmann::json counterexample) {
  Verdict v;
  v.law = std::move(law);
  v.ok = false;
  v.samples = samples;
  v.counterexample = std::move(counterexample);
  return v;
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  j["law"] = law;
  j["status"] = ok ? "pass" : "fail";
  j["samples"] = samples;
  j["counterexample"] = ok ? nlohmann::json() : counterexample;
  return j;
}

std::string Verdict::str() const {
  nlohmann::ordered_json j;
  j["law"] = law;
  j["status"] = ok ? "pass" : "fail";
  j["samples"] = samples;
  j["counterexample"] = ok ? nlohmann::ordered_json() : nlohmann::ordered_json(counterexample);
  return j.dump();
}

}  // namespace sortal
