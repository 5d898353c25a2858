#include "doctest.h"
#include "sortal/chain.hpp"
#include "sortal/examples.hpp"

using namespace sortal;

namespace {
const Sort b{"b"}, arrow{"b->b"};
}

TEST_CASE("level 0 is empty everywhere") {
  Signature sig = stlc_example();
  ChainOracle oracle(sig);
  CHECK(oracle.level(0, Context{{b}}, b).empty());
  CHECK(oracle.level(0, Context{}, arrow).empty());
  CHECK(oracle.level_count(0, Context{{b}}, b) == 0);
}

TEST_CASE("level 1 holds exactly the variables when no op is nullary") {
  Signature sig = stlc_example();
  ChainOracle oracle(sig);
  const auto& lvl = oracle.level(1, Context{{b, arrow}}, b);
  REQUIRE(lvl.size() == 1);
  CHECK(lvl[0]->is_var);
  CHECK(lvl[0]->var_index == 0);
}

TEST_CASE("eval_H over the empty evaluator keeps only nullary ops") {
  Signature pcf = pcf_example();
  std::vector<SkeletonPtr> none;
  LevelFn empty = [&](const Context&, const Sort&) -> const std::vector<SkeletonPtr>& {
    return none;
  };
  auto at_nat = eval_H(pcf, empty, Context{}, Sort{"nat"});
  REQUIRE(at_nat.size() == 1);  // zero
  CHECK(pcf.ops()[at_nat[0]->op].name == "zero");
  auto at_bool = eval_H(pcf, empty, Context{}, Sort{"bool"});
  CHECK(at_bool.size() == 2);  // true, false
  CHECK(eval_H(stlc_example(), empty, Context{{b}}, b).empty());
}

TEST_CASE("level 2 of stlc at ([b], b->b) has the two abstractions") {
  Signature sig = stlc_example();
  ChainOracle oracle(sig);
  LevelFn lvl1 = [&](const Context& c, const Sort& s) -> const std::vector<SkeletonPtr>& {
    return oracle.level(1, c, s);
  };
  auto skels = eval_H(sig, lvl1, Context{{b}}, arrow);
  REQUIRE(skels.size() == 2);
  CHECK(oracle.level(2, Context{{b}}, arrow).size() == 2);
  // no op of stlc results in a sort outside {b, b->b}; a non-result sort is empty
  CHECK(oracle.level(2, Context{}, b).empty());
}

TEST_CASE("check_against_terms verifies the bijection on small cells") {
  SUBCASE("empty at level 0") {
    Verdict v = check_against_terms(stlc_example(), Context{{b}}, b, 0);
    CHECK(v.ok);
    CHECK(v.samples == 0);
  }
  SUBCASE("stlc ([b], b) at level 2 is a singleton") {
    Verdict v = check_against_terms(stlc_example(), Context{{b}}, b, 2);
    CHECK(v.ok);
    CHECK(v.samples == 1);
  }
  SUBCASE("pcf closed nats at level 2") {
    Verdict v = check_against_terms(pcf_example(), Context{}, Sort{"nat"}, 2);
    CHECK(v.ok);
    CHECK(v.samples == 7);
  }
  SUBCASE("coc closed types at level 2") {
    Verdict v = check_against_terms(coc_example(), Context{}, Sort{"ty"}, 2);
    CHECK(v.ok);
    CHECK(v.samples == 2);
  }
}

TEST_CASE("levels grow monotonically with injective inclusion") {
  Signature sig = coc_example();
  ChainOracle oracle(sig);
  for (const Sort& s : sig.sorts())
    for (std::size_t n = 0; n + 1 <= 4; ++n) {
      Context ctx{{Sort{"el"}}};
      auto cur = oracle.level(n, ctx, s);
      auto next = oracle.level(n + 1, ctx, s);
      CHECK(cur.size() <= next.size());
      std::vector<std::string> a, bb;
      for (const auto& sk : cur) a.push_back(sk->str());
      for (const auto& sk : next) bb.push_back(sk->str());
      std::sort(a.begin(), a.end());
      std::sort(bb.begin(), bb.end());
      CHECK(std::includes(bb.begin(), bb.end(), a.begin(), a.end()));
      CHECK(oracle.level_count(n, ctx, s) == cur.size());
    }
}

TEST_CASE("the cell budget turns blowups into verdicts, not hangs") {
  ChainOptions opts;
  opts.cell_budget = 5;
  Verdict v = check_against_terms(pcf_example(), Context{}, Sort{"nat"}, 2, opts);
  CHECK_FALSE(v.ok);
  CHECK(v.counterexample.contains("exact_count"));
  CHECK(v.counterexample["exact_count"] == 7);
}

TEST_CASE("count report rows") {
  CHECK(count_csv_row(2, Context{{b}}, b, 1) == "2,b,b,1");
}
