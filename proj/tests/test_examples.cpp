#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sortal/examples.hpp"

using namespace sortal;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

const OpDecl& op_named(const Signature& sig, const std::string& name) {
  const OpDecl* op = sig.find_op(name);
  REQUIRE(op != nullptr);
  return *op;
}

}  // namespace

TEST_CASE("stlc example") {
  Signature sig = stlc_example();
  CHECK(sig.sorts().size() == 2);
  CHECK(sig.ops().size() == 2);
  CHECK(validate(sig).empty());
}

TEST_CASE("pcf example has the standard constants") {
  Signature sig = pcf_example();
  CHECK(validate(sig).empty());
  CHECK(sig.sorts().size() == 6);  // nat, bool and the four depth-1 arrows
  CHECK(sig.ops().size() == 8 + 6 + 6 + 6);

  CHECK(op_named(sig, "zero").args.empty());
  CHECK(op_named(sig, "zero").result == Sort{"nat"});
  CHECK(op_named(sig, "succ").args ==
        std::vector<Argument>{Argument{{}, Sort{"nat"}}});
  CHECK(op_named(sig, "iszero").result == Sort{"bool"});

  const OpDecl& cond = op_named(sig, "cond_nat");
  CHECK(cond.args == std::vector<Argument>{Argument{{}, Sort{"bool"}},
                                           Argument{{}, Sort{"nat"}},
                                           Argument{{}, Sort{"nat"}}});
  CHECK(cond.result == Sort{"nat"});

  const OpDecl& fix = op_named(sig, "fix_nat");
  CHECK(fix.args == std::vector<Argument>{Argument{{Sort{"nat"}}, Sort{"nat"}}});
  CHECK(fix.result == Sort{"nat"});

  // summing with the stlc block created no name collisions
  for (const OpDecl& op : sig.ops()) CHECK(op.name.find('#') == std::string::npos);
}

TEST_CASE("coc example is the two-sorted pre-syntax") {
  Signature sig = coc_example();
  CHECK(validate(sig).empty());
  REQUIRE(sig.sorts() == std::vector<Sort>{Sort{"ty"}, Sort{"el"}});

  const OpDecl& pi = op_named(sig, "Pi");
  CHECK(pi.args == std::vector<Argument>{Argument{{}, Sort{"ty"}},
                                         Argument{{Sort{"el"}}, Sort{"ty"}}});
  CHECK(pi.result == Sort{"ty"});

  const OpDecl& lam = op_named(sig, "lam");
  CHECK(lam.args == std::vector<Argument>{Argument{{}, Sort{"ty"}},
                                          Argument{{Sort{"el"}}, Sort{"el"}}});
  CHECK(lam.result == Sort{"el"});

  CHECK(op_named(sig, "Prop").args.empty());
  CHECK(op_named(sig, "Proof").args == std::vector<Argument>{Argument{{}, Sort{"el"}}});
}

TEST_CASE("committed signature files match the builders") {
  CHECK(parse_signature(read_file(std::string(SORTAL_DATA_DIR) + "/stlc.json")) ==
        stlc_example());
  CHECK(parse_signature(read_file(std::string(SORTAL_DATA_DIR) + "/pcf.json")) ==
        pcf_example());
  CHECK(parse_signature(read_file(std::string(SORTAL_DATA_DIR) + "/coc.json")) ==
        coc_example());
}
