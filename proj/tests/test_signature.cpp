#include "doctest.h"
#include "sortal/examples.hpp"
#include "sortal/signature.hpp"
#include "sortal/term.hpp"

using namespace sortal;

namespace {

const char* kStlcJson = R"({ "sorts": ["b", "b->b"],
  "ops": [
    { "name": "app_b_b",
      "args": [ { "binders": [], "sort": "b->b" },
                { "binders": [], "sort": "b" } ],
      "result": "b" },
    { "name": "lam_b_b",
      "args": [ { "binders": ["b"], "sort": "b" } ],
      "result": "b->b" } ] })";

bool has_code(const std::vector<Diagnostic>& diags, const std::string& code) {
  for (const auto& d : diags)
    if (d.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("validate flags duplicate sorts") {
  Signature sig({Sort{"b"}, Sort{"b"}}, {});
  auto diags = validate(sig);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == "duplicate-sort");
}

TEST_CASE("validate flags unknown result sorts") {
  Signature sig({Sort{"b"}}, {OpDecl{"f", {}, Sort{"c"}}});
  auto diags = validate(sig);
  REQUIRE(has_code(diags, "unknown-sort"));
}

TEST_CASE("validate accepts stlc finitizations") {
  for (auto bs : std::vector<std::vector<Sort>>{{Sort{"b"}}, {Sort{"b"}, Sort{"c"}}})
    for (std::size_t d = 0; d <= 2; ++d)
      CHECK(validate(stlc_finitized(bs, d)).empty());
}

TEST_CASE("stlc_finitized depth 1 over one base sort") {
  Signature sig = stlc_finitized({Sort{"b"}}, 1);
  REQUIRE(sig.sorts() == std::vector<Sort>{Sort{"b"}, Sort{"b->b"}});
  REQUIRE(sig.ops().size() == 2);
  CHECK(sig.ops()[0].name == "app_b_b");
  CHECK(sig.ops()[1].name == "lam_b_b");

  const OpDecl& app = sig.ops()[0];
  REQUIRE(app.args.size() == 2);
  CHECK(app.args[0] == Argument{{}, Sort{"b->b"}});
  CHECK(app.args[1] == Argument{{}, Sort{"b"}});
  CHECK(app.result == Sort{"b"});

  const OpDecl& lam = sig.ops()[1];
  REQUIRE(lam.args.size() == 1);
  CHECK(lam.args[0] == Argument{{Sort{"b"}}, Sort{"b"}});
  CHECK(lam.result == Sort{"b->b"});
}

TEST_CASE("stlc_finitized depth 0 has no ops") {
  Signature sig = stlc_finitized({Sort{"b"}}, 0);
  CHECK(sig.sorts() == std::vector<Sort>{Sort{"b"}});
  CHECK(sig.ops().empty());
}

TEST_CASE("arrow names parenthesize composite operands") {
  Signature sig = stlc_finitized({Sort{"b"}}, 2);
  std::vector<std::string> names;
  for (const Sort& s : sig.sorts()) names.push_back(s.name);
  CHECK(names == std::vector<std::string>{"b", "b->b", "b->(b->b)", "(b->b)->b",
                                          "(b->b)->(b->b)"});
}

TEST_CASE("sum with an op-free signature is the identity") {
  Signature sig = stlc_finitized({Sort{"b"}}, 1);
  Signature empty(sig.sorts(), {});
  CHECK(sum(sig, empty) == sig);
}

TEST_CASE("sum concatenates op tables") {
  Signature stlc = stlc_finitized({Sort{"b"}}, 1);
  Signature extra(stlc.sorts(), {OpDecl{"k", {}, Sort{"b"}}});
  Signature s = sum(stlc, extra);
  REQUIRE(s.ops().size() == 3);
  CHECK(s.ops()[2].name == "k");
}

TEST_CASE("sum renames colliding ops with a #2 suffix") {
  Signature a({Sort{"b"}}, {OpDecl{"k", {}, Sort{"b"}}});
  Signature b({Sort{"b"}}, {OpDecl{"k", {Argument{{}, Sort{"b"}}}, Sort{"b"}}});
  Signature s = sum(a, b);
  REQUIRE(s.ops().size() == 2);
  CHECK(s.ops()[0].name == "k");
  CHECK(s.ops()[1].name == "k#2");
}

TEST_CASE("sum rejects mismatched sort universes") {
  Signature a({Sort{"b"}}, {});
  Signature b({Sort{"c"}}, {});
  CHECK_THROWS_AS(sum(a, b), DomainError);
}

TEST_CASE("parse reads the wire format") {
  Signature sig = parse_signature(kStlcJson);
  CHECK(sig == stlc_finitized({Sort{"b"}}, 1));
}

TEST_CASE("parse rejects an empty object") {
  CHECK_THROWS_AS(parse_signature("{}"), ParseError);
  try {
    parse_signature("{}");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("sorts") != std::string::npos);
  }
}

TEST_CASE("parse rejects unknown keys") {
  CHECK_THROWS_AS(parse_signature(R"({"sorts": [], "ops": [], "extra": 1})"), ParseError);
}

TEST_CASE("malformed json errors carry a position") {
  try {
    parse_signature(R"({"sorts": ["b"], )");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("malformed JSON") != std::string::npos);
    // the line/column of the failure comes through
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("parse surfaces unknown-sort diagnostics") {
  const char* text = R"({"sorts": ["b"],
    "ops": [{"name": "f", "args": [], "result": "c"}]})";
  CHECK_THROWS_AS(parse_signature(text), InvalidSignature);
  try {
    parse_signature(text);
  } catch (const InvalidSignature& e) {
    CHECK(has_code(e.diagnostics, "unknown-sort"));
  }
}

TEST_CASE("serialize then parse is the identity") {
  for (const Signature& sig : {stlc_example(), pcf_example(), coc_example(),
                               stlc_finitized({Sort{"b"}, Sort{"c"}}, 2)}) {
    CHECK(parse_signature(serialize_signature(sig)) == sig);
    // serialization is deterministic
    CHECK(serialize_signature(sig) == serialize_signature(parse_signature(serialize_signature(sig))));
  }
}

TEST_CASE("sum embeds the left summand's terms") {
  // Terms of the sum built only from sig1 ops correspond exactly to sig1
  // terms, checked by enumeration counts at every height <= 4.
  Signature stlc = stlc_finitized({Sort{"b"}}, 1);
  Signature extra(stlc.sorts(), {OpDecl{"c0", {}, Sort{"b"}},
                                 OpDecl{"u", {Argument{{}, Sort{"b"}}}, Sort{"b"}}});
  Signature both = sum(stlc, extra);
  auto from_sig1 = [&](const Term& t) {
    // an op table lookup suffices: sig1 op names are a prefix of the sum's
    std::function<bool(const Term&)> rec = [&](const Term& u) {
      if (u.is_var()) return true;
      if (!stlc.find_op(u.op_name())) return false;
      for (const Term& a : u.args())
        if (!rec(a)) return false;
      return true;
    };
    return rec(t);
  };
  Context ctx{{Sort{"b"}}};
  for (const Sort& s : stlc.sorts())
    for (std::size_t h = 1; h <= 4; ++h) {
      auto whole = enumerate_terms(both, ctx, s, h);
      std::size_t restricted = 0;
      for (const Term& t : whole)
        if (from_sig1(t)) ++restricted;
      CHECK(restricted == enumerate_terms(stlc, ctx, s, h).size());
    }
}
