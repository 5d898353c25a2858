#include "sortal/examples.hpp"

namespace sortal {

Signature stlc_example() { return stlc_finitized({Sort{"b"}}, 1); }

Signature pcf_example() {
  Signature stlc = stlc_finitized({Sort{"nat"}, Sort{"bool"}}, 1);

  const Sort nat{"nat"}, boolean{"bool"};
  std::vector<OpDecl> extras;
  extras.push_back({"zero", {}, nat});
  extras.push_back({"succ", {Argument{{}, nat}}, nat});
  extras.push_back({"pred", {Argument{{}, nat}}, nat});
  extras.push_back({"true", {}, boolean});
  extras.push_back({"false", {}, boolean});
  extras.push_back({"iszero", {Argument{{}, nat}}, boolean});
  for (const Sort& s : stlc.sorts())
    extras.push_back({"cond_" + s.name,
                      {Argument{{}, boolean}, Argument{{}, s}, Argument{{}, s}},
                      s});
  for (const Sort& s : stlc.sorts())
    extras.push_back({"fix_" + s.name, {Argument{{s}, s}}, s});

  return sum(stlc, Signature(stlc.sorts(), std::move(extras)));
}

Signature coc_example() {
  const Sort ty{"ty"}, el{"el"};
  std::vector<OpDecl> ops;
  ops.push_back({"Pi", {Argument{{}, ty}, Argument{{el}, ty}}, ty});
  ops.push_back({"lam", {Argument{{}, ty}, Argument{{el}, el}}, el});
  ops.push_back({"app", {Argument{{}, el}, Argument{{}, el}}, el});
  ops.push_back({"Prop", {}, ty});
  ops.push_back({"Proof", {Argument{{}, el}}, ty});
  return Signature({ty, el}, std::move(ops));
}

}  // namespace sortal
