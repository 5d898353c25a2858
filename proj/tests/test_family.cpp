#include "doctest.h"
#include "sortal/examples.hpp"
#include "sortal/family.hpp"
#include "sortal/rng.hpp"

using namespace sortal;

namespace {
const Sort b{"b"}, arrow{"b->b"};
Signature stlc() { return stlc_finitized({b}, 1); }
}  // namespace

TEST_CASE("context text form round-trips") {
  CHECK(Context{}.str() == "");
  CHECK(Context::parse("") == Context{});
  Context ctx{{b, arrow}};
  CHECK(ctx.str() == "b,b->b");
  CHECK(Context::parse("b,b->b") == ctx);
}

TEST_CASE("option_sort prepends") {
  Signature sig = stlc();
  CHECK(option_sort(sig, Context{}, b) == Context{{b}});
  CHECK(option_sort(sig, Context{{b}}, arrow) == Context{{arrow, b}});
  CHECK_THROWS_AS(option_sort(sig, Context{}, Sort{"nope"}), DomainError);
}

TEST_CASE("option_sort satisfies the counting law") {
  Signature sig = stlc();
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Context ctx;
    for (std::size_t k = rng.pick(4); k > 0; --k)
      ctx.entries.push_back(sig.sorts()[rng.pick(2)]);
    const Sort& s = sig.sorts()[rng.pick(2)];
    const Sort& t = sig.sorts()[rng.pick(2)];
    auto count = [&](const Context& c, const Sort& u) {
      std::size_t n = 0;
      for (const Sort& e : c.entries)
        if (e == u) ++n;
      return n;
    };
    CHECK(count(option_sort(sig, ctx, s), t) == count(ctx, t) + (s == t ? 1 : 0));
  }
}

TEST_CASE("option_list is the iterated option") {
  Signature sig = stlc();
  CHECK(option_list(sig, Context{{b}}, std::vector<Sort>{}) == Context{{b}});
  std::vector<Sort> st{b, arrow};
  CHECK(option_list(sig, Context{}, st) == Context{{b, arrow}});

  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Context ctx;
    for (std::size_t k = rng.pick(3); k > 0; --k)
      ctx.entries.push_back(sig.sorts()[rng.pick(2)]);
    std::vector<Sort> l1, l2;
    for (std::size_t k = rng.pick(3); k > 0; --k) l1.push_back(sig.sorts()[rng.pick(2)]);
    for (std::size_t k = rng.pick(3); k > 0; --k) l2.push_back(sig.sorts()[rng.pick(2)]);
    std::vector<Sort> joined = l1;
    joined.insert(joined.end(), l2.begin(), l2.end());
    CHECK(option_list(sig, option_list(sig, ctx, l2), l1) == option_list(sig, ctx, joined));
  }
}

TEST_CASE("proj and hat pin each other down") {
  Signature sig = stlc();
  CHECK(proj(sig, FinFamily{}, b).empty());
  FinSet a{"x", "y"};
  CHECK(proj(sig, hat(sig, a, b), b) == a);
  CHECK(proj(sig, hat(sig, a, b), arrow).empty());
  CHECK(hat(sig, {}, b) == FinFamily{});
  CHECK(hat(sig, {"a"}, b).at(b) == FinSet{"a"});
}

TEST_CASE("underline carries the canonical singleton off-sort") {
  Signature sig = stlc();
  FinSet a{"x", "y"};
  CHECK(underline(sig, a, b).at(b) == a);
  CHECK(underline(sig, a, b).at(arrow) == FinSet{"()"});
}

TEST_CASE("hom sizes witness both adjunctions") {
  Signature sig = stlc();
  FinSet a{"x", "y"};
  FinFamily fam;
  fam.carrier[b] = {"0", "1", "2"};
  // |hom(hat(A,t), B)| = |hom(A, B t)| = 3^2 = 9
  FinFamily discrete_a;
  discrete_a.carrier[b] = a;  // A viewed at the single sort b
  CHECK(hom_size(sig, hat(sig, a, b), fam) == 9);
  // |hom(B t, A)| = |hom(B, underline(A,t))| = 2^3 = 8
  CHECK(hom_size(sig, fam, underline(sig, a, b)) == 8);
}

TEST_CASE("hat is left adjoint to proj") {
  Signature sig = stlc();
  FinFamily fam;
  fam.carrier[b] = {"0", "1", "2"};
  fam.carrier[arrow] = {"f"};
  SUBCASE("empty A gives singleton hom-sets") {
    Verdict v = check_adjunction_hat_proj(sig, {}, fam, b);
    CHECK(v.ok);
  }
  SUBCASE("two by three bijection") {
    Verdict v = check_adjunction_hat_proj(sig, {"x", "y"}, fam, b);
    CHECK(v.ok);
  }
  SUBCASE("size bound enforced") {
    CHECK_THROWS_AS(check_adjunction_hat_proj(sig, {"1", "2", "3", "4", "5"}, fam, b),
                    DomainError);
  }
}

TEST_CASE("proj is left adjoint to underline") {
  Signature sig = stlc();
  for (std::size_t na = 0; na <= 3; ++na)
    for (std::size_t nb = 0; nb <= 3; ++nb) {
      FinSet a;
      for (std::size_t i = 0; i < na; ++i) a.push_back("a" + std::to_string(i));
      FinFamily fam;
      for (std::size_t i = 0; i < nb; ++i) fam.carrier[b].push_back("b" + std::to_string(i));
      fam.carrier[arrow] = {"f", "g"};
      CHECK(check_adjunction_proj_underline(sig, a, fam, b).ok);
      CHECK(check_adjunction_hat_proj(sig, a, fam, b).ok);
    }
}

TEST_CASE("context_to_family groups indices by sort") {
  CHECK(context_to_family(Context{}) == FinFamily{});
  FinFamily two = context_to_family(Context{{b, b}});
  CHECK(two.at(b) == FinSet{"0", "1"});
  FinFamily mixed = context_to_family(Context{{b, arrow}});
  CHECK(mixed.at(arrow) == FinSet{"1"});
  CHECK(mixed.at(b) == FinSet{"0"});
}

TEST_CASE("coproduct concatenates with sort-preserving injections") {
  Context empty;
  Context ctx{{b, arrow}};
  Coproduct c0 = coproduct(empty, ctx);
  CHECK(c0.context == ctx);
  CHECK(c0.right == Renaming::identity(ctx));

  Coproduct c = coproduct(Context{{b}}, Context{{arrow}});
  CHECK(c.context == Context{{b, arrow}});
  CHECK(c.right(0) == 1);
  CHECK(c.left.sort_preserving());
  CHECK(c.right.sort_preserving());
}

TEST_CASE("renamings satisfy the functor laws") {
  Signature sig = stlc();
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto sample_ctx = [&](std::size_t max) {
      Context ctx;
      for (std::size_t k = rng.pick(max + 1); k > 0; --k)
        ctx.entries.push_back(sig.sorts()[rng.pick(2)]);
      return ctx;
    };
    auto sample_renaming = [&](const Context& src, const Context& tgt) -> std::optional<Renaming> {
      Renaming r;
      r.source = src;
      r.target = tgt;
      for (const Sort& s : src.entries) {
        std::vector<std::size_t> slots;
        for (std::size_t p = 0; p < tgt.size(); ++p)
          if (tgt[p] == s) slots.push_back(p);
        if (slots.empty()) return std::nullopt;
        r.map.push_back(slots[rng.pick(slots.size())]);
      }
      return r;
    };
    Context a = sample_ctx(3), bc = sample_ctx(3), c = sample_ctx(3), d = sample_ctx(3);
    auto f = sample_renaming(a, bc), g = sample_renaming(bc, c), h = sample_renaming(c, d);
    if (!f || !g || !h) continue;
    CHECK(f->sort_preserving());
    CHECK(f->then(Renaming::identity(bc)) == *f);
    CHECK(Renaming::identity(a).then(*f) == *f);
    CHECK(f->then(*g).then(*h) == f->then(g->then(*h)));
  }
}
