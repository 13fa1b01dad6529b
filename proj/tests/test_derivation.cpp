#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace ordlg;
using lit::S;
using lit::W;

namespace {
  Word xp(int n) {
    Word w;
    for (int i = 0; i < std::abs(n); ++i) {
      w = w * Word{n > 0 ? gen(1) : gen_inv(1)};
    }
    return w;
  }

  WordSet zs(std::initializer_list<int> ns) {
    WordSet s;
    for (int n : ns) {
      s.insert(xp(n));
    }
    return s;
  }

  // {3,-5} over the integers: five product steps down to {1,-1}.
  DerivationTree integer_tree() {
    using T   = DerivationTree;
    auto l11  = T::leaf(zs({1, -1}), xp(1));
    auto n12  = T::product(zs({1, -2}), xp(-2), xp(-1), xp(-1), l11, l11);
    auto n22  = T::leaf(zs({2, -2}), xp(2));
    auto n32  = T::product(zs({3, -2}), xp(3), xp(2), xp(1), n22, n12);
    auto n33  = T::leaf(zs({3, -3}), xp(3));
    return T::product(zs({3, -5}), xp(-5), xp(-3), xp(-2), n33, n32);
  }

  DerivationTree free_tree() {
    using T   = DerivationTree;
    auto lx   = T::leaf(S("{x, y*y, x^-1}"), W("x"));
    auto ly   = T::leaf(S("{x*x, y, y^-1}"), W("y"));
    auto left = T::product(S("{x*x, y*y, x^-1}"), W("x*x"), W("x"), W("x"), lx, lx);
    auto right
        = T::product(S("{x*x, y*y, y^-1}"), W("y*y"), W("y"), W("y"), ly, ly);
    return T::product(S("{x*x, y*y, x^-1*y^-1}"), W("x^-1*y^-1"), W("x^-1"),
                      W("y^-1"), left, right);
  }

  DerivationTree exchange_tree() {
    using T = DerivationTree;
    return T::exchange(S("{x, y*x^-1*y^-1}"), W("y*x^-1*y^-1"), W("y*x^-1"),
                       W("y^-1"), T::leaf(S("{x, x^-1}"), W("x")));
  }
}  // namespace

TEST_CASE("the integer tree") {
  FreeAbelianGroup z(1);
  auto             t = integer_tree();
  CHECK(t.depth() == 3);
  CHECK(t.size() == 7);
  CHECK(check(t, System::right_orders, z).accepted);
  CHECK(check(t, System::orders, z).accepted);
  // product order matters in the free group only through canonical forms
  CHECK(check(t, System::right_orders, FreeGroup(1)).accepted);
}

TEST_CASE("the free-group tree") {
  auto t = free_tree();
  CHECK(t.depth() == 2);
  CHECK_FALSE(t.uses_exchange());
  CHECK(check(t, System::right_orders, FreeGroup(2)).accepted);
  CHECK(check(t, System::orders, FreeGroup(2)).accepted);
}

TEST_CASE("exchange trees belong to the D-system only") {
  auto t = exchange_tree();
  CHECK(t.uses_exchange());
  CHECK(check(t, System::orders, FreeGroup(2)).accepted);
  auto r = check(t, System::right_orders, FreeGroup(2));
  CHECK_FALSE(r.accepted);
  CHECK(r.path.empty());
  CHECK(r.describe().find("exchange") != std::string::npos);
}

TEST_CASE("the checker rejects malformed trees") {
  FreeGroup f(2);
  using T = DerivationTree;
  CHECK_FALSE(check(T::leaf(S("{x, y}"), W("x")), System::orders, f).accepted);
  CHECK_FALSE(check(T::closure(S("{x, y}"), {W("x"), W("y")}),
                    System::orders, f).accepted);
  CHECK(check(T::closure(S("{x, y*x^-1, x^-1*y^-1}"),
                         {W("x"), W("x^-1*y^-1"), W("y*x^-1"), W("x")}),
              System::right_orders, f).accepted);
  CHECK_FALSE(check(T::closure(S("{x}"), {}), System::orders, f).accepted);

  auto bad = free_tree();
  bad.children[1].children[0].a = W("x");
  auto r = check(bad, System::right_orders, f);
  CHECK_FALSE(r.accepted);
  CHECK(r.path == std::vector<std::size_t>{1, 0});

  auto wrong = free_tree();
  wrong.c    = W("x*y");
  CHECK_FALSE(check(wrong, System::right_orders, f).accepted);

  auto off = free_tree();
  off.b    = W("y");
  CHECK_FALSE(check(off, System::right_orders, f).accepted);

  CHECK_FALSE(check(free_tree(), System::right_orders, FreeGroup(1)).accepted);
}

TEST_CASE("enlarge and extend_by_exchange") {
  FreeGroup f(2);
  auto      big = enlarge(free_tree(), S("{x*y*x, y^-1}"));
  CHECK(big.conclusion.count(W("x*y*x")) == 1);
  CHECK(check(big, System::right_orders, f).accepted);

  auto ext = extend_by_exchange(free_tree(), W("x^-1"), W("y^-1"), f);
  CHECK(ext.conclusion == S("{x*x, y*y, y^-1*x^-1}"));
  CHECK(check(ext, System::orders, f).accepted);
  CHECK_FALSE(check(ext, System::right_orders, f).accepted);
  CHECK_THROWS_AS(extend_by_exchange(free_tree(), W("x"), W("y"), f),
                  std::invalid_argument);

  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    WordSet extra{oracle::random_word(rng, 2, 4)};
    CHECK(check(enlarge(exchange_tree(), extra), System::orders, f).accepted);
  }
}

TEST_CASE("search finds the worked examples") {
  FreeGroup f(2);
  auto      r = search(S("{x*x, y*y, x^-1*y^-1}"), System::right_orders, f, {});
  REQUIRE(r);
  CHECK(check(*r.tree, System::right_orders, f).accepted);
  CHECK(r.tree->conclusion == S("{x*x, y*y, x^-1*y^-1}"));

  auto d = search(S("{x, y*x^-1*y^-1}"), System::orders, f, {});
  REQUIRE(d);
  CHECK(check(*d.tree, System::orders, f).accepted);
  CHECK(d.tree->uses_exchange());

  SearchBudget small;
  small.max_depth = 2;
  CHECK_FALSE(search(S("{x, y*x^-1*y^-1}"), System::right_orders, f, small));
  CHECK_FALSE(search(S("{x*x, x*y, y*x^-1}"), System::right_orders, f, small));

  FreeAbelianGroup z(1);
  auto zi = search(zs({3, -5}), System::right_orders, z, {});
  REQUIRE(zi);
  CHECK(check(*zi.tree, System::right_orders, z).accepted);
}

TEST_CASE("search respects the node budget") {
  SearchBudget b;
  b.max_nodes = 5;
  b.max_depth = 6;
  auto r = search(S("{x*x*y, y*x^-1*y, x^-1*y^-1*x}"), System::orders,
                  FreeGroup(2), b);
  CHECK(r.nodes <= 6);
  CHECK((r.tree.has_value() || r.nodes_exhausted));
}

TEST_CASE("search is sound against right-order extension") {
  FreeGroup    f(2);
  SearchBudget b;
  b.max_depth = 2;
  b.universe  = 16;
  b.max_nodes = 150;
  std::size_t found = 0;
  for (auto const& s : oracle::small_family()) {
    auto r = search(s, System::right_orders, f, b);
    if (r) {
      ++found;
      INFO(to_string(s));
      CHECK(check(*r.tree, System::right_orders, f).accepted);
      CHECK_FALSE(clay_smith(s, Rank(2)).extendable());
      CHECK(decide_valid_lg(s).valid);
    }
  }
  CHECK(found > 100);
}
