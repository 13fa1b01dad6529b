#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace ordlg;
using lit::S;
using lit::W;

namespace {
  // Brute-force LG validity: every sign choice on cis(J) gives a cyclic
  // system of strict inequalities.
  // Empty when cis(J) has more than `cap` classes.
  std::optional<bool> brute_valid(WordSet const& j, std::size_t cap = 14) {
    if (j.count(Word::identity()) != 0) {
      return true;
    }
    std::vector<oracle::Raw> nodes;
    std::set<oracle::Raw>    node_set{oracle::Raw{}};
    for (auto const& w : j) {
      auto r = oracle::raw(w);
      for (std::size_t i = 1; i <= r.size(); ++i) {
        node_set.insert(oracle::Raw(r.begin(), r.begin() + static_cast<long>(i)));
      }
    }
    nodes.assign(node_set.begin(), node_set.end());
    std::set<oracle::Raw> reps;
    for (auto const& u : nodes) {
      for (auto const& v : nodes) {
        if (u != v) {
          auto d  = oracle::push_cancel(oracle::concat(u, oracle::inverse(v)));
          auto di = oracle::inverse(d);
          if (reps.count(di) == 0) {
            reps.insert(d);
          }
        }
      }
    }
    std::vector<oracle::Raw> rv(reps.begin(), reps.end());
    if (rv.size() > cap) {
      return std::nullopt;
    }
    std::set<oracle::Raw>    base;
    for (auto const& w : j) {
      base.insert(oracle::raw(w));
    }
    std::size_t const n = nodes.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rv.size()); ++bits) {
      std::set<oracle::Raw> pos = base;
      for (std::size_t i = 0; i < rv.size(); ++i) {
        pos.insert((bits >> i) & 1 ? oracle::inverse(rv[i]) : rv[i]);
      }
      std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b) {
            auto d = oracle::push_cancel(
                oracle::concat(nodes[a], oracle::inverse(nodes[b])));
            reach[a][b] = pos.count(d) != 0;
          }
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (reach[a][k] && reach[k][b]) {
              reach[a][b] = true;
            }
          }
        }
      }
      bool cyclic = false;
      for (std::size_t a = 0; a < n; ++a) {
        cyclic = cyclic || reach[a][a];
      }
      if (!cyclic) {
        return false;
      }
    }
    return true;
  }

  // The invariants of an l-truncated right order, checked directly.
  void check_truncated(TruncatedRightOrder const& o, WordSet const& s) {
    CHECK(o.positives.count(Word::identity()) == 0);
    for (auto const& w : s) {
      CHECK(o.positives.count(w) == 1);
    }
    for (auto const& a : o.positives) {
      CHECK(a.length() <= o.l);
      for (auto const& b : o.positives) {
        auto p = oracle::push_cancel(oracle::concat(oracle::raw(a), oracle::raw(b)));
        if (p.size() <= o.l) {
          CHECK(o.positives.count(oracle::word(p)) == 1);
        }
      }
    }
    for (auto const& r : oracle::brute_ball(o.rank.value(), static_cast<int>(o.l) - 1)) {
      if (!r.empty()) {
        Word t = oracle::word(r);
        CHECK((o.positives.count(t) + o.positives.count(t.inverse())) >= 1);
      }
    }
  }

  WordSet random_set(std::mt19937& rng, int count, int max_len) {
    WordSet s;
    while (static_cast<int>(s.size()) < count) {
      Word w = oracle::random_word(rng, 2, max_len);
      if (!w.is_identity()) {
        s.insert(w);
      }
    }
    return s;
  }

  bool same_cycle(std::vector<Word> a, std::vector<Word> b) {
    if (a.size() != b.size()) {
      return false;
    }
    for (std::size_t r = 0; r < a.size(); ++r) {
      std::rotate(a.begin(), a.begin() + 1, a.end());
      if (a == b) {
        return true;
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("difference systems") {
  auto s1 = build_difference_system(S("{x}"));
  CHECK(s1.nodes == std::vector<Word>{Word::identity(), W("x")});
  REQUIRE(s1.classes.size() == 1);
  CHECK(s1.classes[0].forced_sign == 1);

  auto s2 = build_difference_system(S("{x*x}"));
  CHECK(s2.nodes.size() == 3);
  REQUIRE(s2.classes.size() == 2);
  CHECK_FALSE(s2.classes[0].forced_sign);
  CHECK(s2.classes[0].oriented_pairs.size() == 2);
  CHECK(s2.classes[1].forced_sign == 1);

  CHECK(build_difference_system(S("{x, x^-1}")).immediately_cyclic);
  CHECK_FALSE(build_difference_system(S("{x, y}")).immediately_cyclic);
}

TEST_CASE("consistency of sign assignments") {
  auto sys = build_difference_system(S("{x*x}"));
  auto r1  = consistent(sys, {1, 1});
  CHECK(r1.acyclic);
  CHECK(r1.order == std::vector<Word>{W("x*x"), W("x"), Word::identity()});

  auto r2 = consistent(sys, {-1, 1});
  CHECK_FALSE(r2.acyclic);
  CHECK(same_cycle(r2.cycle, {Word::identity(), W("x"), W("x*x")}));

  auto r3 = consistent(build_difference_system(S("{x}")), {1});
  CHECK(r3.order == std::vector<Word>{W("x"), Word::identity()});
  CHECK_THROWS(consistent(sys, {1}));
}

TEST_CASE("decide_valid_lg examples") {
  CHECK(decide_valid_lg(S("{x*x, y*y, x^-1*y^-1}")).valid);
  CHECK_FALSE(decide_valid_lg(S("{x*x, x*y, y*x^-1}")).valid);
  CHECK_FALSE(decide_valid_lg(S("{x, y*x^-1*y^-1}")).valid);
  CHECK(decide_valid_lg(S("{e}")).valid);
  CHECK(decide_valid_lg(S("{x, x^-1}")).valid);
  CHECK_THROWS(decide_valid_lg({}));
}

TEST_CASE("decide_valid_lg witness is the first acyclic assignment") {
  auto d = decide_valid_lg(S("{x*x, x*y, y*x^-1}"));
  REQUIRE(d.witness);
  CHECK(d.witness->order
        == std::vector<Word>{W("x*x"), W("x*y"), W("y"), W("x"),
                             W("y*x^-1"), Word::identity()});
  CHECK(d.witness->classes.front() == std::pair<Word, int>{W("x"), 1});
}

TEST_CASE("pruned and exhaustive enumeration agree") {
  for (auto const& s : oracle::small_family()) {
    auto a = decide_valid_lg(s, true);
    auto b = decide_valid_lg(s, false);
    REQUIRE(a.valid == b.valid);
    if (a.witness) {
      CHECK(a.witness->order == b.witness->order);
      CHECK(a.witness->classes == b.witness->classes);
    }
  }
}

TEST_CASE("decide_valid_lg agrees with brute-force sign enumeration") {
  std::mt19937 rng(41);
  int          compared = 0;
  for (int i = 0; i < 400; ++i) {
    auto s = random_set(rng, 1 + i % 3, 3);
    if (auto b = brute_valid(s)) {
      INFO(to_string(s));
      CHECK(decide_valid_lg(s).valid == *b);
      ++compared;
    }
  }
  CHECK(compared >= 100);
}

TEST_CASE("product closure in the ball") {
  CHECK(product_closure_in_ball(S("{x*x, y*y, x^-1*y^-1}"), 2)
        == S("{x*x, y*y, x^-1*y^-1, x*y^-1, x^-1*y, x*y}"));
  CHECK(product_closure_in_ball(S("{x*x, x*y, y*x^-1}"), 2)
        == S("{x*x, x*y, y*x^-1, y*x, y*y}"));
  CHECK(product_closure_in_ball(S("{x}"), 3) == S("{x, x*x, x*x*x}"));
  std::mt19937 rng(42);
  for (int i = 0; i < 50; ++i) {
    auto                  s = random_set(rng, 2, 2);
    std::set<oracle::Raw> raw;
    for (auto const& w : s) {
      raw.insert(oracle::raw(w));
    }
    WordSet expect;
    for (auto const& r : oracle::closure(raw, 3)) {
      expect.insert(oracle::word(r));
    }
    CHECK(product_closure_in_ball(s, 3) == expect);
  }
}

TEST_CASE("clay_smith examples") {
  CHECK_FALSE(clay_smith(S("{x*x, y*y, x^-1*y^-1}")).extendable());
  auto t = clay_smith(S("{x*x, x*y, y*x^-1}"));
  REQUIRE(t.extendable());
  CHECK(t.order->l == 2);
  CHECK(t.order->positives == S("{x*x, x*y, y*x^-1, y*x, y*y, x, y}"));
  check_truncated(*t.order, S("{x*x, x*y, y*x^-1}"));

  auto one = clay_smith(S("{x}"), Rank(1));
  REQUIRE(one.extendable());
  CHECK(one.order->positives == S("{x}"));

  auto empty = clay_smith({});
  REQUIRE(empty.extendable());
  CHECK(empty.order->l == 1);
  CHECK(empty.order->positives.empty());
}

TEST_CASE("clay_smith witnesses satisfy the invariants") {
  for (auto const& s : oracle::small_family()) {
    auto cs = clay_smith(s, Rank(2));
    if (cs.order) {
      CHECK(validate(*cs.order).empty());
      check_truncated(*cs.order, s);
    }
  }
}

TEST_CASE("validate rejects broken orders") {
  TruncatedRightOrder o{Rank(2), 2, S("{x, y, x*x}")};
  CHECK_FALSE(validate(o).empty());
  o.positives.insert(Word::identity());
  CHECK_FALSE(validate(o).empty());
}

TEST_CASE("duality") {
  for (auto const& s : oracle::small_family()) {
    CHECK(clay_smith(s, Rank(2)).extendable()
          == clay_smith(inverses(s), Rank(2)).extendable());
  }
}

TEST_CASE("identity, superset and product rules") {
  std::mt19937 rng(43);
  CHECK(decide_valid_lg(S("{e, x, y}")).valid);
  int supersets = 0;
  while (supersets < 100) {
    auto s = random_set(rng, 2, 2);
    if (!decide_valid_lg(s).valid) {
      continue;
    }
    auto t = s;
    for (auto const& w : random_set(rng, 2, 3)) {
      t.insert(w);
    }
    CHECK(decide_valid_lg(t).valid);
    ++supersets;
  }
  int products = 0;
  while (products < 100) {
    auto base = random_set(rng, 1, 3);
    Word a    = oracle::random_word(rng, 2, 3);
    Word b    = oracle::random_word(rng, 2, 3);
    WordSet ta = base, tb = base, tab = base;
    ta.insert(a);
    tb.insert(b);
    tab.insert(a * b);
    if (decide_valid_lg(ta).valid && decide_valid_lg(tb).valid) {
      CHECK(decide_valid_lg(tab).valid);
      ++products;
    }
  }
}

TEST_CASE("PL automorphisms") {
  PLAutomorphism f({{Rational(0), Rational(1)}});
  PLMaps         m{{1, f}};
  CHECK(evaluate_pl(m, Word::identity(), Rational(5)) == 5);
  CHECK(evaluate_pl(m, W("x"), Rational(0)) == 1);
  CHECK(evaluate_pl(m, W("x^-1"), Rational(1)) == 0);

  PLAutomorphism g({{Rational(0), Rational(0)}, {Rational(2), Rational(1)}});
  CHECK(g.apply(Rational(1)) == Rational(1, 2));
  CHECK(g.apply_inverse(Rational(1, 2)) == 1);
  CHECK(g.apply(Rational(5)) == 4);
  CHECK(g.inverse().apply(Rational(4)) == 5);
  CHECK_THROWS_AS(PLAutomorphism({{Rational(0), Rational(1)},
                                  {Rational(1), Rational(0)}}),
                  std::logic_error);
}

TEST_CASE("counterexample automorphisms") {
  SECTION("J = {x^-1}") {
    auto d = decide_valid_lg(S("{x^-1}"));
    REQUIRE(d.witness);
    auto m = counterexample_automorphisms(S("{x^-1}"), *d.witness, Rank(1));
    using BP = std::vector<std::pair<Rational, Rational>>;
    CHECK(m.at(1).breakpoints() == BP{{0, 1}});
    CHECK(evaluate_pl(m, W("x^-1"), 1) == 0);
  }
  SECTION("J = {xx}") {
    auto d = decide_valid_lg(S("{x*x}"));
    REQUIRE(d.witness);
    CHECK(d.witness->order == std::vector<Word>{W("x*x"), W("x"), Word::identity()});
    auto m = counterexample_automorphisms(S("{x*x}"), *d.witness, Rank(1));
    using BP = std::vector<std::pair<Rational, Rational>>;
    CHECK(m.at(1).breakpoints() == BP{{1, 0}, {2, 1}});
    CHECK(evaluate_pl(m, W("x*x"), 2) == 0);
  }
  SECTION("every invalid instance of the family") {
    for (auto const& s : oracle::small_family()) {
      auto d = decide_valid_lg(s);
      if (d.valid) {
        continue;
      }
      auto       m  = counterexample_automorphisms(s, *d.witness, Rank(2));
      auto const& ord = d.witness->order;
      auto const  re  = Rational(static_cast<long>(
          std::find(ord.begin(), ord.end(), Word::identity()) - ord.begin()));
      for (auto const& t : s) {
        CHECK(evaluate_pl(m, t, re) < re);
      }
    }
  }
}

TEST_CASE("bifurcation") {
  CHECK(find_bifurcation(S("{x}"), Rank(2), 1) == W("y"));
  CHECK(find_bifurcation({}, Rank(2), 1) == W("x"));
  auto s = find_bifurcation(S("{x*x, x*y, y*x^-1}"), Rank(2), 3);
  REQUIRE(s);
  CHECK(*s == W("x^-1*y"));
  CHECK_THROWS(find_bifurcation(S("{x, x^-1}"), Rank(2), 2));
}
