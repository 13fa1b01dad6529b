#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "ordlg/json_io.hpp"

using namespace ordlg;
using lit::S;
using lit::W;

namespace {
  oracle::Poly as_poly(MagnusSeries const& s) {
    oracle::Poly p;
    for (auto const& [m, c] : s.coefficients()) {
      std::string key;
      for (int v : m) {
        key.push_back(static_cast<char>('0' + v));
      }
      p[key] = c;
    }
    return p;
  }

  // Sign of the least nonconstant monomial, ordering variables by rank.
  int oracle_sign(oracle::Poly const& p, std::vector<int> const& perm) {
    std::string rank(perm.size(), '0');
    for (std::size_t i = 0; i < perm.size(); ++i) {
      rank[static_cast<std::size_t>(perm[i])] = static_cast<char>('0' + i);
    }
    std::optional<std::pair<std::string, long long>> best;
    for (auto const& [m, c] : p) {
      if (m.empty() || c == 0) {
        continue;
      }
      std::string key;
      for (char v : m) {
        key.push_back(rank[static_cast<std::size_t>(v - '0')]);
      }
      if (!best || key.size() < best->first.size()
          || (key.size() == best->first.size() && key < best->first)) {
        best = {key, c};
      }
    }
    return !best ? 0 : (best->second > 0 ? 1 : -1);
  }

  std::vector<int> random_eps(std::mt19937& rng, int k) {
    std::bernoulli_distribution coin(0.5);
    std::vector<int>            e;
    for (int i = 0; i < k; ++i) {
      e.push_back(coin(rng) ? 1 : -1);
    }
    return e;
  }

  int to_int(MagnusSign s) {
    return s == MagnusSign::positive ? 1 : (s == MagnusSign::negative ? -1 : 0);
  }
}  // namespace

TEST_CASE("Magnus expansion examples") {
  auto s = magnus_expand(W("x"), 3, {1, 1});
  CHECK(s.coefficients().size() == 2);
  CHECK(s.coefficient({0}) == 1);
  auto inv = magnus_expand(W("x^-1"), 3, {1, 1});
  CHECK(inv.coefficient({0}) == -1);
  CHECK(inv.coefficient({0, 0}) == 1);
  CHECK(inv.coefficient({0, 0, 0}) == -1);
  auto comm = magnus_expand(W("x*y*x^-1*y^-1"), 2, {1, 1});
  CHECK(comm.coefficient({0, 1}) == 1);
  CHECK(comm.coefficient({1, 0}) == -1);
  CHECK(comm.coefficient({0}) == 0);
  CHECK(magnus_expand(Word::identity(), 2, {1}).coefficients().size() == 1);
  CHECK_THROWS_AS(magnus_expand(W("x"), 0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(magnus_expand(W("y"), 2, {1}), std::invalid_argument);
}

TEST_CASE("Magnus expansion agrees with the polynomial oracle") {
  std::mt19937 rng(11);
  for (int i = 0; i < 400; ++i) {
    Word        w   = oracle::random_word(rng, 3, 8);
    auto        eps = random_eps(rng, 3);
    std::size_t d   = 1 + static_cast<std::size_t>(i % 5);
    INFO(to_string(w));
    CHECK(as_poly(magnus_expand(w, d, eps)) == oracle::magnus(w, d, eps));
  }
}

TEST_CASE("Magnus expansion is multiplicative") {
  std::mt19937 rng(12);
  for (int i = 0; i < 300; ++i) {
    Word u   = oracle::random_word(rng, 2, 6);
    Word v   = oracle::random_word(rng, 2, 6);
    auto eps = random_eps(rng, 2);
    CHECK(magnus_expand(u * v, 5, eps)
          == magnus_expand(u, 5, eps) * magnus_expand(v, 5, eps));
    CHECK(magnus_expand(u * u.inverse(), 5, eps) == MagnusSeries(5));
  }
}

TEST_CASE("Magnus coefficients overflow loudly") {
  Word w;
  for (int i = 0; i < 70; ++i) {
    w = w * Word{gen_inv(1)};
  }
  CHECK_NOTHROW(magnus_expand(w, 10, {1}));
  CHECK_THROWS_AS(magnus_expand(w, 70, {1}), std::overflow_error);
}

TEST_CASE("Magnus signs") {
  auto std2 = MagnusOrder::standard(2);
  CHECK(magnus_sign(W("x"), std2, 2) == MagnusSign::positive);
  CHECK(magnus_sign(W("x^-1"), std2, 2) == MagnusSign::negative);
  CHECK(magnus_sign(Word::identity(), std2, 2) == MagnusSign::zero_up_to);
  CHECK(magnus_sign(W("x*y*x^-1*y^-1"), std2, 1) == MagnusSign::zero_up_to);
  CHECK(magnus_sign(W("x*y*x^-1*y^-1"), std2, 2) == MagnusSign::positive);
  MagnusOrder swapped{{1, 1}, {1, 0}};
  CHECK(magnus_sign(W("x*y*x^-1*y^-1"), swapped, 2) == MagnusSign::negative);
  MagnusOrder neg{{-1, 1}, {0, 1}};
  CHECK(magnus_sign(W("x"), neg, 2) == MagnusSign::negative);
  CHECK(to_string(MagnusSign::zero_up_to) == "zero");
}

TEST_CASE("Magnus orders are bi-invariant total orders") {
  std::mt19937 rng(13);
  std::vector<MagnusOrder> orders{MagnusOrder{{1, 1}, {0, 1}},
                                  MagnusOrder{{1, -1}, {1, 0}},
                                  MagnusOrder{{-1, -1}, {0, 1}}};
  for (int i = 0; i < 300; ++i) {
    auto const& o = orders[static_cast<std::size_t>(i) % orders.size()];
    Word        u = oracle::random_word(rng, 2, 5);
    Word        v = oracle::random_word(rng, 2, 5);
    Word        g = oracle::random_word(rng, 2, 3);
    std::size_t const d = 12;
    int const su = to_int(magnus_sign(u, o, d));
    CHECK(su == oracle_sign(oracle::magnus(u, d, o.eps), o.perm));
    CHECK(to_int(magnus_sign(u.inverse(), o, d)) == -su);
    if (!u.is_identity()) {
      CHECK(su != 0);
    }
    int const sv = to_int(magnus_sign(v, o, d));
    if (su == 1 && sv == 1) {
      CHECK(to_int(magnus_sign(u * v, o, d)) == 1);
    }
    if (su == 1) {
      CHECK(to_int(magnus_sign(g * u * g.inverse(), o, d)) == 1);
    }
  }
}

TEST_CASE("decide_valid_rg examples") {
  auto v = decide_valid_rg(S("{x, y*x^-1*y^-1}"));
  REQUIRE(v.kind == VerdictKind::valid);
  REQUIRE(v.certificate);
  CHECK(v.certificate->uses_exchange());
  CHECK(check(*v.certificate, System::orders, FreeGroup(2)).accepted);

  auto inv = decide_valid_rg(S("{x, y}"));
  REQUIRE(inv.kind == VerdictKind::invalid);
  CHECK(inv.method == "magnus");
  CHECK(inv.witness->sign == MagnusSign::positive);

  auto comm = decide_valid_rg(S("{x*y*x^-1*y^-1}"));
  REQUIRE(comm.kind == VerdictKind::invalid);
  CHECK(comm.witness->degree >= 2);

  CHECK(decide_valid_rg(S("{e, x}")).kind == VerdictKind::valid);
  CHECK(decide_valid_rg(S("{x, x^-1}")).kind == VerdictKind::valid);

  auto unk = decide_valid_rg(S("{x, y*x^-1*y^-1}"), RgBudget::minimal());
  CHECK(unk.kind == VerdictKind::unknown);
  CHECK(unk.budgets.count("max_orders") == 1);
  CHECK_THROWS(decide_valid_rg({}));
}

TEST_CASE("Magnus witnesses are genuine") {
  RgBudget b   = RgBudget::minimal();
  b.max_orders = 1024;
  b.degree_factor = 4;
  std::size_t invalid = 0;
  for (auto const& s : oracle::small_family()) {
    auto v = decide_valid_rg(s, b);
    if (v.kind != VerdictKind::invalid) {
      continue;
    }
    ++invalid;
    auto const& w = *v.witness;
    int const   want = w.sign == MagnusSign::positive ? 1 : -1;
    for (auto const& t : s) {
      CHECK(oracle_sign(oracle::magnus(t, w.degree, w.order.eps), w.order.perm)
            == want);
    }
  }
  CHECK(invalid > 0);
}

TEST_CASE("o-group validity refines l-group validity") {
  RgBudget b      = RgBudget::minimal();
  b.max_orders    = 1024;
  b.degree_factor = 4;
  for (auto const& s : oracle::small_family()) {
    if (decide_valid_lg(s).valid) {
      INFO(to_string(s));
      CHECK(decide_valid_rg(s, b).kind != VerdictKind::invalid);
    }
  }
}

TEST_CASE("abelian order extension") {
  auto a = decide_abelian_order_extension({{1, 0}, {0, 1}}, 2);
  REQUIRE(a.extends());
  auto b = decide_abelian_order_extension({{1, 1}, {-1, 0}, {0, -1}}, 2);
  REQUIRE_FALSE(b.extends());
  CHECK(*b.combination == std::vector<long>{1, 1, 1});
  auto c = decide_abelian_order_extension({{3}, {-5}}, 1);
  REQUIRE_FALSE(c.extends());
  CHECK(lattice_combination({{3}, {-5}}, *c.combination) == LatticePoint{0});
  CHECK_THROWS(decide_abelian_order_extension({{0, 0}}, 2));
  CHECK_THROWS(decide_abelian_order_extension({{1}}, 2));
  CHECK_THROWS(decide_abelian_order_extension({{1}}, 0));
}

TEST_CASE("abelian decision is exhaustive and correct on the 3-box") {
  std::vector<LatticePoint> pool;
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      if (a != 0 || b != 0) {
        pool.push_back({a, b});
      }
    }
  }
  for (auto const& s : oracle::subsets(pool, 3)) {
    bool brute = false;
    for (long p = -7; p <= 7 && !brute; ++p) {
      for (long q = -7; q <= 7 && !brute; ++q) {
        brute = std::all_of(s.begin(), s.end(), [&](LatticePoint const& v) {
          return p * v[0] + q * v[1] > 0;
        });
      }
    }
    auto d = decide_abelian_order_extension(s, 2);
    REQUIRE(d.extends() == brute);
    if (d.extends()) {
      for (auto const& v : s) {
        CHECK((*d.functional)[0] * v[0] + (*d.functional)[1] * v[1] > 0);
      }
    } else {
      auto const& l = *d.combination;
      CHECK(std::all_of(l.begin(), l.end(), [](long x) { return x >= 0; }));
      CHECK(std::any_of(l.begin(), l.end(), [](long x) { return x > 0; }));
      CHECK(lattice_combination(s, l) == LatticePoint{0, 0});
    }
  }
}

TEST_CASE("decide_valid_abelian") {
  FreeAbelianGroup z1(1);
  auto v = decide_valid_abelian(S("{x*x*x, x^-1*x^-1*x^-1*x^-1*x^-1}"), 1);
  REQUIRE(v.kind == VerdictKind::valid);
  CHECK(check(*v.certificate, System::orders, z1).accepted);
  CHECK(check(*v.certificate, System::right_orders, z1).accepted);

  auto i = decide_valid_abelian(S("{x, y*x^-1*y^-1}"), 2);
  REQUIRE(i.kind == VerdictKind::valid);
  CHECK(check(*i.certificate, System::orders, FreeAbelianGroup(2)).accepted);
  CHECK(decide_valid_abelian(S("{x, y^-1*x}"), 2).kind == VerdictKind::invalid);
  auto c = decide_valid_abelian(S("{x*y*x^-1*y^-1}"), 2);
  CHECK(c.kind == VerdictKind::valid);
  CHECK(c.method == "leaf");
  auto x = decide_valid_abelian(S("{x, y}"), 2);
  REQUIRE(x.kind == VerdictKind::invalid);
  CHECK((*x.witness)[0] > 0);
  CHECK((*x.witness)[1] > 0);
}

TEST_CASE("the Klein bottle group is not bi-orderable") {
  auto t = decide_klein_biorderable();
  CHECK(t.conclusion == WordSet{W("y")});
  CHECK(check(t, System::orders, KleinGroup{}).accepted);
  CHECK_FALSE(check(t, System::right_orders, KleinGroup{}).accepted);
  CHECK_FALSE(check(t, System::orders, FreeGroup(2)).accepted);

  auto j    = json::certificate(t, System::orders, std::string("klein"));
  auto back = json::certificate_from(nlohmann::json::parse(j.dump()));
  CHECK(back.tree == t);
  CHECK(back.system == System::orders);
  CHECK(back.group == "klein");
  CHECK(json::certificate(back.tree, back.system, back.group) == j);
}
