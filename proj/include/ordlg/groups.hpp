// ordlg - right orders on groups and validity in lattice-ordered groups
//
// Group oracles.  Every oracle represents its elements by canonical words
// over its generators, so free-group words double as elements everywhere:
//
//   free:K   reduced words
//   zn:K     x_1^a_1 x_2^a_2 ... x_K^a_K
//   klein    x^m y^n in <x, y | x y x^-1 y>

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "words.hpp"

namespace ordlg {

  template <typename G>
  concept GroupOracle = requires(G const& g, Word const& w, std::size_t r) {
    { g.rank() } -> std::convertible_to<int>;
    { g.name() } -> std::convertible_to<std::string>;
    { g.canonicalize(w) } -> std::same_as<Word>;
    { g.multiply(w, w) } -> std::same_as<Word>;
    { g.invert(w) } -> std::same_as<Word>;
    { g.is_identity(w) } -> std::convertible_to<bool>;
    { g.in_ball(w, r) } -> std::convertible_to<bool>;
    { g.enumerate_ball(r) } -> std::same_as<WordSet>;
  };

  namespace detail {
    // Shared arithmetic in terms of canonicalize(); the ball is measured by
    // the length of the canonical word.
    template <typename Derived>
    class OracleBase {
     public:
      [[nodiscard]] Word multiply(Word const& a, Word const& b) const {
        return self().canonicalize(a * b);
      }
      [[nodiscard]] Word invert(Word const& a) const {
        return self().canonicalize(a.inverse());
      }
      [[nodiscard]] bool is_identity(Word const& a) const {
        return self().canonicalize(a).is_identity();
      }
      [[nodiscard]] bool is_canonical(Word const& a) const {
        return self().canonicalize(a) == a;
      }
      [[nodiscard]] bool in_ball(Word const& a, std::size_t radius) const {
        return self().canonicalize(a).length() <= radius;
      }
      [[nodiscard]] WordSet canonical_set(WordSet const& s) const {
        WordSet r;
        for (auto const& w : s) {
          r.insert(self().canonicalize(w));
        }
        return r;
      }

     private:
      Derived const& self() const {
        return static_cast<Derived const&>(*this);
      }
    };
  }  // namespace detail

  class FreeGroup : public detail::OracleBase<FreeGroup> {
   public:
    explicit FreeGroup(int k) : _rank(k) {}
    [[nodiscard]] int rank() const noexcept {
      return _rank.value();
    }
    [[nodiscard]] std::string name() const {
      return "free:" + std::to_string(rank());
    }
    [[nodiscard]] Word canonicalize(Word const& w) const {
      return w;
    }
    [[nodiscard]] WordSet enumerate_ball(std::size_t radius) const {
      return ball(_rank, radius);
    }

   private:
    Rank _rank;
  };

  // Element of Z^k in additive notation.
  using LatticePoint = std::vector<long>;

  class FreeAbelianGroup : public detail::OracleBase<FreeAbelianGroup> {
   public:
    explicit FreeAbelianGroup(int k) : _rank(k) {}
    [[nodiscard]] int rank() const noexcept {
      return _rank.value();
    }
    [[nodiscard]] std::string name() const {
      return "zn:" + std::to_string(rank());
    }

    [[nodiscard]] LatticePoint point(Word const& w) const {
      LatticePoint p(static_cast<std::size_t>(rank()), 0);
      for (Letter l : w.letters()) {
        if (l.gen > rank()) {
          throw std::invalid_argument("generator " + generator_name(l.gen)
                                      + " outside " + name());
        }
        p[static_cast<std::size_t>(l.gen - 1)] += l.inverse ? -1 : 1;
      }
      return p;
    }

    [[nodiscard]] Word word(LatticePoint const& p) const {
      std::vector<Letter> letters;
      for (std::size_t i = 0; i < p.size(); ++i) {
        Letter l{static_cast<int>(i + 1), p[i] < 0};
        for (long j = 0; j < std::labs(p[i]); ++j) {
          letters.push_back(l);
        }
      }
      return Word(letters);
    }

    [[nodiscard]] Word canonicalize(Word const& w) const {
      return word(point(w));
    }

    [[nodiscard]] WordSet enumerate_ball(std::size_t radius) const {
      WordSet      out;
      LatticePoint p(static_cast<std::size_t>(rank()), 0);
      enumerate(p, 0, static_cast<long>(radius), out);
      return out;
    }

   private:
    void enumerate(LatticePoint& p, std::size_t i, long budget,
                   WordSet& out) const {
      if (i == p.size()) {
        out.insert(word(p));
        return;
      }
      for (long v = -budget; v <= budget; ++v) {
        p[i] = v;
        enumerate(p, i + 1, budget - std::labs(v), out);
      }
      p[i] = 0;
    }

    Rank _rank;
  };

  // x^m y^n, with (x^a y^b)(x^c y^d) = x^(a+c) y^((-1)^c b + d).
  struct KleinElement {
    long m = 0;
    long n = 0;

    friend bool operator==(KleinElement, KleinElement) = default;

    friend KleinElement operator*(KleinElement a, KleinElement b) {
      long const sign = (b.m % 2 == 0) ? 1 : -1;
      return {a.m + b.m, sign * a.n + b.n};
    }
  };

  class KleinGroup : public detail::OracleBase<KleinGroup> {
   public:
    [[nodiscard]] int rank() const noexcept {
      return 2;
    }
    [[nodiscard]] std::string name() const {
      return "klein";
    }

    [[nodiscard]] KleinElement element(Word const& w) const {
      KleinElement g;
      for (Letter l : w.letters()) {
        if (l.gen == 1) {
          g = g * KleinElement{l.inverse ? -1 : 1, 0};
        } else if (l.gen == 2) {
          g.n += l.inverse ? -1 : 1;
        } else {
          throw std::invalid_argument("generator " + generator_name(l.gen)
                                      + " outside klein");
        }
      }
      return g;
    }

    [[nodiscard]] Word word(KleinElement g) const {
      std::vector<Letter> letters;
      for (long i = 0; i < std::labs(g.m); ++i) {
        letters.push_back(Letter{1, g.m < 0});
      }
      for (long i = 0; i < std::labs(g.n); ++i) {
        letters.push_back(Letter{2, g.n < 0});
      }
      return Word(letters);
    }

    [[nodiscard]] Word canonicalize(Word const& w) const {
      return word(element(w));
    }

    [[nodiscard]] WordSet enumerate_ball(std::size_t radius) const {
      WordSet    out;
      long const r = static_cast<long>(radius);
      for (long m = -r; m <= r; ++m) {
        long const rest = r - std::labs(m);
        for (long n = -rest; n <= rest; ++n) {
          out.insert(word({m, n}));
        }
      }
      return out;
    }
  };

  inline KleinElement canonicalize_klein(Word const& w) {
    return KleinGroup().element(w);
  }

  enum class OrderSign { negative, zero, positive };

  // The four right orders of the Klein bottle group, variants 1..4 standing
  // for (eps_x, eps_y) = (+,+), (+,-), (-,+), (-,-).  g is positive iff
  // eps_x m > 0, or m = 0 and eps_y n > 0.
  inline std::pair<int, int> klein_variant_signs(int variant) {
    if (variant < 1 || variant > 4) {
      throw std::invalid_argument("klein order variant must be 1..4");
    }
    int const v = variant - 1;
    return {(v & 2) ? -1 : 1, (v & 1) ? -1 : 1};
  }

  inline OrderSign klein_right_order_sign(KleinElement g, int variant) {
    auto [ex, ey] = klein_variant_signs(variant);
    long const key = g.m != 0 ? ex * g.m : ey * g.n;
    if (key > 0) {
      return OrderSign::positive;
    }
    return key < 0 ? OrderSign::negative : OrderSign::zero;
  }

  using AnyGroup = std::variant<FreeGroup, FreeAbelianGroup, KleinGroup>;

  // "free:K", "zn:K" or "klein".
  inline AnyGroup parse_group_selector(std::string const& s) {
    if (s == "klein") {
      return KleinGroup();
    }
    auto colon = s.find(':');
    if (colon != std::string::npos) {
      std::string kind = s.substr(0, colon);
      std::string num  = s.substr(colon + 1);
      if (!num.empty()
          && num.find_first_not_of("0123456789") == std::string::npos
          && num.size() < 6) {
        int k = std::stoi(num);
        if (k >= 1) {
          if (kind == "free") {
            return FreeGroup(k);
          }
          if (kind == "zn") {
            return FreeAbelianGroup(k);
          }
        }
      }
    }
    throw std::invalid_argument("unknown group selector '" + s
                                + "' (expected free:K, zn:K or klein)");
  }

  inline std::string group_name(AnyGroup const& g) {
    return std::visit([](auto const& o) { return o.name(); }, g);
  }

  ////////////////////////////////////////////////////////////////////////
  // Closures inside a ball
  ////////////////////////////////////////////////////////////////////////

  // How an element entered a closure: as a generator, as a product a*b, or
  // as a conjugate g a g^-1.
  struct Provenance {
    enum class Kind { given, product, conjugate } kind = Kind::given;
    Word left;
    Word right;
  };

  struct Closure {
    WordSet                    elements;
    std::map<Word, Provenance> provenance;
    bool                       contains_identity = false;

    [[nodiscard]] bool contains(Word const& w) const {
      return elements.count(w) != 0;
    }
  };

  namespace detail {
    template <GroupOracle G>
    bool closure_add(Closure& c, std::vector<Word>& queue, Word const& w,
                     Provenance p) {
      if (!c.elements.insert(w).second) {
        return false;
      }
      c.provenance.emplace(w, std::move(p));
      queue.push_back(w);
      if (w.is_identity()) {
        c.contains_identity = true;
      }
      return true;
    }

    template <GroupOracle G>
    Closure closure_impl(WordSet const& s, std::size_t radius, G const& group,
                         WordSet const* conjugators, bool stop_at_identity) {
      Closure           c;
      std::vector<Word> queue;
      for (auto const& w : s) {
        closure_add<G>(c, queue, group.canonicalize(w), Provenance{});
      }
      // Each element is combined with everything present when it is
      // dequeued, and later arrivals combine with it in turn.
      std::vector<Word> done;
      std::size_t       head = 0;
      auto stop = [&] { return stop_at_identity && c.contains_identity; };
      while (head < queue.size() && !stop()) {
        Word const w = queue[head++];
        done.push_back(w);
        for (std::size_t i = 0; i < done.size() && !stop(); ++i) {
          Word const& v = done[i];
          for (auto const& [a, b] : {std::pair{w, v}, std::pair{v, w}}) {
            Word p = group.multiply(a, b);
            if (group.in_ball(p, radius)) {
              closure_add<G>(c, queue, p,
                             Provenance{Provenance::Kind::product, a, b});
            }
          }
        }
        if (conjugators != nullptr) {
          for (auto const& g : *conjugators) {
            Word p = group.multiply(group.multiply(g, w), group.invert(g));
            if (group.in_ball(p, radius)) {
              closure_add<G>(c, queue, p,
                             Provenance{Provenance::Kind::conjugate, g, w});
            }
          }
        }
      }
      return c;
    }
  }  // namespace detail

  // Least superset of S closed under products that stay in the ball.  With
  // stop_at_identity the fixpoint is abandoned as soon as e appears.
  template <GroupOracle G>
  Closure semigroup_closure_in_ball(WordSet const& s, std::size_t radius,
                                    G const& group,
                                    bool stop_at_identity = false) {
    return detail::closure_impl(s, radius, group, nullptr, stop_at_identity);
  }

  // As above, additionally closed under conjugation by the elements of the
  // conjugator ball.
  template <GroupOracle G>
  Closure normal_closure_in_ball(WordSet const& s, std::size_t radius,
                                 std::size_t conjugator_radius,
                                 G const& group,
                                 bool stop_at_identity = false) {
    WordSet conj = group.enumerate_ball(conjugator_radius);
    return detail::closure_impl(s, radius, group, &conj, stop_at_identity);
  }

  // Factors of S whose product is w, following semigroup provenance.
  inline std::vector<Word> product_witness(Closure const& c, Word const& w) {
    std::vector<Word> out;
    std::vector<Word> stack{w};
    while (!stack.empty()) {
      Word x = stack.back();
      stack.pop_back();
      auto const& p = c.provenance.at(x);
      switch (p.kind) {
        case Provenance::Kind::given: out.push_back(x); break;
        case Provenance::Kind::product:
          stack.push_back(p.right);
          stack.push_back(p.left);
          break;
        case Provenance::Kind::conjugate:
          throw std::logic_error("product_witness: conjugate provenance");
      }
    }
    return out;
  }

}  // namespace ordlg
