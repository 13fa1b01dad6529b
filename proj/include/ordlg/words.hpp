// ordlg - right orders on groups and validity in lattice-ordered groups
//
// Freely reduced words over x_1..x_k, initial subterms, difference classes
// and ball enumeration.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordlg {

  // Number of free generators.
  class Rank {
   public:
    explicit Rank(int k) : _k(k) {
      if (k < 1) {
        throw std::invalid_argument("rank must be at least 1, found "
                                    + std::to_string(k));
      }
    }
    [[nodiscard]] int value() const noexcept {
      return _k;
    }
    friend bool operator==(Rank, Rank) = default;

   private:
    int _k;
  };

  // A generator x_i (i >= 1) or its inverse.
  struct Letter {
    int  gen     = 1;
    bool inverse = false;

    [[nodiscard]] Letter inverted() const noexcept {
      return Letter{gen, !inverse};
    }
    [[nodiscard]] bool cancels(Letter other) const noexcept {
      return gen == other.gen && inverse != other.inverse;
    }

    friend bool operator==(Letter, Letter) = default;
    // generator index first, then + before -
    friend std::strong_ordering operator<=>(Letter a, Letter b) {
      if (auto c = a.gen <=> b.gen; c != 0) {
        return c;
      }
      return a.inverse <=> b.inverse;
    }
  };

  inline Letter gen(int i) {
    return Letter{i, false};
  }
  inline Letter gen_inv(int i) {
    return Letter{i, true};
  }

  // A freely reduced word; the empty word is the identity e.  Ordered
  // length-lex (shortlex) by Letter order, which is the canonical order used
  // everywhere determinism matters.
  class Word {
   public:
    Word() = default;

    Word(std::initializer_list<Letter> letters)
        : Word(std::vector<Letter>(letters)) {}

    // Reduces the input.
    explicit Word(std::vector<Letter> const& letters) {
      _letters.reserve(letters.size());
      for (Letter l : letters) {
        push_reduce(l);
      }
    }

    static Word identity() {
      return Word();
    }

    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool is_identity() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] int max_gen() const noexcept {
      int m = 0;
      for (Letter l : _letters) {
        m = std::max(m, l.gen);
      }
      return m;
    }

    [[nodiscard]] Word prefix(std::size_t n) const {
      Word w;
      w._letters.assign(_letters.begin(),
                        _letters.begin() + static_cast<std::ptrdiff_t>(n));
      return w;
    }

    friend Word operator*(Word const& a, Word const& b) {
      Word r = a;
      for (Letter l : b._letters) {
        r.push_reduce(l);
      }
      return r;
    }

    [[nodiscard]] Word inverse() const {
      Word r;
      r._letters.reserve(_letters.size());
      for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
        r._letters.push_back(it->inverted());
      }
      return r;
    }

    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const& a, Word const& b) {
      if (auto c = a.length() <=> b.length(); c != 0) {
        return c;
      }
      return std::lexicographical_compare_three_way(a._letters.begin(),
                                                    a._letters.end(),
                                                    b._letters.begin(),
                                                    b._letters.end());
    }

   private:
    void push_reduce(Letter l) {
      if (!_letters.empty() && _letters.back().cancels(l)) {
        _letters.pop_back();
      } else {
        _letters.push_back(l);
      }
    }

    std::vector<Letter> _letters;
  };

  using WordSet = std::set<Word>;

  inline Word concat_reduce(Word const& a, Word const& b) {
    return a * b;
  }

  inline Word invert(Word const& a) {
    return a.inverse();
  }

  inline WordSet inverses(WordSet const& s) {
    WordSet r;
    for (auto const& w : s) {
      r.insert(w.inverse());
    }
    return r;
  }

  inline int max_gen(WordSet const& s) {
    int m = 0;
    for (auto const& w : s) {
      m = std::max(m, w.max_gen());
    }
    return m;
  }

  inline std::size_t max_length(WordSet const& s) {
    std::size_t m = 0;
    for (auto const& w : s) {
      m = std::max(m, w.length());
    }
    return m;
  }

  // Smallest rank that contains every generator of s (at least 1).
  inline Rank rank_of(WordSet const& s) {
    return Rank(std::max(1, max_gen(s)));
  }

  // is(S): all prefixes of all words in S, including e.
  inline WordSet initial_subterms(WordSet const& s) {
    WordSet r{Word::identity()};
    for (auto const& w : s) {
      for (std::size_t i = 1; i <= w.length(); ++i) {
        r.insert(w.prefix(i));
      }
    }
    return r;
  }

  // Canonical representative of {d, d^-1}: the shortlex-smaller one.
  inline Word canonical_rep(Word const& d) {
    Word di = d.inverse();
    return std::min(d, di);
  }

  // The quotients u v^-1 of distinct initial subterms, grouped up to
  // inversion.  Every pair is stored oriented as (u, v) with u v^-1 == rep.
  struct DifferenceClass {
    Word                             rep;
    std::vector<std::pair<Word, Word>> oriented_pairs;
    std::optional<int>               forced_sign;
  };

  inline std::vector<DifferenceClass> difference_classes(WordSet const& s) {
    WordSet const nodes = initial_subterms(s);
    std::vector<Word> const ordered(nodes.begin(), nodes.end());
    std::map<Word, DifferenceClass> by_rep;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      for (std::size_t j = i + 1; j < ordered.size(); ++j) {
        Word const& u   = ordered[i];
        Word const& v   = ordered[j];
        Word const  d   = u * v.inverse();
        Word const  rep = canonical_rep(d);
        auto& cls = by_rep[rep];
        cls.rep = rep;
        if (d == rep) {
          cls.oriented_pairs.emplace_back(u, v);
        } else {
          cls.oriented_pairs.emplace_back(v, u);
        }
      }
    }
    std::vector<DifferenceClass> result;
    result.reserve(by_rep.size());
    for (auto& [rep, cls] : by_rep) {
      result.push_back(std::move(cls));
    }
    return result;
  }

  // cis(S), i.e. all class representatives and their inverses.
  inline WordSet cis(WordSet const& s) {
    WordSet r;
    for (auto const& cls : difference_classes(s)) {
      r.insert(cls.rep);
      r.insert(cls.rep.inverse());
    }
    return r;
  }

  // All reduced words of length <= l over `rank` generators.
  inline WordSet ball(Rank rank, std::size_t l) {
    int const k = rank.value();
    std::vector<Letter> alphabet;
    for (int i = 1; i <= k; ++i) {
      alphabet.push_back(gen(i));
      alphabet.push_back(gen_inv(i));
    }
    WordSet           result{Word::identity()};
    std::vector<Word> frontier{Word::identity()};
    for (std::size_t len = 1; len <= l; ++len) {
      std::vector<Word> next;
      for (auto const& w : frontier) {
        for (Letter a : alphabet) {
          if (!w.is_identity() && w.letters().back().cancels(a)) {
            continue;
          }
          next.push_back(w * Word{a});
        }
      }
      result.insert(next.begin(), next.end());
      frontier = std::move(next);
    }
    return result;
  }

  // 1 + sum_{i=1..l} 2k (2k-1)^(i-1)
  inline std::uint64_t ball_size(Rank rank, std::size_t l) {
    std::uint64_t const k     = static_cast<std::uint64_t>(rank.value());
    std::uint64_t       total = 1;
    std::uint64_t       layer = 2 * k;
    for (std::size_t i = 1; i <= l; ++i) {
      total += layer;
      layer *= 2 * k - 1;
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text rendering: e, x, y, z, x4, x5, ... joined with '*', inverses as
  // ^-1.
  ////////////////////////////////////////////////////////////////////////

  inline std::string generator_name(int i) {
    switch (i) {
      case 1: return "x";
      case 2: return "y";
      case 3: return "z";
      default: return "x" + std::to_string(i);
    }
  }

  inline std::string to_string(Letter l) {
    return generator_name(l.gen) + (l.inverse ? "^-1" : "");
  }

  inline std::string to_string(Word const& w) {
    if (w.is_identity()) {
      return "e";
    }
    std::string out;
    for (Letter l : w.letters()) {
      if (!out.empty()) {
        out += '*';
      }
      out += to_string(l);
    }
    return out;
  }

  inline std::string to_string(WordSet const& s) {
    std::string out = "{";
    bool        first = true;
    for (auto const& w : s) {
      if (!first) {
        out += ", ";
      }
      first = false;
      out += to_string(w);
    }
    return out + "}";
  }

}  // namespace ordlg

template <>
struct std::hash<ordlg::Word> {
  std::size_t operator()(ordlg::Word const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto l : w.letters()) {
      h ^= static_cast<std::size_t>(l.gen * 2 + (l.inverse ? 1 : 0));
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
