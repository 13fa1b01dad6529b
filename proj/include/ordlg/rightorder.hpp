// ordlg - right orders on groups and validity in lattice-ordered groups
//
// Complete deciders for LG |= e <= t_1 v ... v t_n over free groups:
//
//   * decide_valid_lg: for every sign choice on the quotients of initial
//     subterms, the strict inequalities a_u < a_v (u v^-1 positive) must be
//     cyclic.  An acyclic choice yields order-preserving piecewise-linear
//     maps of the line that refute the inequation.
//   * clay_smith: search for an l-truncated right order extending the set.
//
// Valid for decide_valid_lg and NotExtendable for clay_smith coincide.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "derivation.hpp"
#include "groups.hpp"
#include "terms.hpp"
#include "words.hpp"

namespace ordlg {

  using Rational = boost::multiprecision::cpp_rational;

  ////////////////////////////////////////////////////////////////////////
  // Difference systems
  ////////////////////////////////////////////////////////////////////////

  struct DifferenceSystem {
    std::vector<Word>            nodes;  // is(J), shortlex
    std::vector<DifferenceClass> classes;
    JoinSet                      base;
    bool                         immediately_cyclic = false;

    [[nodiscard]] std::size_t node_index(Word const& w) const {
      auto it = std::lower_bound(nodes.begin(), nodes.end(), w);
      if (it == nodes.end() || *it != w) {
        throw std::out_of_range("not a node: " + to_string(w));
      }
      return static_cast<std::size_t>(it - nodes.begin());
    }
  };

  // One sign per class, aligned with DifferenceSystem::classes.
  using SignAssignment = std::vector<int>;

  inline DifferenceSystem build_difference_system(JoinSet const& j) {
    DifferenceSystem sys;
    sys.base          = j;
    WordSet nodes     = initial_subterms(j);
    sys.nodes         = std::vector<Word>(nodes.begin(), nodes.end());
    sys.classes       = difference_classes(j);
    for (auto& cls : sys.classes) {
      bool pos = j.count(cls.rep) != 0;
      bool neg = j.count(cls.rep.inverse()) != 0;
      if (pos && neg) {
        sys.immediately_cyclic = true;
      }
      if (pos) {
        cls.forced_sign = 1;
      } else if (neg) {
        cls.forced_sign = -1;
      }
    }
    return sys;
  }

  struct ConsistencyResult {
    bool acyclic = false;
    // ascending node order when acyclic; a directed cycle u_1 -> ... -> u_k
    // (a_{u_i} < a_{u_{i+1}}, closing back to u_1) otherwise
    std::vector<Word> order;
    std::vector<Word> cycle;
  };

  namespace detail {
    using Digraph = std::vector<std::vector<char>>;

    // Edge u -> v means a_u < a_v.  A pair (u, v) of a class with rep d has
    // u v^-1 = d, so the edge points u -> v when d is positive and v -> u
    // when d^-1 is.  Members of the base are positive regardless of delta.
    inline void add_class_edges(Digraph& g, DifferenceSystem const& sys,
                                std::size_t ci, int sign) {
      auto const& cls = sys.classes[ci];
      bool fwd = sign > 0 || cls.forced_sign == 1;
      bool bwd = sign < 0 || cls.forced_sign == -1;
      for (auto const& [u, v] : cls.oriented_pairs) {
        auto iu = sys.node_index(u);
        auto iv = sys.node_index(v);
        if (fwd) {
          g[iu][iv] = 1;
        }
        if (bwd) {
          g[iv][iu] = 1;
        }
      }
    }

    inline bool reaches(Digraph const& g, std::size_t from, std::size_t to) {
      std::vector<char>        seen(g.size(), 0);
      std::vector<std::size_t> stack{from};
      seen[from] = 1;
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        if (u == to) {
          return true;
        }
        for (std::size_t v = 0; v < g.size(); ++v) {
          if (g[u][v] && !seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
          }
        }
      }
      return false;
    }

    inline bool has_cycle(Digraph const& g) {
      std::size_t const  n = g.size();
      std::vector<int>   indeg(n, 0);
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          indeg[v] += g[u][v];
        }
      }
      std::vector<std::size_t> ready;
      for (std::size_t v = 0; v < n; ++v) {
        if (indeg[v] == 0) {
          ready.push_back(v);
        }
      }
      std::size_t seen = 0;
      while (!ready.empty()) {
        auto u = ready.back();
        ready.pop_back();
        ++seen;
        for (std::size_t v = 0; v < n; ++v) {
          if (g[u][v] && --indeg[v] == 0) {
            ready.push_back(v);
          }
        }
      }
      return seen != n;
    }

    // Kahn's algorithm, smallest index first; nullopt if cyclic.
    inline std::optional<std::vector<std::size_t>>
    topological_order(Digraph const& g) {
      std::size_t const n = g.size();
      std::vector<int>  indeg(n, 0);
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          indeg[v] += g[u][v];
        }
      }
      std::vector<std::size_t> order;
      std::vector<char>        done(n, 0);
      while (order.size() < n) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
          if (!done[v] && indeg[v] == 0) {
            pick = v;
            break;
          }
        }
        if (pick == n) {
          return std::nullopt;
        }
        done[pick] = 1;
        order.push_back(pick);
        for (std::size_t v = 0; v < n; ++v) {
          if (g[pick][v]) {
            --indeg[v];
          }
        }
      }
      return order;
    }

    inline std::vector<std::size_t> find_cycle(Digraph const& g) {
      std::size_t const n = g.size();
      std::vector<int>  colour(n, 0);
      std::vector<std::size_t> stack;
      std::vector<std::size_t> cycle;
      auto dfs = [&](auto&& self, std::size_t u) -> bool {
        colour[u] = 1;
        stack.push_back(u);
        for (std::size_t v = 0; v < n; ++v) {
          if (!g[u][v]) {
            continue;
          }
          if (colour[v] == 1) {
            auto it = std::find(stack.begin(), stack.end(), v);
            cycle.assign(it, stack.end());
            return true;
          }
          if (colour[v] == 0 && self(self, v)) {
            return true;
          }
        }
        stack.pop_back();
        colour[u] = 2;
        return false;
      };
      for (std::size_t u = 0; u < n; ++u) {
        if (colour[u] == 0 && dfs(dfs, u)) {
          break;
        }
      }
      return cycle;
    }

    inline Digraph build_digraph(DifferenceSystem const& sys,
                                 SignAssignment const&   delta) {
      Digraph g(sys.nodes.size(), std::vector<char>(sys.nodes.size(), 0));
      for (std::size_t i = 0; i < sys.classes.size(); ++i) {
        add_class_edges(g, sys, i, delta.at(i));
      }
      return g;
    }
  }  // namespace detail

  inline ConsistencyResult consistent(DifferenceSystem const& sys,
                                      SignAssignment const&   delta) {
    if (delta.size() != sys.classes.size()) {
      throw std::invalid_argument("sign assignment does not cover the classes");
    }
    auto              g = detail::build_digraph(sys, delta);
    ConsistencyResult r;
    if (auto order = detail::topological_order(g)) {
      r.acyclic = true;
      for (auto i : *order) {
        r.order.push_back(sys.nodes[i]);
      }
    } else {
      for (auto i : detail::find_cycle(g)) {
        r.cycle.push_back(sys.nodes[i]);
      }
    }
    return r;
  }

  // An acyclic sign choice with its ascending order of initial subterms.
  struct SignWitness {
    std::vector<std::pair<Word, int>> classes;
    std::vector<Word>                 order;
  };

  struct LgDecision {
    bool                       valid = false;
    std::size_t                assignments_checked = 0;
    std::optional<SignWitness> witness;
  };

  // Returns the first acyclic assignment in the order: classes by canonical
  // representative, +1 before -1.  With pruning, partial assignments that
  // are already cyclic are cut; the outcome equals exhaustive enumeration.
  inline LgDecision decide_valid_lg(JoinSet const& j, bool prune = true) {
    if (j.empty()) {
      throw std::invalid_argument("decide_valid_lg: empty join set");
    }
    LgDecision out;
    if (j.count(Word::identity()) != 0) {
      out.valid = true;
      return out;
    }
    auto const sys = build_difference_system(j);
    if (sys.immediately_cyclic) {
      out.valid = true;
      return out;
    }
    std::size_t const m = sys.classes.size();
    std::size_t const n = sys.nodes.size();
    std::vector<std::size_t> free_classes;
    for (std::size_t i = 0; i < m; ++i) {
      if (!sys.classes[i].forced_sign) {
        free_classes.push_back(i);
      }
    }
    SignAssignment delta(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (sys.classes[i].forced_sign) {
        delta[i] = *sys.classes[i].forced_sign;
      }
    }
    auto finish = [&](SignAssignment const& d) {
      auto r = consistent(sys, d);
      if (!r.acyclic) {
        return false;
      }
      SignWitness w;
      for (std::size_t i = 0; i < m; ++i) {
        w.classes.emplace_back(sys.classes[i].rep, d[i]);
      }
      w.order     = r.order;
      out.witness = std::move(w);
      return true;
    };

    if (!prune) {
      std::size_t const f = free_classes.size();
      if (f >= 63) {
        throw std::length_error("too many classes for exhaustive enumeration");
      }
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f); ++bits) {
        for (std::size_t i = 0; i < f; ++i) {
          // first free class is the most significant choice
          bool minus = ((bits >> (f - 1 - i)) & 1) != 0;
          delta[free_classes[i]] = minus ? -1 : 1;
        }
        ++out.assignments_checked;
        if (finish(delta)) {
          return out;
        }
      }
      out.valid = true;
      return out;
    }

    detail::Digraph g(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < m; ++i) {
      if (sys.classes[i].forced_sign) {
        detail::add_class_edges(g, sys, i, 0);
      }
    }
    if (detail::has_cycle(g)) {
      out.valid = true;
      return out;
    }
    // Depth-first over free classes; each level copies the digraph.
    auto rec = [&](auto&& self, std::size_t level,
                   detail::Digraph const& cur) -> bool {
      ++out.assignments_checked;
      if (level == free_classes.size()) {
        return finish(delta);
      }
      std::size_t const ci = free_classes[level];
      for (int sign : {1, -1}) {
        delta[ci]              = sign;
        detail::Digraph next   = cur;
        bool            cyclic = false;
        for (auto const& [u, v] : sys.classes[ci].oriented_pairs) {
          auto iu = sys.node_index(u);
          auto iv = sys.node_index(v);
          auto [from, to] = sign > 0 ? std::pair{iu, iv} : std::pair{iv, iu};
          next[from][to] = 1;
          if (detail::reaches(next, to, from)) {
            cyclic = true;
            break;
          }
        }
        if (!cyclic && self(self, level + 1, next)) {
          return true;
        }
      }
      delta[ci] = 0;
      return false;
    };
    out.valid = !rec(rec, 0, g);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Truncated right orders (Clay and Smith)
  ////////////////////////////////////////////////////////////////////////

  struct TruncatedRightOrder {
    Rank        rank{1};
    std::size_t l = 1;
    WordSet     positives;
  };

  // S*: least superset of S closed under products of length <= l.
  inline WordSet product_closure_in_ball(WordSet const& s, std::size_t l) {
    for (auto const& w : s) {
      if (w.length() > l) {
        throw std::invalid_argument("product_closure_in_ball: "
                                    + to_string(w) + " longer than "
                                    + std::to_string(l));
      }
    }
    FreeGroup group(std::max(1, max_gen(s)));
    return semigroup_closure_in_ball(s, l, group).elements;
  }

  namespace detail {
    // Adds t to the product-closed set p and re-closes; false if e appears.
    inline bool close_with(WordSet& p, Word const& t, std::size_t l) {
      std::vector<Word> queue{t};
      if (!p.insert(t).second) {
        return !t.is_identity();
      }
      if (t.is_identity()) {
        return false;
      }
      std::size_t head = 0;
      while (head < queue.size()) {
        Word const        w = queue[head++];
        std::vector<Word> found;
        for (auto const& v : p) {
          for (Word prod : {w * v, v * w}) {
            if (prod.length() <= l && p.count(prod) == 0) {
              found.push_back(prod);
            }
          }
        }
        for (auto& f : found) {
          if (p.insert(f).second) {
            if (f.is_identity()) {
              return false;
            }
            queue.push_back(std::move(f));
          }
        }
      }
      return true;
    }
  }  // namespace detail

  struct ClaySmithResult {
    std::optional<TruncatedRightOrder> order;
    std::size_t                        branches = 0;

    [[nodiscard]] bool extendable() const noexcept {
      return order.has_value();
    }
  };

  // With l the maximal length in S (1 for the empty set), close S inside
  // the l-ball and branch on t / t^-1 for the undecided t of length < l,
  // shortest first.
  inline ClaySmithResult clay_smith(WordSet const& s, Rank rank) {
    if (max_gen(s) > rank.value()) {
      throw std::invalid_argument("clay_smith: word outside rank");
    }
    std::size_t const l = std::max<std::size_t>(1, max_length(s));
    ClaySmithResult   out;
    WordSet           start;
    for (auto const& w : s) {
      if (!detail::close_with(start, w, l)) {
        return out;
      }
    }
    WordSet const     small = ball(rank, l - 1);
    std::vector<Word> undecided_order;
    for (auto const& t : small) {
      if (!t.is_identity()) {
        undecided_order.push_back(t);
      }
    }
    auto rec = [&](auto&& self, WordSet const& p) -> std::optional<WordSet> {
      ++out.branches;
      for (auto const& t : undecided_order) {
        if (p.count(t) != 0 || p.count(t.inverse()) != 0) {
          continue;
        }
        for (Word const& choice : {t, t.inverse()}) {
          WordSet next = p;
          if (detail::close_with(next, choice, l)) {
            if (auto r = self(self, next)) {
              return r;
            }
          }
        }
        return std::nullopt;
      }
      return p;
    };
    if (auto p = rec(rec, start)) {
      out.order = TruncatedRightOrder{rank, l, std::move(*p)};
    }
    return out;
  }

  inline ClaySmithResult clay_smith(WordSet const& s) {
    return clay_smith(s, rank_of(s));
  }

  // Empty string when every invariant of an l-truncated right order holds.
  inline std::string validate(TruncatedRightOrder const& o) {
    auto const& p = o.positives;
    if (p.count(Word::identity()) != 0) {
      return "contains e";
    }
    for (auto const& a : p) {
      if (a.length() > o.l || a.max_gen() > o.rank.value()) {
        return to_string(a) + " outside the ball";
      }
    }
    for (auto const& a : p) {
      for (auto const& b : p) {
        Word ab = a * b;
        if (ab.length() <= o.l && p.count(ab) == 0) {
          return "not product closed: " + to_string(a) + " * " + to_string(b);
        }
      }
    }
    for (auto const& t : ball(o.rank, o.l - 1)) {
      if (!t.is_identity() && p.count(t) == 0 && p.count(t.inverse()) == 0) {
        return "undecided: " + to_string(t);
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Piecewise-linear automorphisms of the line
  ////////////////////////////////////////////////////////////////////////

  // Continuous, piecewise linear through the breakpoints, slope 1 outside
  // their hull.  No breakpoints means the identity.
  class PLAutomorphism {
   public:
    PLAutomorphism() = default;

    explicit PLAutomorphism(std::vector<std::pair<Rational, Rational>> pts)
        : _pts(std::move(pts)) {
      std::sort(_pts.begin(), _pts.end());
      for (std::size_t i = 1; i < _pts.size(); ++i) {
        if (!(_pts[i - 1].first < _pts[i].first)
            || !(_pts[i - 1].second < _pts[i].second)) {
          throw std::logic_error("breakpoints are not strictly increasing");
        }
      }
    }

    [[nodiscard]] std::vector<std::pair<Rational, Rational>> const&
    breakpoints() const noexcept {
      return _pts;
    }

    [[nodiscard]] Rational apply(Rational const& p) const {
      return eval(_pts, p, false);
    }

    [[nodiscard]] Rational apply_inverse(Rational const& p) const {
      return eval(_pts, p, true);
    }

    [[nodiscard]] PLAutomorphism inverse() const {
      std::vector<std::pair<Rational, Rational>> swapped;
      for (auto const& [a, b] : _pts) {
        swapped.emplace_back(b, a);
      }
      return PLAutomorphism(std::move(swapped));
    }

   private:
    static Rational eval(std::vector<std::pair<Rational, Rational>> const& pts,
                         Rational const& p, bool inverse) {
      if (pts.empty()) {
        return p;
      }
      auto in  = [&](std::size_t i) -> Rational const& {
        return inverse ? pts[i].second : pts[i].first;
      };
      auto out = [&](std::size_t i) -> Rational const& {
        return inverse ? pts[i].first : pts[i].second;
      };
      if (p <= in(0)) {
        return p - in(0) + out(0);
      }
      std::size_t const last = pts.size() - 1;
      if (p >= in(last)) {
        return p - in(last) + out(last);
      }
      std::size_t i = 0;
      while (!(p <= in(i + 1))) {
        ++i;
      }
      Rational const t = (p - in(i)) / (in(i + 1) - in(i));
      return out(i) + t * (out(i + 1) - out(i));
    }

    std::vector<std::pair<Rational, Rational>> _pts;
  };

  using PLMaps = std::map<int, PLAutomorphism>;

  // Letters act left to right: w = l_1 ... l_n maps p to l_n(...l_1(p)).
  inline Rational evaluate_pl(PLMaps const& autos, Word const& w,
                              Rational p) {
    for (Letter l : w.letters()) {
      auto it = autos.find(l.gen);
      if (it == autos.end()) {
        continue;
      }
      p = l.inverse ? it->second.apply_inverse(p) : it->second.apply(p);
    }
    return p;
  }

  // Ranks r_u = 0, 1, 2, ... along the witness order; each generator x
  // sends r_u to r_{ux} whenever u and ux are both initial subterms.
  // Throws std::logic_error if a partial map fails to be monotone, which a
  // genuine witness never produces.
  inline PLMaps counterexample_automorphisms(JoinSet const&     j,
                                             SignWitness const& witness,
                                             Rank               rank) {
    WordSet const nodes = initial_subterms(j);
    std::map<Word, long> r;
    for (std::size_t i = 0; i < witness.order.size(); ++i) {
      r[witness.order[i]] = static_cast<long>(i);
    }
    if (r.size() != nodes.size()) {
      throw std::logic_error("witness order does not cover is(J)");
    }
    for (auto const& t : j) {
      if (!(r.at(t) < r.at(Word::identity()))) {
        throw std::logic_error("witness order does not place "
                               + to_string(t) + " below e");
      }
    }
    PLMaps maps;
    for (int g = 1; g <= rank.value(); ++g) {
      std::vector<std::pair<Rational, Rational>> pts;
      for (auto const& u : nodes) {
        Word ux = u * Word{gen(g)};
        if (nodes.count(ux) != 0) {
          pts.emplace_back(Rational(r.at(u)), Rational(r.at(ux)));
        }
      }
      maps.emplace(g, PLAutomorphism(std::move(pts)));
    }
    return maps;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bifurcation
  ////////////////////////////////////////////////////////////////////////

  // The shortlex-least s in the max_len ball, outside T u T^-1, such that
  // both T u {s} and T u {s^-1} extend to right orders.
  inline std::optional<Word> find_bifurcation(WordSet const& t, Rank rank,
                                              std::size_t max_len) {
    if (!clay_smith(t, rank).extendable()) {
      throw std::invalid_argument("find_bifurcation: set does not extend");
    }
    for (auto const& s : ball(rank, max_len)) {
      if (s.is_identity() || t.count(s) != 0 || t.count(s.inverse()) != 0) {
        continue;
      }
      WordSet with = t;
      with.insert(s);
      WordSet with_inv = t;
      with_inv.insert(s.inverse());
      if (clay_smith(with, rank).extendable()
          && clay_smith(with_inv, rank).extendable()) {
        return s;
      }
    }
    return std::nullopt;
  }

}  // namespace ordlg
