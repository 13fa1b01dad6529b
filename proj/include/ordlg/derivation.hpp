// ordlg - right orders on groups and validity in lattice-ordered groups
//
// Derivation trees witnessing that a finite subset of a group can not be
// extended to a right order (S-system) or to an order (D-system), a checker
// that verifies every node by oracle arithmetic, and a bounded backward
// proof search.
//
// Rules, reading a node's conclusion C:
//   leaf      a and a^-1 both lie in C
//   closure   a sequence of elements of C multiplies to the identity
//   product   C = T u {ab}; children conclude T u {a} and T u {b}
//   exchange  C = T u {ab}; the child concludes T u {ba} (D-system only)
// For product and exchange T may be C \ {ab} or C itself.

#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groups.hpp"
#include "words.hpp"

namespace ordlg {

  enum class System { right_orders, orders };

  inline std::string to_string(System s) {
    return s == System::right_orders ? "S" : "D";
  }

  enum class Rule { leaf, closure, product, exchange };

  inline std::string to_string(Rule r) {
    switch (r) {
      case Rule::leaf: return "leaf";
      case Rule::closure: return "closure";
      case Rule::product: return "product";
      case Rule::exchange: return "exchange";
    }
    return {};
  }

  struct DerivationTree {
    WordSet conclusion;
    Rule    rule = Rule::leaf;
    // leaf: a.  product/exchange: c = a b.
    Word a;
    Word b;
    Word c;
    // closure: factors in order
    std::vector<Word>           sequence;
    std::vector<DerivationTree> children;

    static DerivationTree leaf(WordSet conclusion, Word a) {
      DerivationTree t;
      t.conclusion = std::move(conclusion);
      t.rule       = Rule::leaf;
      t.a          = std::move(a);
      return t;
    }

    static DerivationTree closure(WordSet conclusion, std::vector<Word> seq) {
      DerivationTree t;
      t.conclusion = std::move(conclusion);
      t.rule       = Rule::closure;
      t.sequence   = std::move(seq);
      return t;
    }

    static DerivationTree product(WordSet conclusion, Word c, Word a, Word b,
                                  DerivationTree left, DerivationTree right) {
      DerivationTree t;
      t.conclusion = std::move(conclusion);
      t.rule       = Rule::product;
      t.a          = std::move(a);
      t.b          = std::move(b);
      t.c          = std::move(c);
      t.children.push_back(std::move(left));
      t.children.push_back(std::move(right));
      return t;
    }

    static DerivationTree exchange(WordSet conclusion, Word c, Word a, Word b,
                                   DerivationTree child) {
      DerivationTree t;
      t.conclusion = std::move(conclusion);
      t.rule       = Rule::exchange;
      t.a          = std::move(a);
      t.b          = std::move(b);
      t.c          = std::move(c);
      t.children.push_back(std::move(child));
      return t;
    }

    // Stratification index: leaves are 0.
    [[nodiscard]] std::size_t depth() const {
      std::size_t d = 0;
      for (auto const& ch : children) {
        d = std::max(d, ch.depth() + 1);
      }
      return d;
    }

    [[nodiscard]] std::size_t size() const {
      std::size_t n = 1;
      for (auto const& ch : children) {
        n += ch.size();
      }
      return n;
    }

    [[nodiscard]] bool uses_exchange() const {
      if (rule == Rule::exchange) {
        return true;
      }
      for (auto const& ch : children) {
        if (ch.uses_exchange()) {
          return true;
        }
      }
      return false;
    }

    friend bool operator==(DerivationTree const&, DerivationTree const&)
        = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Checker
  ////////////////////////////////////////////////////////////////////////

  struct CheckResult {
    bool accepted = true;
    // child indices from the root to the offending node
    std::vector<std::size_t> path;
    std::string              reason;

    explicit operator bool() const noexcept {
      return accepted;
    }
    [[nodiscard]] std::string describe() const {
      if (accepted) {
        return "accepted";
      }
      std::string p = "root";
      for (auto i : path) {
        p += "." + std::to_string(i);
      }
      return "rejected at " + p + ": " + reason;
    }
  };

  namespace detail {
    template <GroupOracle G>
    bool child_matches(G const& group, WordSet const& conc, Word const& c,
                       std::vector<Word> const& adds,
                       std::vector<DerivationTree> const& children) {
      WordSet without = conc;
      without.erase(c);
      for (WordSet const* base : std::array<WordSet const*, 2>{&without, &conc}) {
        bool ok = true;
        for (std::size_t i = 0; i < adds.size() && ok; ++i) {
          WordSet expect = *base;
          expect.insert(adds[i]);
          ok = group.canonical_set(children[i].conclusion) == expect;
        }
        if (ok) {
          return true;
        }
      }
      return false;
    }

    template <GroupOracle G>
    CheckResult check_node(DerivationTree const& t, System sys,
                           G const& group, std::vector<std::size_t>& path) {
      auto reject = [&](std::string why) {
        return CheckResult{false, path, std::move(why)};
      };
      for (auto const& w : t.conclusion) {
        if (w.max_gen() > group.rank()) {
          return reject("element " + to_string(w) + " outside "
                        + group.name());
        }
      }
      WordSet const conc = group.canonical_set(t.conclusion);
      switch (t.rule) {
        case Rule::leaf: {
          if (!t.children.empty()) {
            return reject("leaf with children");
          }
          Word a  = group.canonicalize(t.a);
          Word ai = group.invert(a);
          if (conc.count(a) == 0 || conc.count(ai) == 0) {
            return reject("leaf needs " + to_string(a) + " and "
                          + to_string(ai) + " in the conclusion");
          }
          return {};
        }
        case Rule::closure: {
          if (!t.children.empty()) {
            return reject("closure leaf with children");
          }
          if (t.sequence.empty()) {
            return reject("empty closure sequence");
          }
          Word prod;
          for (auto const& s : t.sequence) {
            Word cs = group.canonicalize(s);
            if (conc.count(cs) == 0) {
              return reject("closure factor " + to_string(s)
                            + " not in the conclusion");
            }
            prod = group.multiply(prod, cs);
          }
          if (!prod.is_identity()) {
            return reject("closure sequence multiplies to " + to_string(prod));
          }
          return {};
        }
        case Rule::product:
        case Rule::exchange: {
          bool const is_product = t.rule == Rule::product;
          if (!is_product && sys != System::orders) {
            return reject("exchange is not a rule of the S-system");
          }
          std::size_t const arity = is_product ? 2 : 1;
          if (t.children.size() != arity) {
            return reject("expected " + std::to_string(arity) + " children");
          }
          Word c = group.canonicalize(t.c);
          Word a = group.canonicalize(t.a);
          Word b = group.canonicalize(t.b);
          if (conc.count(c) == 0) {
            return reject(to_string(c) + " not in the conclusion");
          }
          if (group.multiply(a, b) != c) {
            return reject(to_string(a) + " * " + to_string(b) + " != "
                          + to_string(c));
          }
          std::vector<Word> adds = is_product
                                       ? std::vector<Word>{a, b}
                                       : std::vector<Word>{group.multiply(b, a)};
          if (!child_matches(group, conc, c, adds, t.children)) {
            return reject("child conclusions do not match the "
                          + to_string(t.rule) + " rule");
          }
          for (std::size_t i = 0; i < t.children.size(); ++i) {
            path.push_back(i);
            auto r = check_node(t.children[i], sys, group, path);
            path.pop_back();
            if (!r) {
              return r;
            }
          }
          return {};
        }
      }
      return reject("unknown rule");
    }
  }  // namespace detail

  // Elements are compared after canonicalization by the oracle, so a tree
  // written with free-group words can be checked against a quotient.
  template <GroupOracle G>
  CheckResult check(DerivationTree const& tree, System sys, G const& group) {
    std::vector<std::size_t> path;
    return detail::check_node(tree, sys, group, path);
  }

  ////////////////////////////////////////////////////////////////////////
  // Tree transformers
  ////////////////////////////////////////////////////////////////////////

  // Adds `extra` to every conclusion; accepted trees stay accepted.
  inline DerivationTree enlarge(DerivationTree tree, WordSet const& extra) {
    tree.conclusion.insert(extra.begin(), extra.end());
    for (auto& ch : tree.children) {
      ch = enlarge(std::move(ch), extra);
    }
    return tree;
  }

  // Given an accepted tree for T u {ab}, a tree for T u {ba} with one extra
  // exchange node.  Requires a*b (canonical) in the root conclusion.
  template <GroupOracle G>
  DerivationTree extend_by_exchange(DerivationTree tree, Word const& a,
                                    Word const& b, G const& group) {
    Word const ab   = group.multiply(a, b);
    Word const ba   = group.multiply(b, a);
    WordSet    conc = group.canonical_set(tree.conclusion);
    if (conc.erase(ab) == 0) {
      throw std::invalid_argument("extend_by_exchange: " + to_string(ab)
                                  + " not in the conclusion");
    }
    conc.insert(ba);
    return DerivationTree::exchange(std::move(conc), ba, group.canonicalize(b),
                                    group.canonicalize(a), std::move(tree));
  }

  ////////////////////////////////////////////////////////////////////////
  // Search
  ////////////////////////////////////////////////////////////////////////

  struct SearchBudget {
    std::size_t max_depth = 3;
    std::size_t universe  = 40;
    std::size_t max_nodes = 20000;
    // closure radius; default 2 * (max canonical length of the input)
    std::optional<std::size_t>                           radius;
    std::optional<std::chrono::steady_clock::time_point> deadline;
  };

  struct SearchResult {
    std::optional<DerivationTree> tree;
    std::size_t                   nodes          = 0;
    std::size_t                   depth_reached  = 0;
    std::size_t                   universe_size  = 0;
    bool                          nodes_exhausted = false;
    bool                          time_exhausted  = false;

    explicit operator bool() const noexcept {
      return tree.has_value();
    }
  };

  // U: canonical initial subterms of S, their pairwise quotients, and the
  // inverses of all of these, shortlex-ordered and truncated to `cap`.
  template <GroupOracle G>
  std::vector<Word> factor_universe(WordSet const& s, std::size_t cap,
                                    G const& group) {
    WordSet const     nodes = group.canonical_set(initial_subterms(s));
    std::vector<Word> ordered(nodes.begin(), nodes.end());
    WordSet           u(s.begin(), s.end());
    u.insert(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      for (std::size_t j = 0; j < ordered.size(); ++j) {
        if (i != j) {
          u.insert(group.multiply(ordered[i], group.invert(ordered[j])));
        }
      }
    }
    WordSet all;
    for (auto const& w : u) {
      Word cw = group.canonicalize(w);
      all.insert(cw);
      all.insert(group.invert(cw));
    }
    all.erase(Word::identity());
    std::vector<Word> out(all.begin(), all.end());
    if (out.size() > cap) {
      out.resize(cap);
    }
    return out;
  }

  namespace detail {
    template <GroupOracle G>
    class Prover {
     public:
      Prover(G const& group, System sys, SearchBudget budget,
             std::vector<Word> universe, std::size_t radius)
          : _group(group),
            _sys(sys),
            _budget(std::move(budget)),
            _universe(std::move(universe)),
            _radius(radius) {}

      std::optional<DerivationTree> prove(WordSet const& s, std::size_t depth) {
        if (out_of_budget()) {
          return std::nullopt;
        }
        ++_nodes;
        for (auto const& a : s) {
          if (s.count(_group.invert(a)) != 0) {
            return DerivationTree::leaf(s, a);
          }
        }
        auto it = _failed.find(s);
        if (it != _failed.end() && it->second >= depth) {
          return std::nullopt;
        }
        auto cl = semigroup_closure_in_ball(s, _radius, _group, true);
        if (cl.contains_identity) {
          return DerivationTree::closure(
              s, product_witness(cl, Word::identity()));
        }
        if (depth > 0) {
          if (auto t = expand(s, depth)) {
            return t;
          }
        }
        if (!out_of_budget()) {
          auto& f = _failed[s];
          f       = std::max(f, depth);
        }
        return std::nullopt;
      }

      [[nodiscard]] std::size_t nodes() const noexcept {
        return _nodes;
      }
      [[nodiscard]] bool nodes_exhausted() const noexcept {
        return _nodes >= _budget.max_nodes;
      }
      [[nodiscard]] bool time_exhausted() const {
        return _budget.deadline
               && std::chrono::steady_clock::now() >= *_budget.deadline;
      }

     private:
      bool out_of_budget() const {
        return nodes_exhausted() || time_exhausted();
      }

      std::optional<DerivationTree> expand(WordSet const& s,
                                           std::size_t    depth) {
        for (auto const& c : s) {
          WordSet t = s;
          t.erase(c);
          for (auto const& a : _universe) {
            Word b = _group.multiply(_group.invert(a), c);
            if (b.is_identity() || a == c) {
              continue;
            }
            WordSet left = t;
            left.insert(a);
            WordSet right = t;
            right.insert(b);
            auto lt = prove(left, depth - 1);
            if (lt) {
              auto rt = prove(right, depth - 1);
              if (rt) {
                return DerivationTree::product(s, c, a, b, std::move(*lt),
                                               std::move(*rt));
              }
            }
            if (out_of_budget()) {
              return std::nullopt;
            }
          }
          if (_sys != System::orders) {
            continue;
          }
          for (auto const& a : _universe) {
            Word b = _group.multiply(_group.invert(a), c);
            if (b.is_identity()) {
              continue;
            }
            Word    ba    = _group.multiply(b, a);
            WordSet child = t;
            child.insert(ba);
            if (child == s) {
              continue;
            }
            if (auto ct = prove(child, depth - 1)) {
              return DerivationTree::exchange(s, c, a, b, std::move(*ct));
            }
            if (out_of_budget()) {
              return std::nullopt;
            }
          }
        }
        return std::nullopt;
      }

      G const&                      _group;
      System                        _sys;
      SearchBudget                  _budget;
      std::vector<Word>             _universe;
      std::size_t                   _radius;
      std::size_t                   _nodes = 0;
      std::map<WordSet, std::size_t> _failed;
    };
  }  // namespace detail

  // Iterative-deepening backward search.  A returned tree is minimal in
  // depth for the given universe and always passes check(); NotFound says
  // nothing about membership.
  template <GroupOracle G>
  SearchResult search(WordSet const& s, System sys, G const& group,
                      SearchBudget const& budget = {}) {
    WordSet const cs = group.canonical_set(s);
    std::size_t   maxlen = 0;
    for (auto const& w : cs) {
      maxlen = std::max(maxlen, w.length());
    }
    std::size_t const radius = budget.radius.value_or(2 * std::max<std::size_t>(maxlen, 1));
    auto universe = factor_universe(cs, budget.universe, group);
    SearchResult result;
    result.universe_size = universe.size();
    detail::Prover<G> prover(group, sys, budget, std::move(universe), radius);
    for (std::size_t d = 0; d <= budget.max_depth; ++d) {
      result.depth_reached = d;
      result.tree          = prover.prove(cs, d);
      if (result.tree || prover.nodes_exhausted() || prover.time_exhausted()) {
        break;
      }
    }
    result.nodes           = prover.nodes();
    result.nodes_exhausted = !result.tree && prover.nodes_exhausted();
    result.time_exhausted  = !result.tree && prover.time_exhausted();
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verdicts shared by the deciders
  ////////////////////////////////////////////////////////////////////////

  enum class VerdictKind { valid, invalid, unknown };

  inline std::string to_string(VerdictKind k) {
    switch (k) {
      case VerdictKind::valid: return "valid";
      case VerdictKind::invalid: return "invalid";
      case VerdictKind::unknown: return "unknown";
    }
    return {};
  }

  struct DecideStats {
    std::size_t assignments = 0;
    std::size_t nodes       = 0;
  };

  // Valid may carry a certificate; Invalid carries a model witness; Unknown
  // reports the budgets that ran out.
  template <typename Witness>
  struct Verdict {
    VerdictKind                        kind = VerdictKind::unknown;
    std::optional<DerivationTree>      certificate;
    System                             system = System::right_orders;
    std::optional<Witness>             witness;
    std::map<std::string, std::size_t> budgets;
    std::string                        method;
    DecideStats                        stats;

    [[nodiscard]] bool valid() const noexcept {
      return kind == VerdictKind::valid;
    }
    [[nodiscard]] bool invalid() const noexcept {
      return kind == VerdictKind::invalid;
    }
    [[nodiscard]] bool unknown() const noexcept {
      return kind == VerdictKind::unknown;
    }
  };

}  // namespace ordlg
