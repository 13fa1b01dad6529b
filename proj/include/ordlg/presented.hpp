// ordlg - right orders on groups and validity in lattice-ordered groups
//
// Consequences of a presentation: {r = e | r in R} |= e <= t_1 v ... v t_n
// in lattice-ordered groups, for the built-in right-orderable groups.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "biorder.hpp"
#include "derivation.hpp"
#include "groups.hpp"
#include "rightorder.hpp"
#include "words.hpp"

namespace ordlg {

  // Index 1..4 of the Klein right order whose positive cone holds all of J.
  struct KleinConeWitness {
    int variant = 1;
  };

  using PresentedWitness
      = std::variant<SignWitness, KleinConeWitness, Functional>;

  struct PresentedOptions {
    // closure radius; default 2 * (max input length)
    std::optional<std::size_t> radius;
    SearchBudget               search;
    // look for a derivation when the decision itself has none to offer
    bool want_certificate = true;
  };

  namespace detail {
    template <GroupOracle G>
    void require_canonical(JoinSet const& j, G const& group) {
      for (auto const& t : j) {
        if (group.canonicalize(t) != t) {
          throw std::invalid_argument("not in canonical form for "
                                      + group.name() + ": " + to_string(t));
        }
        if (t.max_gen() > group.rank()) {
          throw std::invalid_argument("generator outside " + group.name()
                                      + ": " + to_string(t));
        }
      }
    }

    // ClosureLeaf if e lies in the bounded closure of J, else an S-system
    // derivation if the search finds one.
    template <GroupOracle G>
    std::optional<DerivationTree>
    find_certificate(JoinSet const& j, G const& group,
                     PresentedOptions const& opts, DecideStats& stats) {
      std::size_t const radius
          = opts.radius.value_or(2 * std::max<std::size_t>(1, max_length(j)));
      auto closure = semigroup_closure_in_ball(j, radius, group, true);
      if (closure.contains_identity) {
        return DerivationTree::closure(
            j, product_witness(closure, Word::identity()));
      }
      if (!opts.want_certificate) {
        return std::nullopt;
      }
      SearchBudget budget = opts.search;
      budget.radius       = radius;
      auto r = search(j, System::right_orders, group, budget);
      stats.nodes += r.nodes;
      return std::move(r.tree);
    }
  }  // namespace detail

  // Free groups: the difference-system decider.  Klein bottle group: the
  // four right orders.  Z^k: linear feasibility.
  template <GroupOracle G>
  Verdict<PresentedWitness>
  decide_presented_lg(JoinSet const& j, G const& group,
                      PresentedOptions const& opts = {}) {
    if (j.empty()) {
      throw std::invalid_argument("decide_presented_lg: empty join set");
    }
    detail::require_canonical(j, group);
    Verdict<PresentedWitness> v;
    v.system = System::right_orders;
    if (j.count(Word::identity()) != 0) {
      v.kind        = VerdictKind::valid;
      v.method      = "leaf";
      v.certificate = DerivationTree::leaf(j, Word::identity());
      return v;
    }

    if constexpr (std::is_same_v<G, FreeGroup>) {
      auto d = decide_valid_lg(j);
      v.stats.assignments = d.assignments_checked;
      v.method            = "cis";
      if (!d.valid) {
        v.kind    = VerdictKind::invalid;
        v.witness = *d.witness;
        return v;
      }
      v.kind        = VerdictKind::valid;
      v.certificate = detail::find_certificate(j, group, opts, v.stats);
      return v;
    } else if constexpr (std::is_same_v<G, KleinGroup>) {
      v.method = "klein-cones";
      std::optional<int> cone;
      for (int variant = 1; variant <= 4 && !cone; ++variant) {
        bool all = std::all_of(j.begin(), j.end(), [&](Word const& t) {
          return klein_right_order_sign(group.element(t), variant)
                 == OrderSign::positive;
        });
        if (all) {
          cone = variant;
        }
      }
      // A cone containing J and a closure certificate for J exclude each
      // other.
      PresentedOptions guard_opts = opts;
      guard_opts.want_certificate = opts.want_certificate && !cone;
      auto cert = detail::find_certificate(j, group, guard_opts, v.stats);
      if (cone && cert) {
        throw std::logic_error("Klein decision inconsistent: cone "
                               + std::to_string(*cone)
                               + " contains a set with a certificate");
      }
      if (cone) {
        v.kind    = VerdictKind::invalid;
        v.witness = KleinConeWitness{*cone};
        return v;
      }
      v.kind        = VerdictKind::valid;
      v.certificate = std::move(cert);
      return v;
    } else if constexpr (std::is_same_v<G, FreeAbelianGroup>) {
      auto a = decide_valid_abelian(j, group.rank());
      v.kind        = a.kind;
      v.method      = a.method;
      v.certificate = std::move(a.certificate);
      if (a.witness) {
        v.witness = *a.witness;
      }
      return v;
    } else {
      v.method = "derivation";
      v.certificate = detail::find_certificate(j, group, opts, v.stats);
      if (v.certificate) {
        v.kind = VerdictKind::valid;
        return v;
      }
      v.kind    = VerdictKind::unknown;
      v.budgets = {{"max_depth", opts.search.max_depth},
                   {"universe", opts.search.universe},
                   {"max_nodes", opts.search.max_nodes}};
      return v;
    }
  }

}  // namespace ordlg
