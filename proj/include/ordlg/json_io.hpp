// ordlg - right orders on groups and validity in lattice-ordered groups
//
// JSON forms of words, derivation trees and witnesses.  Words are written
// as "x*y^-1" strings, sets as arrays in shortlex order, rationals as
// integers or "p/q" strings.

#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "biorder.hpp"
#include "derivation.hpp"
#include "presented.hpp"
#include "rightorder.hpp"
#include "terms.hpp"
#include "words.hpp"

namespace ordlg::json {

  using nlohmann::json;

  class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  inline json word(Word const& w) {
    return to_string(w);
  }

  inline Word word_from(json const& j, std::optional<Rank> rank = std::nullopt) {
    if (!j.is_string()) {
      throw FormatError("expected a word string, got " + j.dump());
    }
    auto w = group_word(*parse_term(j.get<std::string>(), rank));
    if (!w) {
      throw FormatError("not a group word: " + j.get<std::string>());
    }
    return *w;
  }

  inline json words(WordSet const& s) {
    json a = json::array();
    for (auto const& w : s) {
      a.push_back(word(w));
    }
    return a;
  }

  inline json words(std::vector<Word> const& s) {
    json a = json::array();
    for (auto const& w : s) {
      a.push_back(word(w));
    }
    return a;
  }

  inline WordSet word_set_from(json const& j,
                               std::optional<Rank> rank = std::nullopt) {
    if (!j.is_array()) {
      throw FormatError("expected an array of words");
    }
    WordSet out;
    for (auto const& e : j) {
      out.insert(word_from(e, rank));
    }
    return out;
  }

  inline std::vector<Word> word_list_from(json const& j,
                                          std::optional<Rank> rank
                                          = std::nullopt) {
    if (!j.is_array()) {
      throw FormatError("expected an array of words");
    }
    std::vector<Word> out;
    for (auto const& e : j) {
      out.push_back(word_from(e, rank));
    }
    return out;
  }

  inline json rational(Rational const& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) {
      auto const n = numerator(q);
      if (n <= std::numeric_limits<long long>::max()
          && n >= std::numeric_limits<long long>::min()) {
        return n.convert_to<long long>();
      }
    }
    return q.str();
  }

  inline Rational rational_from(json const& j) {
    if (j.is_number_integer()) {
      return Rational(j.get<long long>());
    }
    if (j.is_string()) {
      return Rational(j.get<std::string>());
    }
    throw FormatError("expected a rational, got " + j.dump());
  }

  ////////////////////////////////////////////////////////////////////////
  // Derivation trees
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline json tree_node(DerivationTree const& t, System sys) {
      json data = json::object();
      switch (t.rule) {
        case Rule::leaf: data["a"] = word(t.a); break;
        case Rule::closure: data["sequence"] = words(t.sequence); break;
        case Rule::product:
        case Rule::exchange:
          data["c"] = word(t.c);
          data["a"] = word(t.a);
          data["b"] = word(t.b);
          break;
      }
      json children = json::array();
      for (auto const& ch : t.children) {
        children.push_back(tree_node(ch, sys));
      }
      return json{{"system", to_string(sys)},
                  {"conclusion", words(t.conclusion)},
                  {"rule", to_string(t.rule)},
                  {"data", std::move(data)},
                  {"children", std::move(children)}};
    }

    inline Rule rule_from(std::string const& s) {
      for (Rule r : {Rule::leaf, Rule::closure, Rule::product, Rule::exchange}) {
        if (to_string(r) == s) {
          return r;
        }
      }
      throw FormatError("unknown rule '" + s + "'");
    }

    inline DerivationTree tree_from(json const& j, std::optional<Rank> rank) {
      if (!j.is_object()) {
        throw FormatError("tree node must be an object");
      }
      DerivationTree t;
      t.conclusion      = word_set_from(j.at("conclusion"), rank);
      t.rule            = rule_from(j.at("rule").get<std::string>());
      json const& data  = j.value("data", json::object());
      switch (t.rule) {
        case Rule::leaf: t.a = word_from(data.at("a"), rank); break;
        case Rule::closure:
          t.sequence = word_list_from(data.at("sequence"), rank);
          break;
        case Rule::product:
        case Rule::exchange:
          t.c = word_from(data.at("c"), rank);
          t.a = word_from(data.at("a"), rank);
          t.b = word_from(data.at("b"), rank);
          break;
      }
      for (auto const& ch : j.value("children", json::array())) {
        t.children.push_back(tree_from(ch, rank));
      }
      return t;
    }
  }  // namespace detail

  inline json certificate(DerivationTree const& t, System sys,
                          std::optional<std::string> const& group
                          = std::nullopt) {
    json j = detail::tree_node(t, sys);
    if (group) {
      j["group"] = *group;
    }
    return j;
  }

  struct ParsedCertificate {
    DerivationTree             tree;
    System                     system = System::right_orders;
    std::optional<std::string> group;
  };

  inline ParsedCertificate certificate_from(json const& j) {
    try {
      ParsedCertificate out;
      auto const        sys = j.at("system").get<std::string>();
      if (sys == "S") {
        out.system = System::right_orders;
      } else if (sys == "D") {
        out.system = System::orders;
      } else {
        throw FormatError("system must be \"S\" or \"D\"");
      }
      if (j.contains("group")) {
        out.group = j.at("group").get<std::string>();
      }
      out.tree = detail::tree_from(j, std::nullopt);
      return out;
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(e.what());
    } catch (ParseError const& e) {
      throw FormatError(e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Witnesses
  ////////////////////////////////////////////////////////////////////////

  inline json witness(SignWitness const& w) {
    json classes = json::array();
    for (auto const& [rep, sign] : w.classes) {
      classes.push_back(json{{"rep", word(rep)}, {"sign", sign}});
    }
    return json{{"classes", std::move(classes)}, {"order", words(w.order)}};
  }

  inline json witness(TruncatedRightOrder const& o) {
    return json{{"l", o.l}, {"positives", words(o.positives)}};
  }

  inline TruncatedRightOrder truncated_order_from(json const& j, Rank rank) {
    TruncatedRightOrder o;
    o.rank      = rank;
    o.l         = j.at("l").get<std::size_t>();
    o.positives = word_set_from(j.at("positives"), rank);
    return o;
  }

  inline json automorphisms(PLMaps const& maps) {
    json a = json::array();
    for (auto const& [g, m] : maps) {
      json pts = json::array();
      for (auto const& [p, q] : m.breakpoints()) {
        pts.push_back(json::array({rational(p), rational(q)}));
      }
      a.push_back(json{{"gen", generator_name(g)}, {"breakpoints", pts}});
    }
    return a;
  }

  inline json witness(MagnusWitness const& w) {
    json perm = json::array();
    for (int p : w.order.perm) {
      perm.push_back(generator_name(p + 1));
    }
    return json{{"epsilon", w.order.eps},
                {"perm", std::move(perm)},
                {"sign", to_string(w.sign)},
                {"degree", w.degree}};
  }

  inline json witness(KleinConeWitness const& w) {
    auto [ex, ey] = klein_variant_signs(w.variant);
    return json{{"cone", w.variant}, {"epsilon", json::array({ex, ey})}};
  }

  inline json witness(Functional const& phi) {
    json a = json::array();
    for (auto const& q : phi) {
      a.push_back(rational(q));
    }
    return json{{"phi", std::move(a)}};
  }

  inline json witness(PresentedWitness const& w) {
    return std::visit([](auto const& x) { return witness(x); }, w);
  }

  inline json budgets(std::map<std::string, std::size_t> const& b) {
    json j = json::object();
    for (auto const& [k, v] : b) {
      j[k] = v;
    }
    return j;
  }

}  // namespace ordlg::json
