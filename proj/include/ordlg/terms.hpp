// ordlg - right orders on groups and validity in lattice-ordered groups
//
// l-group terms: parsing, rendering and normalization to a meet of joins of
// reduced group words.

#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "words.hpp"

namespace ordlg {

  enum class TermKind { identity, variable, inverse, product, meet, join };

  class Term;
  using TermPtr = std::shared_ptr<Term const>;

  // Immutable l-group term; subterms are shared.
  class Term {
   public:
    [[nodiscard]] TermKind kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] int var() const noexcept {
      return _var;
    }
    [[nodiscard]] TermPtr const& lhs() const noexcept {
      return _lhs;
    }
    [[nodiscard]] TermPtr const& rhs() const noexcept {
      return _rhs;
    }
    [[nodiscard]] bool is_lattice() const noexcept {
      return _kind == TermKind::meet || _kind == TermKind::join;
    }

    static TermPtr identity() {
      return TermPtr(new Term(TermKind::identity, 0, nullptr, nullptr));
    }
    static TermPtr variable(int i) {
      return TermPtr(new Term(TermKind::variable, i, nullptr, nullptr));
    }
    static TermPtr inverse(TermPtr t) {
      return TermPtr(new Term(TermKind::inverse, 0, std::move(t), nullptr));
    }
    static TermPtr product(TermPtr a, TermPtr b) {
      return TermPtr(
          new Term(TermKind::product, 0, std::move(a), std::move(b)));
    }
    static TermPtr meet(TermPtr a, TermPtr b) {
      return TermPtr(new Term(TermKind::meet, 0, std::move(a), std::move(b)));
    }
    static TermPtr join(TermPtr a, TermPtr b) {
      return TermPtr(new Term(TermKind::join, 0, std::move(a), std::move(b)));
    }

   private:
    Term(TermKind k, int v, TermPtr l, TermPtr r)
        : _kind(k), _var(v), _lhs(std::move(l)), _rhs(std::move(r)) {}

    TermKind _kind;
    int      _var;
    TermPtr  _lhs;
    TermPtr  _rhs;
  };

  inline bool equal(Term const& a, Term const& b) {
    if (a.kind() != b.kind()) {
      return false;
    }
    switch (a.kind()) {
      case TermKind::identity: return true;
      case TermKind::variable: return a.var() == b.var();
      case TermKind::inverse: return equal(*a.lhs(), *b.lhs());
      default:
        return equal(*a.lhs(), *b.lhs()) && equal(*a.rhs(), *b.rhs());
    }
  }

  inline std::size_t term_size(Term const& t) {
    switch (t.kind()) {
      case TermKind::identity:
      case TermKind::variable: return 1;
      case TermKind::inverse: return 1 + term_size(*t.lhs());
      default: return 1 + term_size(*t.lhs()) + term_size(*t.rhs());
    }
  }

  inline int max_variable(Term const& t) {
    switch (t.kind()) {
      case TermKind::identity: return 0;
      case TermKind::variable: return t.var();
      case TermKind::inverse: return max_variable(*t.lhs());
      default: return std::max(max_variable(*t.lhs()), max_variable(*t.rhs()));
    }
  }

  // Group words embed as right-nested products of letters.
  inline TermPtr word_term(Word const& w) {
    TermPtr t;
    for (Letter l : w.letters()) {
      TermPtr a = Term::variable(l.gen);
      if (l.inverse) {
        a = Term::inverse(a);
      }
      t = t ? Term::product(t, a) : a;
    }
    return t ? t : Term::identity();
  }

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::string render(Term const& t);

    inline std::string paren(std::string const& s) {
      return "(" + s + ")";
    }

    inline std::string render_binary(Term const& t, std::string const& op) {
      Term const& l  = *t.lhs();
      Term const& r  = *t.rhs();
      // Left-associative: a left child of the same kind needs no brackets.
      auto        ls = render(l);
      auto        rs = render(r);
      if (l.is_lattice() && l.kind() != t.kind()) {
        ls = paren(ls);
      }
      if (r.kind() == t.kind() || r.is_lattice()) {
        rs = paren(rs);
      }
      return ls + op + rs;
    }

    inline std::string render(Term const& t) {
      switch (t.kind()) {
        case TermKind::identity: return "e";
        case TermKind::variable: return generator_name(t.var());
        case TermKind::inverse: {
          Term const& a  = *t.lhs();
          auto        as = render(a);
          if (a.kind() != TermKind::identity && a.kind() != TermKind::variable
              && a.kind() != TermKind::inverse) {
            as = paren(as);
          }
          return as + "^-1";
        }
        case TermKind::product: return render_binary(t, "*");
        case TermKind::meet: return render_binary(t, " /\\ ");
        case TermKind::join: return render_binary(t, " \\/ ");
      }
      return {};
    }
  }  // namespace detail

  inline std::string to_string(Term const& t) {
    return detail::render(t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          _pos(pos) {}
    [[nodiscard]] std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

  enum class Relation { leq, eq };

  struct Statement {
    TermPtr  lhs;
    Relation rel;
    TermPtr  rhs;
  };

  namespace detail {
    // Recursive descent.  Precedence, loosest first: \/, /\, *, ^-1.
    class Parser {
     public:
      Parser(std::string_view text, std::optional<Rank> rank)
          : _text(text), _rank(rank) {}

      Statement statement() {
        TermPtr lhs = term();
        skip_ws();
        Relation rel;
        if (accept("<=")) {
          rel = Relation::leq;
        } else if (accept("=")) {
          rel = Relation::eq;
        } else {
          fail("expected '<=' or '='");
        }
        TermPtr rhs = term();
        expect_end();
        return {lhs, rel, rhs};
      }

      TermPtr whole_term() {
        TermPtr t = term();
        expect_end();
        return t;
      }

      std::vector<TermPtr> word_set() {
        std::vector<TermPtr> out;
        skip_ws();
        if (!accept("{")) {
          fail("expected '{'");
        }
        skip_ws();
        if (accept("}")) {
          expect_end();
          return out;
        }
        while (true) {
          out.push_back(prod());
          skip_ws();
          if (accept(",")) {
            continue;
          }
          if (accept("}")) {
            break;
          }
          fail("expected ',' or '}'");
        }
        expect_end();
        return out;
      }

      int max_var() const noexcept {
        return _max_var;
      }

     private:
      TermPtr term() {
        return join();
      }

      TermPtr join() {
        TermPtr t = meet();
        while (true) {
          skip_ws();
          if (!accept("\\/")) {
            return t;
          }
          t = Term::join(t, meet());
        }
      }

      TermPtr meet() {
        TermPtr t = prod();
        while (true) {
          skip_ws();
          if (!accept("/\\")) {
            return t;
          }
          t = Term::meet(t, prod());
        }
      }

      TermPtr prod() {
        TermPtr t = atom();
        while (true) {
          skip_ws();
          if (!accept("*")) {
            return t;
          }
          t = Term::product(t, atom());
        }
      }

      TermPtr atom() {
        TermPtr t = primary();
        while (true) {
          skip_ws();
          if (!accept("^-1")) {
            return t;
          }
          t = Term::inverse(t);
        }
      }

      TermPtr primary() {
        skip_ws();
        if (_pos >= _text.size()) {
          fail("unexpected end of input");
        }
        char c = _text[_pos];
        if (c == '(') {
          ++_pos;
          TermPtr t = term();
          skip_ws();
          if (!accept(")")) {
            fail("expected ')'");
          }
          return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) == 0) {
          fail(std::string("unexpected character '") + c + "'");
        }
        std::size_t start = _pos;
        while (_pos < _text.size()
               && std::isalnum(static_cast<unsigned char>(_text[_pos])) != 0) {
          ++_pos;
        }
        std::string_view name = _text.substr(start, _pos - start);
        if (name == "e") {
          return Term::identity();
        }
        int index = 0;
        if (name == "x") {
          index = 1;
        } else if (name == "y") {
          index = 2;
        } else if (name == "z") {
          index = 3;
        } else if (name.size() > 1 && name[0] == 'x'
                   && name.substr(1).find_first_not_of("0123456789")
                          == std::string_view::npos
                   && name.size() < 8) {
          index = std::stoi(std::string(name.substr(1)));
        }
        if (index < 1) {
          throw ParseError("unknown variable '" + std::string(name) + "'",
                           start);
        }
        if (_rank && index > _rank->value()) {
          throw ParseError("variable '" + std::string(name)
                               + "' exceeds rank "
                               + std::to_string(_rank->value()),
                           start);
        }
        _max_var = std::max(_max_var, index);
        return Term::variable(index);
      }

      void skip_ws() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos])) != 0) {
          ++_pos;
        }
      }

      bool accept(std::string_view tok) {
        if (_text.substr(_pos, tok.size()) == tok) {
          _pos += tok.size();
          return true;
        }
        return false;
      }

      void expect_end() {
        skip_ws();
        if (_pos != _text.size()) {
          fail("unexpected trailing input");
        }
      }

      [[noreturn]] void fail(std::string const& msg) {
        throw ParseError(msg, _pos);
      }

      std::string_view    _text;
      std::optional<Rank> _rank;
      std::size_t         _pos     = 0;
      int                 _max_var = 0;
    };
  }  // namespace detail

  inline TermPtr parse_term(std::string_view text,
                            std::optional<Rank> rank = std::nullopt) {
    return detail::Parser(text, rank).whole_term();
  }

  inline Statement parse_statement(std::string_view text,
                                   std::optional<Rank> rank = std::nullopt) {
    return detail::Parser(text, rank).statement();
  }

  // Either form accepted by the parser.
  using Parsed = std::variant<TermPtr, Statement>;

  inline Parsed parse(std::string_view text,
                      std::optional<Rank> rank = std::nullopt) {
    if (text.find("<=") != std::string_view::npos
        || text.find('=') != std::string_view::npos) {
      return parse_statement(text, rank);
    }
    return parse_term(text, rank);
  }

  // Value of a lattice-free term in the free group; nullopt if t contains
  // a lattice operation.
  inline std::optional<Word> group_word(Term const& t) {
    switch (t.kind()) {
      case TermKind::identity: return Word::identity();
      case TermKind::variable: return Word{gen(t.var())};
      case TermKind::inverse: {
        auto a = group_word(*t.lhs());
        return a ? std::optional<Word>(a->inverse()) : std::nullopt;
      }
      case TermKind::product: {
        auto a = group_word(*t.lhs());
        auto b = group_word(*t.rhs());
        return a && b ? std::optional<Word>(*a * *b) : std::nullopt;
      }
      default: return std::nullopt;
    }
  }

  // "{w1, w2, ...}" with group words separated by commas.
  inline WordSet parse_word_set(std::string_view text,
                                std::optional<Rank> rank = std::nullopt) {
    detail::Parser p(text, rank);
    WordSet        out;
    for (auto const& t : p.word_set()) {
      auto w = group_word(*t);
      if (!w) {
        throw ParseError("lattice operation inside a word-set literal", 0);
      }
      out.insert(*w);
    }
    return out;
  }

  inline std::string to_string(Statement const& s) {
    return to_string(*s.lhs) + (s.rel == Relation::leq ? " <= " : " = ")
           + to_string(*s.rhs);
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal form
  ////////////////////////////////////////////////////////////////////////

  using JoinSet = WordSet;

  // A meet of joins of reduced words; joins are kept sorted and distinct.
  struct MeetOfJoins {
    std::vector<JoinSet> joins;

    [[nodiscard]] std::size_t word_count() const {
      std::size_t n = 0;
      for (auto const& j : joins) {
        n += j.size();
      }
      return n;
    }
    friend bool operator==(MeetOfJoins const&, MeetOfJoins const&) = default;
  };

  class NormalizationLimit : public std::runtime_error {
   public:
    explicit NormalizationLimit(std::size_t limit)
        : std::runtime_error("normal form exceeds the limit of "
                             + std::to_string(limit) + " words") {}
  };

  // Pushes inverses down to variables: (s t)^-1 = t^-1 s^-1, and inversion
  // swaps meet and join.
  inline TermPtr negation_normal_form(TermPtr const& t, bool inverted = false) {
    switch (t->kind()) {
      case TermKind::identity: return t;
      case TermKind::variable: return inverted ? Term::inverse(t) : t;
      case TermKind::inverse: return negation_normal_form(t->lhs(), !inverted);
      case TermKind::product: {
        auto a = negation_normal_form(t->lhs(), inverted);
        auto b = negation_normal_form(t->rhs(), inverted);
        return inverted ? Term::product(b, a) : Term::product(a, b);
      }
      case TermKind::meet: {
        auto a = negation_normal_form(t->lhs(), inverted);
        auto b = negation_normal_form(t->rhs(), inverted);
        return inverted ? Term::join(a, b) : Term::meet(a, b);
      }
      case TermKind::join: {
        auto a = negation_normal_form(t->lhs(), inverted);
        auto b = negation_normal_form(t->rhs(), inverted);
        return inverted ? Term::meet(a, b) : Term::join(a, b);
      }
    }
    return t;
  }

  namespace detail {
    inline MeetOfJoins canonical_mj(std::set<JoinSet> joins) {
      return MeetOfJoins{std::vector<JoinSet>(joins.begin(), joins.end())};
    }

    inline void guard(std::set<JoinSet> const&   joins,
                      std::optional<std::size_t> limit) {
      if (!limit) {
        return;
      }
      std::size_t n = 0;
      for (auto const& j : joins) {
        n += j.size();
      }
      if (n > *limit) {
        throw NormalizationLimit(*limit);
      }
    }

    // Input must be in negation normal form.
    inline MeetOfJoins normalize_nnf(Term const&                t,
                                     std::optional<std::size_t> limit) {
      switch (t.kind()) {
        case TermKind::identity: return {{JoinSet{Word::identity()}}};
        case TermKind::variable: return {{JoinSet{Word{gen(t.var())}}}};
        case TermKind::inverse:
          return {{JoinSet{Word{gen_inv(t.lhs()->var())}}}};
        case TermKind::meet: {
          auto a = normalize_nnf(*t.lhs(), limit);
          auto b = normalize_nnf(*t.rhs(), limit);
          std::set<JoinSet> joins(a.joins.begin(), a.joins.end());
          joins.insert(b.joins.begin(), b.joins.end());
          guard(joins, limit);
          return canonical_mj(std::move(joins));
        }
        case TermKind::join: {
          auto              a = normalize_nnf(*t.lhs(), limit);
          auto              b = normalize_nnf(*t.rhs(), limit);
          std::set<JoinSet> joins;
          for (auto const& ja : a.joins) {
            for (auto const& jb : b.joins) {
              JoinSet u = ja;
              u.insert(jb.begin(), jb.end());
              joins.insert(std::move(u));
            }
            guard(joins, limit);
          }
          return canonical_mj(std::move(joins));
        }
        case TermKind::product: {
          auto              a = normalize_nnf(*t.lhs(), limit);
          auto              b = normalize_nnf(*t.rhs(), limit);
          std::set<JoinSet> joins;
          for (auto const& ja : a.joins) {
            for (auto const& jb : b.joins) {
              JoinSet p;
              for (auto const& u : ja) {
                for (auto const& v : jb) {
                  p.insert(u * v);
                }
              }
              joins.insert(std::move(p));
            }
            guard(joins, limit);
          }
          return canonical_mj(std::move(joins));
        }
      }
      return {};
    }
  }  // namespace detail

  // LG-equivalent meet of joins of reduced words.  Inverses are pushed to
  // the variables first, then products and joins are distributed bottom-up.
  inline MeetOfJoins to_meet_of_joins(TermPtr const&             t,
                                      std::optional<std::size_t> max_words
                                      = std::nullopt) {
    return detail::normalize_nnf(*negation_normal_form(t), max_words);
  }

  // s <= t holds in LG iff e <= t s^-1 does, iff e <= J for every join J of
  // the normal form of t s^-1.
  inline std::vector<JoinSet>
  inequation_to_joinsets(TermPtr const& s, TermPtr const& t,
                         std::optional<std::size_t> max_words = std::nullopt) {
    return to_meet_of_joins(Term::product(t, Term::inverse(s)), max_words)
        .joins;
  }

  inline std::vector<JoinSet>
  equation_to_joinsets(TermPtr const& s, TermPtr const& t,
                       std::optional<std::size_t> max_words = std::nullopt) {
    auto out  = inequation_to_joinsets(s, t, max_words);
    auto back = inequation_to_joinsets(t, s, max_words);
    out.insert(out.end(), back.begin(), back.end());
    return out;
  }

  inline std::vector<JoinSet>
  statement_to_joinsets(Statement const&           st,
                        std::optional<std::size_t> max_words = std::nullopt) {
    return st.rel == Relation::leq
               ? inequation_to_joinsets(st.lhs, st.rhs, max_words)
               : equation_to_joinsets(st.lhs, st.rhs, max_words);
  }

}  // namespace ordlg
