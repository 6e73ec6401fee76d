#include "goedel/parser.hpp"

#include <cctype>
#include <vector>

#include "goedel/errors.hpp"

namespace goedel {

namespace {

enum class Tok {
  Ident, True, False, All, Ex, Not, And, Or, Arrow, LParen, RParen, Comma, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space();
    std::size_t start = i_;
    if (i_ >= text_.size()) return {Tok::End, "", start};
    char c = text_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) ||
              text_[j] == '_' || text_[j] == '\''))
        ++j;
      std::string word = text_.substr(i_, j - i_);
      i_ = j;
      if (word == "all") return {Tok::All, word, start};
      if (word == "ex") return {Tok::Ex, word, start};
      if (word == "true") return {Tok::True, word, start};
      if (word == "false") return {Tok::False, word, start};
      return {Tok::Ident, word, start};
    }
    switch (c) {
      case '~': ++i_; return {Tok::Not, "~", start};
      case '&': ++i_; return {Tok::And, "&", start};
      case '|': ++i_; return {Tok::Or, "|", start};
      case '(': ++i_; return {Tok::LParen, "(", start};
      case ')': ++i_; return {Tok::RParen, ")", start};
      case ',': ++i_; return {Tok::Comma, ",", start};
      case '-':
        if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
          i_ += 2;
          return {Tok::Arrow, "->", start};
        }
        throw ParseError("stray '-'", start);
      default:
        break;
    }
    // Unicode aliases.
    if (match_utf8("∀")) return {Tok::All, "all", start};    // ∀
    if (match_utf8("∃")) return {Tok::Ex, "ex", start};      // ∃
    if (match_utf8("∧")) return {Tok::And, "&", start};      // ∧
    if (match_utf8("∨")) return {Tok::Or, "|", start};       // ∨
    if (match_utf8("→")) return {Tok::Arrow, "->", start};   // →
    if (match_utf8("¬")) return {Tok::Not, "~", start};      // ¬
    if (match_utf8("⊥")) return {Tok::False, "false", start};  // ⊥
    if (match_utf8("⊤")) return {Tok::True, "true", start};    // ⊤
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

private:
  void skip_space() {
    while (i_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
  }

  bool match_utf8(const char* seq) {
    std::size_t len = std::char_traits<char>::length(seq);
    if (text_.compare(i_, len, seq) == 0) {
      i_ += len;
      return true;
    }
    return false;
  }

  const std::string& text_;
  std::size_t i_ = 0;
};

class Parser {
public:
  Parser(const std::string& text, const Signature* expected)
      : lexer_(text), expected_(expected) {
    advance();
  }

  FormulaPtr run() {
    auto f = parse_impl();
    expect(Tok::End, "end of input");
    return f;
  }

private:
  void advance() { tok_ = lexer_.next(); }

  void expect(Tok kind, const std::string& what) {
    if (tok_.kind != kind)
      throw ParseError("expected " + what + ", found '" + tok_.text + "'", tok_.pos);
  }

  FormulaPtr parse_impl() {
    auto lhs = parse_or();
    if (tok_.kind == Tok::Arrow) {
      advance();
      return Formula::implies(std::move(lhs), parse_impl());
    }
    return lhs;
  }

  FormulaPtr parse_or() {
    auto f = parse_and();
    while (tok_.kind == Tok::Or) {
      advance();
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    auto f = parse_primary();
    while (tok_.kind == Tok::And) {
      advance();
      f = Formula::conj(std::move(f), parse_primary());
    }
    return f;
  }

  FormulaPtr parse_primary() {
    switch (tok_.kind) {
      case Tok::Not: {
        advance();
        return Formula::neg(parse_primary());
      }
      case Tok::True:
        advance();
        return Formula::top();
      case Tok::False:
        advance();
        return Formula::bottom();
      case Tok::All:
      case Tok::Ex: {
        Quant q = tok_.kind == Tok::All ? Quant::Forall : Quant::Exists;
        advance();
        expect(Tok::Ident, "a variable name");
        std::string var = tok_.text;
        advance();
        bound_.push_back(var);
        auto body = parse_primary();
        bound_.pop_back();
        return Formula::quantified(q, var, std::move(body));
      }
      case Tok::LParen: {
        advance();
        auto f = parse_impl();
        expect(Tok::RParen, "')'");
        advance();
        return f;
      }
      case Tok::Ident:
        return parse_atom();
      default:
        throw ParseError("expected a formula, found '" + tok_.text + "'", tok_.pos);
    }
  }

  FormulaPtr parse_atom() {
    std::string name = tok_.text;
    std::size_t pos = tok_.pos;
    advance();
    std::vector<TermPtr> args;
    if (tok_.kind == Tok::LParen) {
      advance();
      args.push_back(parse_term());
      while (tok_.kind == Tok::Comma) {
        advance();
        args.push_back(parse_term());
      }
      expect(Tok::RParen, "')'");
      advance();
    }
    check_predicate(name, static_cast<int>(args.size()), pos);
    return Formula::atom(name, std::move(args));
  }

  TermPtr parse_term() {
    expect(Tok::Ident, "a term");
    std::string name = tok_.text;
    std::size_t pos = tok_.pos;
    advance();
    if (tok_.kind == Tok::LParen) {
      advance();
      std::vector<TermPtr> args;
      args.push_back(parse_term());
      while (tok_.kind == Tok::Comma) {
        advance();
        args.push_back(parse_term());
      }
      expect(Tok::RParen, "')'");
      advance();
      check_function(name, static_cast<int>(args.size()), pos);
      return Term::app(name, std::move(args));
    }
    if (is_bound(name)) return Term::var(name);
    check_function(name, 0, pos);
    return Term::constant(name);
  }

  bool is_bound(const std::string& name) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (*it == name) return true;
    return false;
  }

  void check_predicate(const std::string& name, int arity, std::size_t pos) {
    try {
      seen_.add_predicate(name, arity);
      if (expected_ && expected_->has_predicate(name) &&
          expected_->predicate_arity(name) != arity)
        throw EvalError("declared arity differs");
    } catch (const EvalError& e) {
      throw ParseError("arity mismatch for predicate '" + name + "'", pos);
    }
  }

  void check_function(const std::string& name, int arity, std::size_t pos) {
    try {
      seen_.add_function(name, arity);
      if (expected_ && expected_->has_function(name) &&
          expected_->function_arity(name) != arity)
        throw EvalError("declared arity differs");
    } catch (const EvalError& e) {
      throw ParseError("arity mismatch for symbol '" + name + "'", pos);
    }
  }

  Lexer lexer_;
  Token tok_{};
  std::vector<std::string> bound_;
  Signature seen_;
  const Signature* expected_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  return Parser(text, nullptr).run();
}

FormulaPtr parse_formula(const std::string& text, const Signature& expected) {
  return Parser(text, &expected).run();
}

}  // namespace goedel
