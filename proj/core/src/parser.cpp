#include "unasp/parser.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace unasp {
namespace {

enum class TokKind {
  Ident,
  Number,
  Not,
  Colon,
  Implies,
  Dot,
  Comma,
  At,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Minus,
  End,
};

struct Token {
  TokKind kind;
  std::string text;
  double number = 0.0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = TokKind::End;
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance();
      }
      t.text = std::string(text_.substr(start, pos_ - start));
      t.kind = t.text == "not" ? TokKind::Not : TokKind::Ident;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      return lex_number(t);
    }
    switch (c) {
      case ':':
        advance();
        if (pos_ < text_.size() && text_[pos_] == '-') {
          advance();
          t.kind = TokKind::Implies;
        } else {
          t.kind = TokKind::Colon;
        }
        return t;
      case '<':
        advance();
        if (pos_ < text_.size() && text_[pos_] == '-') {
          advance();
          t.kind = TokKind::Implies;
          return t;
        }
        throw ParseError("unexpected character '<'", t.line, t.col);
      case '.':
        advance();
        t.kind = TokKind::Dot;
        return t;
      case ',':
        advance();
        t.kind = TokKind::Comma;
        return t;
      case '@':
        advance();
        t.kind = TokKind::At;
        return t;
      case '[':
        advance();
        t.kind = TokKind::LBracket;
        return t;
      case ']':
        advance();
        t.kind = TokKind::RBracket;
        return t;
      case '(':
        advance();
        t.kind = TokKind::LParen;
        return t;
      case ')':
        advance();
        t.kind = TokKind::RParen;
        return t;
      case '-':
        advance();
        t.kind = TokKind::Minus;
        return t;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.col);
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token lex_number(Token t) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
    if (pos_ < text_.size() && text_[pos_] == '.' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      advance();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      }
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      advance();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) advance();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          advance();
        }
      } else {
        // Roll back: the 'e' belongs to a following identifier, not the number.
        while (pos_ > mark) {
          --pos_;
          --col_;
        }
      }
    }
    t.kind = TokKind::Number;
    t.text = std::string(text_.substr(start, pos_ - start));
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw ParseError("malformed number '" + t.text + "'", t.line, t.col);
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Program parse() {
    std::vector<Rule> rules;
    std::vector<bool> labelled;
    std::set<std::string> taken;
    while (cur_.kind != TokKind::End) {
      auto [rule, has_label] = parse_rule();
      if (has_label) {
        if (taken.count(rule.id)) {
          throw ParseError("duplicate rule label '" + rule.id + "'", rule_line_, rule_col_);
        }
        taken.insert(rule.id);
      }
      rules.push_back(std::move(rule));
      labelled.push_back(has_label);
    }
    int counter = 1;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (labelled[i]) continue;
      std::string id;
      do {
        id = "r" + std::to_string(counter++);
      } while (taken.count(id));
      taken.insert(id);
      rules[i].id = id;
    }
    Program out;
    for (auto& r : rules) out.add(std::move(r));
    return out;
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  Token expect(TokKind kind, const std::string& what) {
    if (cur_.kind != kind) {
      throw ParseError("expected " + what, cur_.line, cur_.col);
    }
    Token t = cur_;
    shift();
    return t;
  }

  std::pair<Rule, bool> parse_rule() {
    rule_line_ = cur_.line;
    rule_col_ = cur_.col;
    Rule rule;
    bool has_label = false;
    if (cur_.kind == TokKind::Ident) {
      Token ident = cur_;
      shift();
      if (cur_.kind == TokKind::Colon) {
        shift();
        rule.id = ident.text;
        has_label = true;
        rule.head = parse_literal();
      } else {
        rule.head = parse_literal_tail(ident, false);
      }
    } else {
      rule.head = parse_literal();
    }
    if (cur_.kind == TokKind::Implies) {
      shift();
      rule.body.push_back(parse_element());
      while (cur_.kind == TokKind::Comma) {
        shift();
        rule.body.push_back(parse_element());
      }
    }
    if (cur_.kind == TokKind::At) {
      shift();
      Token open = cur_;
      rule.weight = parse_interval();
      if (!is_regular(rule.weight)) {
        throw ParseError("rule weight " + to_string(rule.weight) +
                             " is not a sub-interval of [0,1]",
                         open.line, open.col);
      }
    }
    expect(TokKind::Dot, "'.' at end of rule");
    return {std::move(rule), has_label};
  }

  BodyElement parse_element() {
    BodyElement e;
    if (cur_.kind == TokKind::Not) {
      shift();
      e.kind = ElementKind::Naf;
      e.lit = parse_literal();
      return e;
    }
    if (cur_.kind == TokKind::LBracket) {
      Token open = cur_;
      e.kind = ElementKind::Constant;
      e.value = parse_interval();
      if (!is_regular(e.value)) {
        throw ParseError("interval " + to_string(e.value) +
                             " is not a sub-interval of [0,1]",
                         open.line, open.col);
      }
      return e;
    }
    e.kind = ElementKind::Plain;
    e.lit = parse_literal();
    return e;
  }

  Literal parse_literal() {
    bool negated = false;
    if (cur_.kind == TokKind::Minus) {
      shift();
      negated = true;
    }
    Token ident = expect(TokKind::Ident, "a predicate name");
    return parse_literal_tail(ident, negated);
  }

  Literal parse_literal_tail(const Token& ident, bool negated) {
    Literal lit;
    lit.negated = negated;
    lit.atom.predicate = ident.text;
    if (cur_.kind == TokKind::LParen) {
      shift();
      lit.atom.args.push_back(parse_term());
      while (cur_.kind == TokKind::Comma) {
        shift();
        lit.atom.args.push_back(parse_term());
      }
      expect(TokKind::RParen, "')' after argument list");
    }
    return lit;
  }

  std::string parse_term() {
    if (cur_.kind == TokKind::Number) {
      Token t = cur_;
      shift();
      return t.text;
    }
    return expect(TokKind::Ident, "a term").text;
  }

  TruthInterval parse_interval() {
    expect(TokKind::LBracket, "'['");
    double lo = parse_signed_number();
    expect(TokKind::Comma, "','");
    double hi = parse_signed_number();
    expect(TokKind::RBracket, "']'");
    return {lo, hi};
  }

  double parse_signed_number() {
    double sign = 1.0;
    if (cur_.kind == TokKind::Minus) {
      shift();
      sign = -1.0;
    }
    Token t = expect(TokKind::Number, "a number");
    return sign * t.number;
  }

  Lexer lexer_;
  Token cur_;
  int rule_line_ = 1;
  int rule_col_ = 1;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

Program parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file", 0, 0, path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_program(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), e.col(), path);
  }
}

}  // namespace unasp
