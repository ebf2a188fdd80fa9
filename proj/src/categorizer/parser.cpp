// Copyright 2026 The ONTS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>

#include "onts/categorizer/category.hpp"
#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"

namespace onts::categorizer {

std::string Pattern::to_string() const {
  std::string s = join(tokens, " ");
  if (wildcard) s += '*';
  return tokens.size() > 1 ? "\"" + s + "\"" : s;
}

Expr Expr::leaf(Pattern p) {
  Expr e;
  e.pattern = std::move(p);
  return e;
}

Expr Expr::near(Pattern left, Pattern right, int distance) {
  Expr e;
  e.kind = Kind::kNear;
  e.distance = distance;
  e.children = {leaf(std::move(left)), leaf(std::move(right))};
  return e;
}

Expr Expr::negate(Expr inner) {
  Expr e;
  e.kind = Kind::kNot;
  e.children.push_back(std::move(inner));
  return e;
}

Expr Expr::all_of(std::vector<Expr> children) {
  if (children.size() == 1) return std::move(children.front());
  Expr e;
  e.kind = Kind::kAnd;
  e.children = std::move(children);
  return e;
}

Expr Expr::any_of(std::vector<Expr> children) {
  if (children.size() == 1) return std::move(children.front());
  Expr e;
  e.kind = Kind::kOr;
  e.children = std::move(children);
  return e;
}

std::string Expr::to_string() const {
  auto list = [&](std::string head) {
    head += '(';
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) head += ',';
      head += children[i].to_string();
    }
    return head + ')';
  };
  switch (kind) {
    case Kind::kLeaf: return pattern.to_string();
    case Kind::kAnd: return list("AND");
    case Kind::kOr: return list("OR");
    case Kind::kNot: return list("NOT");
    case Kind::kNear: return list("NEAR/" + std::to_string(distance));
  }
  return {};
}

namespace {

struct Token {
  enum class Type { kWord, kPhrase, kAnd, kOr, kNot, kNear, kLParen, kRParen, kEnd };
  Type type = Type::kEnd;
  std::string text;
  int near = 0;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src, std::size_t first_line = 1)
      : src_(src), line_(first_line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (c == '(' || c == ')') {
        t.type = c == '(' ? Token::Type::kLParen : Token::Type::kRParen;
        advance();
      } else if (c == '"') {
        advance();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') advance();
        if (pos_ >= src_.size() || src_[pos_] != '"')
          throw ParseError("unterminated phrase", t.line, t.column);
        t.type = Token::Type::kPhrase;
        t.text = std::string(src_.substr(start, pos_ - start));
        advance();
      } else {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && !is_space(src_[pos_]) && src_[pos_] != '(' &&
               src_[pos_] != ')' && src_[pos_] != '"')
          advance();
        t.text = std::string(src_.substr(start, pos_ - start));
        classify(t);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void classify(Token& t) {
    if (t.text == "AND") {
      t.type = Token::Type::kAnd;
    } else if (t.text == "OR") {
      t.type = Token::Type::kOr;
    } else if (t.text == "NOT") {
      t.type = Token::Type::kNot;
    } else if (t.text.rfind("NEAR/", 0) == 0) {
      const std::string_view digits = std::string_view(t.text).substr(5);
      int n = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
        throw ParseError("NEAR needs an integer distance", t.line, t.column);
      if (n < 1) throw ParseError("NEAR distance must be >= 1", t.line, t.column);
      t.type = Token::Type::kNear;
      t.near = n;
    } else {
      t.type = Token::Type::kWord;
    }
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#' && column_ == 1) {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (is_space(c)) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++column_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_ = 1;
};

Pattern make_pattern(const Token& t) {
  Pattern p;
  p.tokens = split_whitespace(t.text);
  if (p.tokens.empty()) throw ParseError("empty pattern", t.line, t.column);
  for (std::size_t i = 0; i < p.tokens.size(); ++i) {
    std::string& tok = p.tokens[i];
    const std::size_t star = tok.find('*');
    if (star == std::string::npos) continue;
    if (star + 1 != tok.size() || i + 1 != p.tokens.size())
      throw ParseError("wildcard allowed only in trailing position", t.line, t.column);
    if (star == 0) throw ParseError("wildcard needs a prefix", t.line, t.column);
    tok.pop_back();
    p.wildcard = true;
  }
  return p;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr parse() {
    Expr e = expr();
    if (peek().type != Token::Type::kEnd) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  Expr expr() {
    std::vector<Expr> terms{term()};
    while (peek().type == Token::Type::kOr) {
      next();
      terms.push_back(term());
    }
    return Expr::any_of(std::move(terms));
  }

  Expr term() {
    std::vector<Expr> factors{factor()};
    while (peek().type == Token::Type::kAnd) {
      next();
      factors.push_back(factor());
    }
    return Expr::all_of(std::move(factors));
  }

  Expr factor() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::kNot:
        next();
        return Expr::negate(factor());
      case Token::Type::kLParen: {
        next();
        Expr e = expr();
        if (peek().type != Token::Type::kRParen) fail("expected ')'");
        next();
        return e;
      }
      case Token::Type::kWord:
      case Token::Type::kPhrase: {
        Pattern left = make_pattern(next());
        if (peek().type != Token::Type::kNear) return Expr::leaf(std::move(left));
        const int n = next().near;
        const Token& rhs = peek();
        if (rhs.type != Token::Type::kWord && rhs.type != Token::Type::kPhrase)
          fail("NEAR needs a pattern on both sides");
        return Expr::near(std::move(left), make_pattern(next()), n);
      }
      case Token::Type::kEnd:
        fail("unexpected end of definition");
      default:
        fail("unexpected '" + t.text + "'");
    }
    return {};
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw ParseError(message, t.line, t.column);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

bool looks_weighted(std::string_view src) {
  for (const auto& raw : split(src, "\n")) {
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (raw.find('\t') != std::string::npos || line.rfind("THRESHOLD", 0) == 0) return true;
  }
  return false;
}

std::int64_t parse_weight(std::string_view text, std::size_t line, std::size_t column) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("bad integer '" + std::string(text) + "'", line, column);
  return value;
}

CategoryDef parse_weighted(std::string_view src, CategoryDef def) {
  def.kind = CategoryDef::Kind::kWeighted;
  bool have_threshold = false;
  const auto lines = split(src, "\n");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string raw = lines[i];
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (trim(raw).empty() || trim(raw).front() == '#') continue;
    const std::size_t tab = raw.rfind('\t');
    if (tab == std::string::npos) throw ParseError("expected pattern<TAB>weight", lineno, 1);
    const std::string head(trim(std::string_view(raw).substr(0, tab)));
    const std::string_view value = trim(std::string_view(raw).substr(tab + 1));
    const std::int64_t weight = parse_weight(value, lineno, tab + 2);
    if (head == "THRESHOLD") {
      if (have_threshold) throw ParseError("duplicate THRESHOLD", lineno, 1);
      def.threshold = weight;
      have_threshold = true;
      continue;
    }
    auto toks = Lexer(head, lineno).run();
    if (toks.size() != 2 ||
        (toks[0].type != Token::Type::kWord && toks[0].type != Token::Type::kPhrase))
      throw ParseError("weighted line needs exactly one pattern", lineno, 1);
    def.patterns.push_back({make_pattern(toks[0]), weight});
  }
  if (!have_threshold) throw ParseError("weighted definition without THRESHOLD", lines.size(), 1);
  return def;
}

}  // namespace

CategoryDef parse_definition(std::string_view source, std::string id, std::string lang) {
  CategoryDef def;
  def.id = std::move(id);
  def.lang = std::move(lang);
  if (looks_weighted(source)) return parse_weighted(source, std::move(def));
  def.kind = CategoryDef::Kind::kBoolean;
  def.rule = Parser(Lexer(source).run()).parse();
  return def;
}

}  // namespace onts::categorizer
