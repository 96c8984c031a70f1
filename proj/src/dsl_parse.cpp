// Copyright 2026 The cftkit Authors. All Rights Reserved.
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

// Lexer and recursive-descent parser for the .cft model language.

#include <charconv>
#include <optional>

#include "cft/dsl.hpp"

namespace cft {
namespace {

constexpr int kMaxNesting = 200;

enum class Tok {
  Ident,
  Number,
  String,
  LBrace,
  RBrace,
  Colon,
  Comma,
  Equals,
  Dot,
  Pipe,
  Amp,
  Caret,
  LParen,
  RParen,
  Arrow,
  End
};

struct Token {
  Tok kind = Tok::End;
  std::string_view text;
  SourceLoc loc;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::String:
      return "string \"" + std::string(t.text) + "\"";
    default:
      return "'" + std::string(t.text) + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.loc = {line_, column_};
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    const auto start = pos_;
    auto single = [&](Tok kind) {
      advance();
      t.kind = kind;
      t.text = text_.substr(start, 1);
      return t;
    };
    if (is_alpha(c)) {
      while (pos_ < text_.size() && (is_alpha(text_[pos_]) || is_digit(text_[pos_])))
        advance();
      t.kind = Tok::Ident;
      t.text = text_.substr(start, pos_ - start);
      return t;
    }
    if (is_digit(c)) {
      while (pos_ < text_.size() && is_digit(text_[pos_])) advance();
      if (pos_ < text_.size() && text_[pos_] == '.') {
        advance();
        while (pos_ < text_.size() && is_digit(text_[pos_])) advance();
      }
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        advance();
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
          advance();
        if (pos_ >= text_.size() || !is_digit(text_[pos_]))
          throw ParseError("malformed number exponent", {line_, column_});
        while (pos_ < text_.size() && is_digit(text_[pos_])) advance();
      }
      t.kind = Tok::Number;
      t.text = text_.substr(start, pos_ - start);
      return t;
    }
    if (c == '"') {
      advance();
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') throw ParseError("unterminated string", t.loc);
        advance();
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated string", t.loc);
      t.kind = Tok::String;
      t.text = text_.substr(start + 1, pos_ - start - 1);
      advance();
      return t;
    }
    switch (c) {
      case '{':
        return single(Tok::LBrace);
      case '}':
        return single(Tok::RBrace);
      case ':':
        return single(Tok::Colon);
      case ',':
        return single(Tok::Comma);
      case '=':
        return single(Tok::Equals);
      case '.':
        return single(Tok::Dot);
      case '|':
        return single(Tok::Pipe);
      case '&':
        return single(Tok::Amp);
      case '^':
        return single(Tok::Caret);
      case '(':
        return single(Tok::LParen);
      case ')':
        return single(Tok::RParen);
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          advance();
          advance();
          t.kind = Tok::Arrow;
          t.text = text_.substr(start, 2);
          return t;
        }
        break;
      default:
        break;
    }
    const auto byte = static_cast<unsigned char>(c);
    if (byte >= 0x20 && byte < 0x7f)
      throw ParseError(std::string("unexpected character '") + c + "'", t.loc);
    throw ParseError("unexpected byte 0x" + hex(byte), t.loc);
  }

 private:
  static bool is_alpha(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  static std::string hex(unsigned char b) {
    static constexpr char kDigits[] = "0123456789abcdef";
    return {kDigits[b >> 4], kDigits[b & 0xf]};
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {
    current_ = lexer_.next();
  }

  SourceModel parse() {
    SourceModel model;
    while (current_.kind != Tok::End) {
      if (is_keyword("component")) {
        model.declarations.emplace_back(parse_component());
      } else if (is_keyword("system")) {
        model.declarations.emplace_back(parse_system());
      } else if (is_keyword("tree")) {
        model.declarations.emplace_back(parse_tree());
      } else {
        fail("expected 'component', 'system' or 'tree'");
      }
    }
    return model;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(expected + ", found " + describe(current_), current_.loc);
  }

  Token take() {
    Token t = current_;
    if (current_.kind != Tok::End) current_ = lexer_.next();
    return t;
  }

  Token expect(Tok kind, const char* what) {
    if (current_.kind != kind) fail(std::string("expected ") + what);
    return take();
  }

  bool is_keyword(std::string_view word) const {
    return current_.kind == Tok::Ident && current_.text == word;
  }

  void expect_keyword(std::string_view word) {
    if (!is_keyword(word)) fail("expected '" + std::string(word) + "'");
    take();
  }

  std::string identifier(const char* what) {
    if (current_.kind != Tok::Ident) fail(std::string("expected ") + what);
    if (is_reserved_word(current_.text))
      throw ParseError("'" + std::string(current_.text) +
                           "' is a reserved word and cannot name a " + what,
                       current_.loc);
    return std::string(take().text);
  }

  std::vector<std::string> path(const char* what) {
    std::vector<std::string> parts{identifier(what)};
    while (current_.kind == Tok::Dot) {
      take();
      parts.push_back(identifier(what));
    }
    return parts;
  }

  static std::string joined(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
      if (!out.empty()) out += '.';
      out += p;
    }
    return out;
  }

  std::vector<std::string> path_of(std::size_t segments, const char* what) {
    const auto loc = current_.loc;
    auto parts = path(what);
    if (parts.size() != segments)
      throw ParseError("expected " + std::string(what) + ", found '" +
                           joined(parts) + "'",
                       loc);
    return parts;
  }

  double probability() {
    if (!(current_.kind == Tok::Ident && current_.text == "p"))
      fail("expected 'p=' probability");
    take();
    expect(Tok::Equals, "'=' after 'p'");
    if (current_.kind != Tok::Number) fail("expected probability value");
    const auto tok = take();
    double value = 0.0;
    const auto* first = tok.text.data();
    const auto* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw ParseError("malformed probability '" + std::string(tok.text) + "'",
                       tok.loc);
    if (!(value >= 0.0 && value <= 1.0))
      throw ParseError("probability " + std::string(tok.text) +
                           " outside [0,1]",
                       tok.loc);
    return value;
  }

  Port port_decl(Direction direction, SourceLoc loc) {
    Port port;
    port.direction = direction;
    port.loc = loc;
    port.name = identifier("port name");
    expect(Tok::Colon, "':' after port name");
    port.modes.push_back(identifier("failure mode"));
    while (current_.kind == Tok::Comma) {
      take();
      port.modes.push_back(identifier("failure mode"));
    }
    return port;
  }

  ComponentDefinition parse_component() {
    ComponentDefinition def;
    def.loc = current_.loc;
    take();
    def.name = identifier("component name");
    expect(Tok::LBrace, "'{'");
    while (current_.kind != Tok::RBrace) {
      const auto loc = current_.loc;
      if (is_keyword("in") || is_keyword("out")) {
        const auto dir = current_.text == "in" ? Direction::Input : Direction::Output;
        take();
        def.ports.push_back(port_decl(dir, loc));
      } else if (is_keyword("event")) {
        take();
        BasicEvent ev;
        ev.loc = loc;
        ev.name = identifier("event name");
        ev.probability = probability();
        def.events.push_back(std::move(ev));
      } else if (current_.kind == Tok::Ident && !is_reserved_word(current_.text)) {
        auto target = path_of(2, "<port>.<mode>");
        expect(Tok::Equals, "'='");
        OutputLogic out;
        out.loc = loc;
        out.port = target[0];
        out.mode = target[1];
        out.expr = expression(0);
        def.outputs.push_back(std::move(out));
      } else {
        fail("expected 'in', 'out', 'event', '<port>.<mode> =' or '}'");
      }
    }
    take();
    return def;
  }

  SystemBlock parse_system() {
    SystemBlock sys;
    sys.loc = current_.loc;
    take();
    sys.name = identifier("system name");
    expect(Tok::LBrace, "'{'");
    while (current_.kind != Tok::RBrace) {
      const auto loc = current_.loc;
      if (is_keyword("inst")) {
        take();
        Instance inst;
        inst.loc = loc;
        inst.name = identifier("instance name");
        expect(Tok::Colon, "':' after instance name");
        inst.definition = identifier("component name");
        sys.instances.push_back(std::move(inst));
      } else if (is_keyword("connect")) {
        take();
        Connection c;
        c.loc = loc;
        auto src = path_of(2, "<instance>.<port>");
        expect(Tok::Arrow, "'->'");
        auto dst = path_of(2, "<instance>.<port>");
        c.source = {src[0], src[1]};
        c.target = {dst[0], dst[1]};
        sys.connections.push_back(std::move(c));
      } else if (is_keyword("top")) {
        take();
        TopEvent top;
        top.loc = loc;
        auto ref = path_of(3, "<instance>.<port>.<mode>");
        expect_keyword("as");
        top.name = std::string(expect(Tok::String, "quoted top event name").text);
        top.instance = ref[0];
        top.port = ref[1];
        top.mode = ref[2];
        sys.tops.push_back(std::move(top));
      } else {
        fail("expected 'inst', 'connect', 'top' or '}'");
      }
    }
    take();
    return sys;
  }

  TreeBlock parse_tree() {
    TreeBlock tree;
    tree.loc = current_.loc;
    take();
    tree.name = identifier("tree name");
    expect(Tok::LBrace, "'{'");
    while (current_.kind != Tok::RBrace) {
      const auto loc = current_.loc;
      if (is_keyword("event")) {
        take();
        BasicEvent ev;
        ev.loc = loc;
        ev.name = joined(path("event name"));
        ev.probability = probability();
        tree.events.push_back(std::move(ev));
      } else if (is_keyword("top")) {
        take();
        TreeTop top;
        top.loc = loc;
        top.node = joined(path("node name"));
        expect_keyword("as");
        top.name = std::string(expect(Tok::String, "quoted top event name").text);
        tree.tops.push_back(std::move(top));
      } else if (current_.kind == Tok::Ident && !is_reserved_word(current_.text)) {
        TreeNodeDef node;
        node.loc = loc;
        node.name = joined(path("node name"));
        expect(Tok::Equals, "'='");
        node.expr = expression(0);
        tree.nodes.push_back(std::move(node));
      } else {
        fail("expected 'event', 'top', '<node> =' or '}'");
      }
    }
    take();
    return tree;
  }

  // or := xor ('|' xor)* ; xor := and ('^' and)? ; and := primary ('&' primary)*
  Expr expression(int depth) {
    if (depth > kMaxNesting) throw ParseError("expression nested too deeply", current_.loc);
    std::vector<Expr> operands{xor_expr(depth)};
    while (current_.kind == Tok::Pipe) {
      take();
      operands.push_back(xor_expr(depth));
    }
    if (operands.size() == 1) return std::move(operands.front());
    return Expr::or_of(std::move(operands));
  }

  Expr xor_expr(int depth) {
    Expr lhs = and_expr(depth);
    if (current_.kind != Tok::Caret) return lhs;
    take();
    Expr rhs = and_expr(depth);
    if (current_.kind == Tok::Caret)
      throw ParseError("'^' is binary; parenthesize chained exclusive ors",
                       current_.loc);
    return Expr::xor_of(std::move(lhs), std::move(rhs));
  }

  Expr and_expr(int depth) {
    std::vector<Expr> operands{primary(depth)};
    while (current_.kind == Tok::Amp) {
      take();
      operands.push_back(primary(depth));
    }
    if (operands.size() == 1) return std::move(operands.front());
    return Expr::and_of(std::move(operands));
  }

  Expr primary(int depth) {
    if (current_.kind == Tok::LParen) {
      take();
      Expr inner = expression(depth + 1);
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (current_.kind != Tok::Ident) fail("expected operand");
    return Expr::ref(joined(path("operand")));
  }

  Lexer lexer_;
  Token current_;
};

}  // namespace

SourceModel parse_model(std::string_view text) { return Parser(text).parse(); }

}  // namespace cft
