// Copyright 2026 The Argsel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "argsel/kb.hpp"

namespace argsel {

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  if (expected.empty()) return "valid input";
  std::string out;
  for (size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

std::string format_error(const SourceSpan& at, const std::vector<std::string>& expected,
                         const std::string& found) {
  std::ostringstream os;
  os << (at.file.empty() ? "<input>" : at.file) << ':' << at.line << ':' << at.col << ": expected "
     << describe_expected(expected) << " but found " << found;
  return os.str();
}

enum class Tok { lname, uname, lparen, rparen, lbracket, rbracket, comma, dot, equals, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int col = 1;
};

std::string show(const Token& t) {
  return t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'";
}

class Lexer {
 public:
  Lexer(std::string_view src, std::string origin) : src_(src), origin_(std::move(origin)) {}

  Token next() {
    skip_blank();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    auto single = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      advance();
      return t;
    };
    switch (c) {
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      case '[': return single(Tok::lbracket);
      case ']': return single(Tok::rbracket);
      case ',': return single(Tok::comma);
      case '.': return single(Tok::dot);
      case '=': return single(Tok::equals);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      t.kind = std::islower(static_cast<unsigned char>(c)) ? Tok::lname : Tok::uname;
      while (pos_ < src_.size()) {
        const auto d = static_cast<unsigned char>(src_[pos_]);
        if (!std::isalnum(d) && d != '_') break;
        t.text.push_back(src_[pos_]);
        advance();
      }
      return t;
    }
    std::string found = "'" + std::string(1, c) + "'";
    if (static_cast<unsigned char>(c) >= 0x80) found = "non-ASCII character";
    throw ParseError({origin_, t.line, t.col}, {"identifier", "'('", "')'", "'['", "']'", "','", "'.'"},
                     found);
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::string origin_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view src, std::string origin) : lexer_(src, origin), origin_(std::move(origin)) {
    cur_ = lexer_.next();
  }

  bool at_end() const { return cur_.kind == Tok::end; }

  Rule statement() {
    const SourceSpan start = span_of(cur_);
    bindings_.clear();
    expect_keyword("rule", "'rule'");
    expect(Tok::lparen, "'('");
    Term label = label_term();
    expect(Tok::comma, "','");
    Head head = head_term();
    expect(Tok::comma, "','");
    std::vector<Literal> body = body_list();
    expect(Tok::rparen, "')'");
    expect(Tok::dot, "'.'");

    Rule r{std::move(label), std::move(head), std::move(body), start};
    return substitute(strip_bindings(r), bindings_);
  }

  Goal goal() {
    bindings_.clear();
    Literal l = literal(false);
    if (cur_.kind == Tok::dot) shift();
    if (!at_end()) fail({"end of input"});
    Goal g;
    g.literal = substitute(strip(l), bindings_);
    g.bindings = bindings_;
    return g;
  }

  Term lone_label() {
    bindings_.clear();
    Term t = label_term();
    if (!at_end()) fail({"end of input"});
    return substitute(strip(t), bindings_);
  }

 private:
  SourceSpan span_of(const Token& t) const { return {origin_, t.line, t.col}; }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw ParseError(span_of(cur_), std::move(expected), show(cur_));
  }

  Token shift() {
    Token t = cur_;
    cur_ = lexer_.next();
    return t;
  }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail({what});
    return shift();
  }

  void expect_keyword(const char* word, const char* what) {
    if (cur_.kind != Tok::lname || cur_.text != word) fail({what});
    shift();
  }

  static bool reserved(const std::string& name) { return name == "neg" || name == "prefer"; }

  Term label_term() {
    if (cur_.kind != Tok::lname || reserved(cur_.text) || cur_.text == "rule") fail({"rule label"});
    Token name = shift();
    return Term::compound(name.text, argument_list());
  }

  std::vector<Term> argument_list() {
    std::vector<Term> args;
    if (cur_.kind != Tok::lparen) return args;
    shift();
    args.push_back(term());
    while (cur_.kind == Tok::comma) {
      shift();
      args.push_back(term());
    }
    expect(Tok::rparen, "')'");
    return args;
  }

  Term term() {
    if (cur_.kind == Tok::uname) {
      Token var = shift();
      if (cur_.kind != Tok::equals) return Term::variable(var.text);
      shift();
      if (cur_.kind != Tok::lname || reserved(cur_.text)) fail({"constant"});
      Token value = shift();
      if (cur_.kind == Tok::lparen) fail({"')'", "','"});
      auto [it, inserted] = bindings_.emplace(var.text, value.text);
      if (!inserted && it->second != value.text) {
        throw ParseError(span_of(var), {var.text + " = " + it->second}, "conflicting binding " +
                                                                           var.text + " = " + value.text);
      }
      return Term{Term::Kind::binding, var.text, {Term::constant(value.text)}};
    }
    if (cur_.kind == Tok::lname) {
      if (reserved(cur_.text)) fail({"term"});
      Token name = shift();
      if (cur_.kind == Tok::lparen) return Term::compound(name.text, argument_list());
      return Term::constant(name.text);
    }
    fail({"variable", "constant"});
  }

  Term atom() {
    if (cur_.kind != Tok::lname || reserved(cur_.text)) fail({"atom"});
    Token name = shift();
    return Term::compound(name.text, argument_list());
  }

  Literal literal(bool allow_prefer) {
    if (cur_.kind == Tok::lname && cur_.text == "neg") {
      shift();
      expect(Tok::lparen, "'('");
      if (cur_.kind == Tok::lname && cur_.text == "neg") {
        throw ParseError(span_of(cur_), {"atom"}, "double negation 'neg(neg(...))'");
      }
      Literal l{true, atom()};
      expect(Tok::rparen, "')'");
      return l;
    }
    if (!allow_prefer && cur_.kind == Tok::lname && cur_.text == "prefer") {
      throw ParseError(span_of(cur_), {"literal"}, "'prefer' outside a rule head");
    }
    return Literal{false, atom()};
  }

  Head head_term() {
    if (cur_.kind == Tok::lname && cur_.text == "prefer") {
      shift();
      expect(Tok::lparen, "'('");
      Term stronger = label_term();
      expect(Tok::comma, "','");
      Term weaker = label_term();
      expect(Tok::rparen, "')'");
      return PreferenceAtom{std::move(stronger), std::move(weaker)};
    }
    return literal(true);
  }

  std::vector<Literal> body_list() {
    std::vector<Literal> body;
    expect(Tok::lbracket, "'['");
    if (cur_.kind == Tok::rbracket) {
      shift();
      return body;
    }
    body.push_back(literal(false));
    while (cur_.kind == Tok::comma) {
      shift();
      body.push_back(literal(false));
    }
    expect(Tok::rbracket, "']'");
    return body;
  }

  static Term strip(const Term& t) {
    if (t.kind == Term::Kind::binding) return t.args.front();
    Term out{t.kind, t.name, {}};
    for (const auto& a : t.args) out.args.push_back(strip(a));
    return out;
  }

  static Literal strip(const Literal& l) { return {l.negative, strip(l.atom)}; }

  static Rule strip_bindings(const Rule& r) {
    Rule out;
    out.label = strip(r.label);
    if (r.is_preference()) {
      out.head = PreferenceAtom{strip(r.head_preference().stronger), strip(r.head_preference().weaker)};
    } else {
      out.head = strip(r.head_literal());
    }
    for (const auto& l : r.body) out.body.push_back(strip(l));
    out.span = r.span;
    return out;
  }

  Lexer lexer_;
  std::string origin_;
  Token cur_;
  Substitution bindings_;
};

}  // namespace

ParseError::ParseError(SourceSpan where, std::vector<std::string> expected, std::string found)
    : std::runtime_error(format_error(where, expected, found)),
      where_(std::move(where)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Program parse_program(std::string_view source, const std::string& origin) {
  Program p;
  p.provenance.push_back(origin);
  Parser parser(source, origin);
  while (!parser.at_end()) p.rules.push_back(parser.statement());
  return p;
}

Program parse_program_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_program(buf.str(), path);
}

Goal parse_goal(std::string_view text) { return Parser(text, "<goal>").goal(); }

Term parse_label(std::string_view text) { return Parser(text, "<label>").lone_label(); }

bool is_valid_name(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool is_valid_variable(std::string_view s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace argsel
