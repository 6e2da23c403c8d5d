// Copyright 2026 The mctsynth Authors
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

#include <cctype>
#include <sstream>

#include "mctsynth/errors.hpp"
#include "mctsynth/gate_code.hpp"
#include "mctsynth/smv.hpp"

namespace mctsynth::smv {

const char* to_string(SpecLogic logic) noexcept {
  return logic == SpecLogic::ltl ? "ltl" : "ctl";
}

SpecLogic spec_logic_from_string(std::string_view text) {
  if (text == "ltl") return SpecLogic::ltl;
  if (text == "ctl") return SpecLogic::ctl;
  throw Error(ErrorKind::configuration, "unknown spec logic '" + std::string(text) + "'");
}

std::string gate_bit_name(int index) { return "g" + std::to_string(index); }

std::string state_bit_name(Word word, int line) {
  return "s" + std::to_string(word) + "_" + std::to_string(line);
}

namespace {

std::string literal(const std::string& name, bool positive) {
  return positive ? name : "!" + name;
}

// Conjunction over the target field matching `target`, "TRUE" when the field
// is empty (n = 1).
std::string target_condition(int lines, int target) {
  const int width = target_field_width(lines);
  if (width == 0) return "TRUE";
  std::string out;
  for (int i = 0; i < width; ++i) {
    if (i) out += " & ";
    out += literal(gate_bit_name(i), (target >> (width - 1 - i)) & 1);
  }
  return out;
}

// Right-hand side of the MCT next-state relation for line `line` of the
// instance that started at `word`.
std::string fire_expression(int lines, Word word, int line) {
  const int width = target_field_width(lines);
  const int flags = lines - 1;
  if (flags == 0) return "TRUE";
  std::string out;
  for (int j = 0; j < flags; ++j) {
    const int other = j < line ? j : j + 1;
    if (j) out += " & ";
    out += "(!" + gate_bit_name(width + j) + " | " + state_bit_name(word, other) + ")";
  }
  return flags == 1 ? out : "(" + out + ")";
}

}  // namespace

Model emit_model(const Permutation& goal, SpecLogic logic) {
  const int n = goal.lines();
  if (n < 1 || n > kMaxEmitLines) {
    throw Error(ErrorKind::range, "model emission supports 1.." + std::to_string(kMaxEmitLines) +
                                      " lines, got " + std::to_string(n));
  }
  const int bits = code_width(n);
  const int width = target_field_width(n);
  const Word words = Word{1} << n;

  std::ostringstream out;
  out << "-- MCT gate cascade synthesis, " << n << " line" << (n == 1 ? "" : "s") << "\n";
  out << "-- goal: " << goal.to_string() << "\n";
  if (bits == 0) {
    out << "-- single line: the only gate is NOT, no gate bits\n";
  } else {
    out << "-- gate code g0..g" << bits - 1 << " (msb first): " << width
        << " target bit(s), " << n - 1 << " control flag(s)\n";
  }
  out << "MODULE main\n";
  out << "VAR\n";
  for (int i = 0; i < bits; ++i) out << "  " << gate_bit_name(i) << " : boolean;\n";
  for (Word w = 0; w < words; ++w) {
    for (int line = 0; line < n; ++line) out << "  " << state_bit_name(w, line) << " : boolean;\n";
  }

  out << "DEFINE\n";
  out << "  goal :=\n";
  for (Word w = 0; w < words; ++w) {
    out << (w == 0 ? "      (" : "    & (");
    for (int line = 0; line < n; ++line) {
      if (line) out << " & ";
      out << literal(state_bit_name(w, line), goal[w] & line_bit(n, line));
    }
    out << ")" << (w + 1 == words ? ";" : "") << "\n";
  }

  out << "ASSIGN\n";
  if (bits > 0) out << "  -- gate selection: every bit may flip or stay at each step\n";
  for (int i = 0; i < bits; ++i) {
    const auto g = gate_bit_name(i);
    out << "  next(" << g << ") := {" << g << ", !" << g << "};\n";
  }
  for (Word w = 0; w < words; ++w) {
    out << "  -- transition instance for input word " << w << "\n";
    for (int line = 0; line < n; ++line) {
      const auto s = state_bit_name(w, line);
      out << "  init(" << s << ") := " << ((w & line_bit(n, line)) ? "TRUE" : "FALSE") << ";\n";
      const auto flip = s + " xor " + fire_expression(n, w, line);
      if (width == 0) {
        out << "  next(" << s << ") := " << flip << ";\n";
      } else {
        out << "  next(" << s << ") := case\n";
        out << "      " << target_condition(n, line) << " : " << flip << ";\n";
        out << "      TRUE : " << s << ";\n";
        out << "    esac;\n";
      }
    }
  }

  if ((1 << width) != n) {
    out << "INVAR\n  ";
    for (int t = 0; t < n; ++t) {
      if (t) out << " | ";
      out << "(" << target_condition(n, t) << ")";
    }
    out << ";\n";
  }

  if (logic == SpecLogic::ltl) {
    out << "LTLSPEC !(F goal);\n";
  } else {
    out << "CTLSPEC !(EF goal);\n";
  }
  return Model{n, goal, logic, out.str()};
}

// ---------------------------------------------------------------------------
// Reader for the emitted subset

namespace {

struct Token {
  enum class Kind { ident, symbol, end };
  Kind kind;
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Kind::ident, std::string(src.substr(i, j - i)), line});
      i = j;
    } else if (c == ':' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Token::Kind::symbol, ":=", line});
      i += 2;
    } else if (std::string_view("():;{},!&|").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), line});
      ++i;
    } else {
      throw Error(ErrorKind::parse,
                  "line " + std::to_string(line) + ": unexpected character '" + c + "'");
    }
  }
  out.push_back({Token::Kind::end, "", line});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  ExprPtr expression() {
    auto left = conjunction();
    while (is("|") || is("xor")) {
      const bool exclusive = take().text == "xor";
      auto right = conjunction();
      auto e = std::make_shared<Expr>();
      e->op = exclusive ? Expr::Op::exclusive : Expr::Op::disj;
      e->operands = {left, right};
      left = e;
    }
    return left;
  }

  ParsedModel model() {
    ParsedModel m;
    expect("MODULE");
    expect("main");
    enum class Section { none, var, define, assign } section = Section::none;
    while (!at_end()) {
      if (is("VAR")) {
        take();
        section = Section::var;
      } else if (is("DEFINE")) {
        take();
        section = Section::define;
      } else if (is("ASSIGN")) {
        take();
        section = Section::assign;
      } else if (is("INVAR")) {
        take();
        m.invariants.push_back(expression());
        optional(";");
        section = Section::none;
      } else if (is("LTLSPEC") || is("CTLSPEC")) {
        m.logic = take().text == "LTLSPEC" ? SpecLogic::ltl : SpecLogic::ctl;
        expect("!");
        expect("(");
        expect(m.logic == SpecLogic::ltl ? "F" : "EF");
        m.spec_target = identifier();
        expect(")");
        optional(";");
        section = Section::none;
      } else if (section == Section::var) {
        const auto name = identifier();
        expect(":");
        expect("boolean");
        expect(";");
        m.variables.push_back(name);
      } else if (section == Section::define) {
        const auto name = identifier();
        expect(":=");
        m.defines[name] = expression();
        expect(";");
      } else if (section == Section::assign) {
        const bool is_init = is("init");
        if (!is_init && !is("next")) fail("expected init(...) or next(...)");
        take();
        expect("(");
        const auto name = identifier();
        expect(")");
        expect(":=");
        if (!is_init && is("{")) {
          // {x, !x}: free choice
          take();
          expect(name);
          expect(",");
          expect("!");
          expect(name);
          expect("}");
          m.free_next.push_back(name);
        } else {
          (is_init ? m.init : m.next)[name] = expression();
        }
        expect(";");
      } else {
        fail("unexpected '" + peek().text + "'");
      }
    }
    return m;
  }

  bool at_end() const { return peek().kind == Token::Kind::end; }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse, "line " + std::to_string(peek().line) + ": " + what);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool is(std::string_view text) const {
    return peek().kind != Token::Kind::end && peek().text == text;
  }
  Token take() { return tokens_[pos_++]; }
  void expect(std::string_view text) {
    if (!is(text)) fail("expected '" + std::string(text) + "', found '" + peek().text + "'");
    take();
  }
  void optional(std::string_view text) {
    if (is(text)) take();
  }
  std::string identifier() {
    if (peek().kind != Token::Kind::ident) fail("expected identifier, found '" + peek().text + "'");
    return take().text;
  }

  ExprPtr conjunction() {
    auto left = unary();
    while (is("&")) {
      take();
      auto right = unary();
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::conj;
      e->operands = {left, right};
      left = e;
    }
    return left;
  }

  ExprPtr unary() {
    if (is("!")) {
      take();
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::negate;
      e->operands = {unary()};
      return e;
    }
    return primary();
  }

  ExprPtr primary() {
    auto e = std::make_shared<Expr>();
    if (is("(")) {
      take();
      auto inner = expression();
      expect(")");
      return inner;
    }
    if (is("TRUE") || is("FALSE")) {
      e->op = Expr::Op::constant;
      e->value = take().text == "TRUE";
      return e;
    }
    if (is("case")) {
      take();
      e->op = Expr::Op::choice;
      while (!is("esac")) {
        if (at_end()) fail("unterminated case");
        auto cond = expression();
        expect(":");
        auto value = expression();
        expect(";");
        e->cases.emplace_back(cond, value);
      }
      take();
      return e;
    }
    e->op = Expr::Op::variable;
    e->name = identifier();
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text) {
  Parser p(text);
  auto e = p.expression();
  if (!p.at_end()) p.fail("trailing input after expression");
  return e;
}

bool evaluate(const Expr& expr, const Valuation& env) {
  switch (expr.op) {
    case Expr::Op::constant:
      return expr.value;
    case Expr::Op::variable: {
      const auto it = env.find(expr.name);
      if (it == env.end()) throw Error(ErrorKind::parse, "unbound variable '" + expr.name + "'");
      return it->second;
    }
    case Expr::Op::negate:
      return !evaluate(*expr.operands[0], env);
    case Expr::Op::conj:
      return evaluate(*expr.operands[0], env) && evaluate(*expr.operands[1], env);
    case Expr::Op::disj:
      return evaluate(*expr.operands[0], env) || evaluate(*expr.operands[1], env);
    case Expr::Op::exclusive:
      return evaluate(*expr.operands[0], env) != evaluate(*expr.operands[1], env);
    case Expr::Op::choice:
      for (const auto& [cond, value] : expr.cases) {
        if (evaluate(*cond, env)) return evaluate(*value, env);
      }
      throw Error(ErrorKind::parse, "no case branch applies");
  }
  return false;
}

ParsedModel parse_model(std::string_view text) { return Parser(text).model(); }

}  // namespace mctsynth::smv
