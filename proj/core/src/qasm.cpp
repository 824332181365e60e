// Copyright 2026 The qobf Authors
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

#include "qobf/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "qobf/error.hpp"

namespace qobf {

namespace {

enum class Tok { Ident, Number, String, Symbol, Arrow, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= src_.size()) {
      t.type = Tok::End;
      return t;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Tok::Ident;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        t.text += advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && pos_ + 1 < src_.size() &&
                                                                std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      t.type = Tok::Number;
      while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
        t.text += advance();
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        t.text += advance();
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
          t.text += advance();
        }
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          t.text += advance();
        }
      }
    } else if (c == '"') {
      t.type = Tok::String;
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
        t.text += advance();
      }
      if (pos_ >= src_.size() || src_[pos_] != '"') {
        throw ParseError("unterminated string", t.line, t.column);
      }
      advance();
    } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      t.type = Tok::Arrow;
      t.text = "->";
      advance();
      advance();
    } else {
      t.type = Tok::Symbol;
      t.text = std::string(1, advance());
    }
    return t;
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          advance();
        }
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t n, std::int64_t d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    return g > 1 ? Rational{n / g, d / g} : Rational{n, d};
  }
};

/// Expression value: a double plus, when exact, its rational coefficient of
/// pi (pi_power == 1) or its rational value (pi_power == 0).
struct Value {
  double value = 0.0;
  std::optional<Rational> exact;
  int pi_power = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { advance(); }

  Circuit parse() {
    std::optional<Circuit> circuit;
    std::string qreg_name;
    std::vector<bool> measured;
    std::vector<Qubit> measured_list;

    while (cur_.type != Tok::End) {
      const Token head = cur_;
      if (head.type != Tok::Ident) {
        fail("expected a statement", head);
      }
      if (head.text == "OPENQASM") {
        advance();
        if (cur_.type != Tok::Number) {
          fail("expected version number", cur_);
        }
        advance();
        expect(";");
      } else if (head.text == "include") {
        advance();
        if (cur_.type != Tok::String) {
          fail("expected include file name", cur_);
        }
        advance();
        expect(";");
      } else if (head.text == "qreg" || head.text == "creg") {
        advance();
        const Token name = expect_ident();
        expect("[");
        const std::size_t size = expect_index();
        expect("]");
        expect(";");
        if (head.text == "qreg") {
          if (circuit) {
            fail("only one qreg is supported", head);
          }
          if (size == 0) {
            fail("qreg must have at least one qubit", head);
          }
          circuit.emplace(size);
          qreg_name = name.text;
          measured.assign(size, false);
        }
      } else if (head.text == "measure") {
        advance();
        require_register(circuit, head);
        const auto targets = parse_qargs(qreg_name, circuit->num_qubits(), /*allow_whole=*/true);
        if (cur_.type != Tok::Arrow) {
          fail("expected '->'", cur_);
        }
        advance();
        expect_ident();
        if (is_symbol("[")) {
          advance();
          expect_index();
          expect("]");
        }
        expect(";");
        for (Qubit q : targets) {
          if (!measured[q]) {
            measured[q] = true;
            measured_list.push_back(q);
          }
        }
      } else if (head.text == "barrier") {
        fail("unsupported statement 'barrier'", head);
      } else {
        const auto kind = gate_kind_from_name(head.text);
        if (!kind) {
          fail("unsupported gate '" + head.text + "'", head);
        }
        advance();
        require_register(circuit, head);
        std::vector<Angle> params;
        if (is_symbol("(")) {
          advance();
          params.push_back(to_angle(parse_expr()));
          while (is_symbol(",")) {
            advance();
            params.push_back(to_angle(parse_expr()));
          }
          expect(")");
        }
        if (params.size() != gate_param_count(*kind)) {
          fail("gate '" + head.text + "' expects " + std::to_string(gate_param_count(*kind)) + " parameter(s)", head);
        }
        const auto qubits = parse_qargs(qreg_name, circuit->num_qubits(), /*allow_whole=*/false);
        expect(";");
        if (qubits.size() != gate_arity(*kind)) {
          fail("gate '" + head.text + "' expects " + std::to_string(gate_arity(*kind)) + " qubit(s)", head);
        }
        for (Qubit q : qubits) {
          if (measured[q]) {
            fail("mid-circuit measurement: qubit " + std::to_string(q) + " is used after being measured", head);
          }
        }
        try {
          circuit->add(*kind, std::span<const Qubit>(qubits), std::move(params));
        } catch (const Error &e) {
          fail(e.what(), head);
        }
      }
    }
    if (!circuit) {
      throw ParseError("no qreg declared", cur_.line, cur_.column);
    }
    circuit->set_measured(measured_list);
    return std::move(*circuit);
  }

 private:
  [[noreturn]] void fail(const std::string &msg, const Token &at) { throw ParseError(msg, at.line, at.column); }

  void advance() { cur_ = lex_.next(); }

  bool is_symbol(std::string_view s) const { return cur_.type == Tok::Symbol && cur_.text == s; }

  void expect(std::string_view s) {
    if (!is_symbol(s)) {
      fail("expected '" + std::string(s) + "'", cur_);
    }
    advance();
  }

  Token expect_ident() {
    if (cur_.type != Tok::Ident) {
      fail("expected identifier", cur_);
    }
    Token t = cur_;
    advance();
    return t;
  }

  std::size_t expect_index() {
    if (cur_.type != Tok::Number || cur_.text.find_first_not_of("0123456789") != std::string::npos) {
      fail("expected non-negative integer", cur_);
    }
    const std::size_t v = std::stoul(cur_.text);
    advance();
    return v;
  }

  void require_register(const std::optional<Circuit> &c, const Token &at) {
    if (!c) {
      fail("statement before qreg declaration", at);
    }
  }

  std::vector<Qubit> parse_qargs(const std::string &reg, std::size_t width, bool allow_whole) {
    std::vector<Qubit> out;
    do {
      if (!out.empty()) {
        advance();
      }
      const Token name = expect_ident();
      if (name.text != reg) {
        fail("unknown register '" + name.text + "'", name);
      }
      if (is_symbol("[")) {
        advance();
        const Token at = cur_;
        const std::size_t idx = expect_index();
        expect("]");
        if (idx >= width) {
          fail("qubit index " + std::to_string(idx) + " out of range", at);
        }
        out.push_back(static_cast<Qubit>(idx));
      } else if (allow_whole) {
        for (Qubit q = 0; q < width; ++q) {
          out.push_back(q);
        }
      } else {
        fail("expected '['", cur_);
      }
    } while (is_symbol(","));
    return out;
  }

  // expr := term (('+'|'-') term)*
  Value parse_expr() {
    Value v = parse_term();
    while (is_symbol("+") || is_symbol("-")) {
      const bool plus = cur_.text == "+";
      advance();
      Value r = parse_term();
      v = add(v, plus ? r : negate(r));
    }
    return v;
  }

  // term := unary (('*'|'/') unary)*
  Value parse_term() {
    Value v = parse_unary();
    while (is_symbol("*") || is_symbol("/")) {
      const bool mul = cur_.text == "*";
      const Token at = cur_;
      advance();
      Value r = parse_unary();
      v = mul ? multiply(v, r) : divide(v, r, at);
    }
    return v;
  }

  Value parse_unary() {
    if (is_symbol("-")) {
      advance();
      return negate(parse_unary());
    }
    if (is_symbol("+")) {
      advance();
      return parse_unary();
    }
    return parse_primary();
  }

  Value parse_primary() {
    if (is_symbol("(")) {
      advance();
      Value v = parse_expr();
      expect(")");
      return v;
    }
    if (cur_.type == Tok::Ident && cur_.text == "pi") {
      advance();
      return Value{std::numbers::pi, Rational{1, 1}, 1};
    }
    if (cur_.type == Tok::Number) {
      const Token t = cur_;
      advance();
      Value v;
      try {
        v.value = std::stod(t.text);
      } catch (const std::exception &) {
        fail("malformed number '" + t.text + "'", t);
      }
      if (t.text.find_first_not_of("0123456789") == std::string::npos && t.text.size() < 18) {
        v.exact = Rational{std::stoll(t.text), 1};
      }
      return v;
    }
    fail("expected angle expression", cur_);
  }

  static Value negate(Value v) {
    v.value = -v.value;
    if (v.exact) {
      v.exact->num = -v.exact->num;
    }
    return v;
  }

  static Value add(const Value &a, const Value &b) {
    Value out{a.value + b.value, std::nullopt, 0};
    if (a.exact && b.exact) {
      const bool a_zero = a.exact->num == 0;
      const bool b_zero = b.exact->num == 0;
      if (a.pi_power == b.pi_power || a_zero || b_zero) {
        out.pi_power = a_zero ? b.pi_power : a.pi_power;
        out.exact = Rational::make(a.exact->num * b.exact->den + b.exact->num * a.exact->den, a.exact->den * b.exact->den);
      }
    }
    return out;
  }

  static Value multiply(const Value &a, const Value &b) {
    Value out{a.value * b.value, std::nullopt, a.pi_power + b.pi_power};
    if (a.exact && b.exact && out.pi_power <= 1) {
      out.exact = Rational::make(a.exact->num * b.exact->num, a.exact->den * b.exact->den);
    }
    return out;
  }

  Value divide(const Value &a, const Value &b, const Token &at) {
    if (b.value == 0.0) {
      fail("division by zero in angle expression", at);
    }
    Value out{a.value / b.value, std::nullopt, a.pi_power - b.pi_power};
    if (a.exact && b.exact && out.pi_power >= 0 && out.pi_power <= 1) {
      out.exact = Rational::make(a.exact->num * b.exact->den, a.exact->den * b.exact->num);
    }
    return out;
  }

  static Angle to_angle(const Value &v) {
    if (v.exact) {
      if (v.exact->num == 0) {
        return Angle::pi_fraction(0, 0);
      }
      const std::int64_t den = v.exact->den;
      if (v.pi_power == 1 && (den & (den - 1)) == 0) {
        int k = 0;
        while ((std::int64_t{1} << k) < den) {
          ++k;
        }
        return Angle::pi_fraction(v.exact->num, k);
      }
    }
    return Angle::from_radians(v.value);
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

Circuit parse_qasm(std::string_view text) { return Parser(text).parse(); }

std::string emit_qasm(const Circuit &circuit, std::string_view header_comment) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (!header_comment.empty()) {
    std::istringstream lines{std::string(header_comment)};
    std::string line;
    while (std::getline(lines, line)) {
      os << "// " << line << '\n';
    }
  }
  os << "qreg q[" << circuit.num_qubits() << "];\n";
  if (!circuit.measured().empty()) {
    os << "creg c[" << circuit.measured().size() << "];\n";
  }
  for (const auto &g : circuit) {
    os << g.to_string() << ";\n";
  }
  for (std::size_t i = 0; i < circuit.measured().size(); ++i) {
    os << "measure q[" << circuit.measured()[i] << "] -> c[" << i << "];\n";
  }
  return os.str();
}

}  // namespace qobf
