#pragma once

// Text and JSON serialization of polynomials.
//
// Text:  -1*m[1,2]*m[2,1] + 1*m[1,1]*m[2,2]
//   terms largest first, coefficient always written, variables row-major,
//   exponents as ^e, the auxiliary variable as t, zero as 0.
// JSON:  [{"coeff":"-1","monomial":[[1,2,1],[2,1,1]]}, ...]
//   coefficients are reduced fractions "p/q" (the "/q" is dropped when q = 1);
//   the auxiliary variable is [0,0,e].

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "polynomial.hpp"

namespace nwunion {

inline std::string to_string(const Rational& q) {
  return q.str();
}

inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  auto parse_int = [](std::string_view t) {
    if (t.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bad integer '" + std::string(t) + "'");
    for (std::size_t k = i; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k])))
        throw std::invalid_argument("bad integer '" + std::string(t) + "'");
    return boost::multiprecision::cpp_int(std::string(t[0] == '+' ? t.substr(1) : t));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  auto den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_int(s.substr(0, slash)), den);
}

inline std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& f : m.row_major()) {
    if (!out.empty()) out += '*';
    if (f.var.is_aux()) {
      out += 't';
    } else {
      out += "m[" + std::to_string(f.var.cell.row) + ',' + std::to_string(f.var.cell.col) + ']';
    }
    if (f.exp != 1) out += '^' + std::to_string(f.exp);
  }
  return out;
}

template <class Order>
std::string to_string(const BasicPolynomial<Order>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      out += to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += to_string(c < 0 ? Rational(-c) : c);
    }
    if (!t.mono.is_one()) out += '*' + to_string(t.mono);
    first = false;
  }
  return out;
}

namespace detail {

class PolyTextParser {
 public:
  explicit PolyTextParser(std::string_view s) : s_(s) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    if (peek() == '0' && rest_is_blank(pos_ + 1)) return terms;
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = (get() == '-') ? -1 : 1;
      skip_ws();
    }
    terms.push_back(term(sign));
    skip_ws();
    while (pos_ < s_.size()) {
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      skip_ws();
      terms.push_back(term(op == '-' ? -1 : 1));
      skip_ws();
    }
    return terms;
  }

 private:
  Term term(int sign) {
    Term t{Rational(sign), Monomial{}};
    bool any = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
        t.coeff *= number();
      } else if (c == 'm') {
        t.mono = t.mono * variable();
      } else if (c == 't') {
        ++pos_;
        t.mono = t.mono * Monomial::of(Variable::aux(), exponent());
      } else {
        fail("expected coefficient or variable");
      }
      any = true;
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    return t;
  }

  Rational number() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    return parse_rational(s_.substr(start, pos_ - start));
  }

  Monomial variable() {
    expect('m');
    expect('[');
    int r = integer();
    expect(',');
    int c = integer();
    expect(']');
    if (r < 1 || c < 1) fail("variable index must be positive");
    return Monomial::of(Cell{r, c}, exponent());
  }

  int exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    return integer();
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    skip_ws();
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (get() != c) fail(std::string("expected '") + c + "'");
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool rest_is_blank(std::size_t from) const {
    for (std::size_t i = from; i < s_.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(s_[i]))) return false;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Inverse of to_string; also accepts any term order and omitted "1*".
template <class Order = AntidiagonalLex>
BasicPolynomial<Order> parse_polynomial(std::string_view text) {
  return BasicPolynomial<Order>::from_terms(detail::PolyTextParser(text).parse());
}

inline nlohmann::json monomial_to_json(const Monomial& m) {
  auto arr = nlohmann::json::array();
  for (const auto& f : m.row_major()) arr.push_back({f.var.cell.row, f.var.cell.col, f.exp});
  return arr;
}

template <class Order>
nlohmann::json to_json(const BasicPolynomial<Order>& p) {
  auto arr = nlohmann::json::array();
  for (const auto& t : p.terms())
    arr.push_back({{"coeff", to_string(t.coeff)}, {"monomial", monomial_to_json(t.mono)}});
  return arr;
}

template <class Order = AntidiagonalLex>
BasicPolynomial<Order> polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    Term term{parse_rational(t.at("coeff").get<std::string>()), Monomial{}};
    for (const auto& f : t.at("monomial")) {
      if (!f.is_array() || f.size() != 3) throw std::invalid_argument("monomial factor must be [row,col,exp]");
      const int r = f[0].get<int>(), c = f[1].get<int>(), e = f[2].get<int>();
      const bool aux = (r == 0 && c == 0);
      if (!aux && (r < 1 || c < 1)) throw std::invalid_argument("variable index must be positive");
      if (e < 1) throw std::invalid_argument("exponent must be positive");
      term.mono = term.mono * Monomial::of(aux ? Variable::aux() : Variable{Cell{r, c}}, e);
    }
    terms.push_back(std::move(term));
  }
  return BasicPolynomial<Order>::from_terms(std::move(terms));
}

}  // namespace nwunion
