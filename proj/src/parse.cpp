#include "hilburch/parse.hpp"

#include <cctype>

#include "hilburch/errors.hpp"

namespace hilburch {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Field& field)
      : text_(text), field_(field) {}

  BiPoly parse() {
    BiPoly result(field_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      advance();
    }
    parse_term(result, negative);
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-')
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
      advance();
      parse_term(result, c == '-');
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    ++pos_;
    skip_ws();
  }
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      s += peek();
      advance();
    }
    return s;
  }

  void parse_term(BiPoly& acc, bool negative) {
    if (at_end()) throw ParseError("expected a term", pos_);
    std::size_t start = pos_;
    Scalar coeff = Scalar::one(field_);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      if (!at_end() && peek() == '/') {
        advance();
        den = digits();
        if (den.empty()) throw ParseError("expected denominator", pos_);
      }
      try {
        coeff = Scalar(field_, mpz_class(num), mpz_class(den));
      } catch (const DomainError& e) {
        throw ParseError(e.what(), start);
      }
      have_coeff = true;
    }
    Monomial m;
    bool have_mono = false;
    while (!at_end()) {
      bool star = false;
      const std::size_t star_pos = pos_;
      if (peek() == '*') {
        star = true;
        advance();
      }
      if (at_end() || (peek() != 'x' && peek() != 'y')) {
        if (star) throw ParseError("expected 'x' or 'y' after '*'", pos_);
        break;
      }
      if (star && !have_coeff && !have_mono)
        throw ParseError("term cannot start with '*'", star_pos);
      char var = peek();
      advance();
      int e = 1;
      if (!at_end() && peek() == '^') {
        advance();
        std::string ds = digits();
        if (ds.empty()) throw ParseError("expected exponent", pos_);
        if (ds.size() > 6) throw ParseError("exponent too large", pos_);
        e = std::stoi(ds);
      }
      (var == 'x' ? m.a : m.b) += e;
      have_mono = true;
    }
    if (!have_coeff && !have_mono) throw ParseError("expected a term", pos_);
    acc.add_term(m, negative ? -coeff : coeff);
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view text, const Field& field) {
  return PolyParser(text, field).parse();
}

YPoly parse_ypoly(std::string_view text, const Field& field) {
  BiPoly f = parse_poly(text, field);
  if (!f.is_univariate_y())
    throw ParseError("expected a polynomial in y only: '" + std::string(text) + "'",
                     0);
  return YPoly::from_bipoly(f);
}

std::vector<BiPoly> parse_poly_list(std::string_view text, const Field& field) {
  std::vector<BiPoly> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    bool blank = piece.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (!blank) {
      try {
        out.push_back(parse_poly(piece, field));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in '") + std::string(piece) + "': " + e.message(),
                         start + e.position());
      }
    }
    start = end + 1;
  }
  return out;
}

std::string to_string(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    bool neg = c.sign() < 0;
    Scalar mag = neg ? -c : c;
    if (neg)
      s += "-";
    else if (!first)
      s += "+";
    bool unit_mono = m.a == 0 && m.b == 0;
    if (unit_mono)
      s += mag.to_string();
    else {
      if (!mag.is_one()) s += mag.to_string();
      s += m.to_string();
    }
    first = false;
  }
  return s;
}

std::string to_string(const YPoly& f) { return to_string(f.to_bipoly()); }

}  // namespace hilburch
