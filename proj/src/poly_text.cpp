#include "macaulay/poly_text.hpp"

#include <cctype>
#include <sstream>

#include "macaulay/errors.hpp"

namespace macaulay {
namespace {

class TermParser {
 public:
  TermParser(std::string_view text, std::size_t num_vars, char letter)
      : text_(text), num_vars_(num_vars), letter_(letter) {}

  template <class Sink>
  void parse(Sink&& add) {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      auto [e, c] = term();
      add(e, c * sign);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<Exponent, Rational> term() {
    Exponent e(num_vars_);
    Rational c = 1;
    bool expect_factor = true;
    skip_ws();
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      Integer num(digits());
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = Integer(digits());
        if (den == 0) throw ParseError("zero denominator", start);
      }
      c = Rational(num, den);
      c.canonicalize();
      skip_ws();
      if (at_end() || peek() != '*') return {e, c};
      ++pos_;
    }
    while (expect_factor) {
      factor(e);
      skip_ws();
      expect_factor = !at_end() && peek() == '*';
      if (expect_factor) ++pos_;
    }
    return {e, c};
  }

  void factor(Exponent& e) {
    skip_ws();
    if (at_end() || peek() != letter_) throw ParseError(std::string("expected variable '") + letter_ + "<i>'", pos_);
    ++pos_;
    std::size_t index_pos = pos_;
    unsigned long index = std::stoul(digits());
    if (index < 1 || index > num_vars_)
      throw ParseError("variable index " + std::to_string(index) + " outside 1.." + std::to_string(num_vars_), index_pos);
    int power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      power = std::stoi(digits());
    }
    e[index - 1] += power;
  }

  std::string_view text_;
  std::size_t num_vars_;
  char letter_;
  std::size_t pos_ = 0;
};

std::string format_terms(const detail::TermMap::Map& terms, char letter) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = e.degree() == 0;
    if (constant || mag != 1) os << to_string(mag) << (constant ? "" : "*");
    bool first_var = true;
    for (std::size_t i = 0; i < e.num_vars(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << letter << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

}  // namespace

DualPolynomial parse_dual(std::string_view text, std::size_t num_vars) {
  DualPolynomial g(num_vars);
  TermParser(text, num_vars, 'y').parse([&](const Exponent& e, const Rational& c) { g.add_term(e, c); });
  return g;
}

JetPolynomial parse_jet(std::string_view text, std::size_t num_vars, int truncation_order) {
  JetPolynomial f(num_vars, truncation_order);
  TermParser(text, num_vars, 'x').parse([&](const Exponent& e, const Rational& c) { f.add_term(e, c); });
  return f;
}

std::string format(const DualPolynomial& g) { return format_terms(g.terms(), 'y'); }
std::string format(const JetPolynomial& f) { return format_terms(f.terms(), 'x'); }

}  // namespace macaulay
