#include "hoppe/polycore/parser.hpp"

#include <cctype>
#include <string>

#include "hoppe/common/error.hpp"

namespace hoppe {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ambient& ambient) : s_(text), amb_(ambient) {}

  RationalPolynomial parse() {
    RationalPolynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalPolynomial expr() {
    RationalPolynomial acc = accept('-') ? -term() : term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc += -term();
      else
        return acc;
    }
  }

  RationalPolynomial term() {
    RationalPolynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  RationalPolynomial factor() {
    RationalPolynomial b = base();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw SyntaxError("expected exponent", start);
      if (digits.size() > 6) throw SyntaxError("exponent too large", start);
      b = b.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  RationalPolynomial base() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalPolynomial inner = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits = read_digits();
      if (pos_ < s_.size() && std::islower(static_cast<unsigned char>(s_[pos_])))
        throw SyntaxError("implicit multiplication is not allowed", pos_);
      return RationalPolynomial::constant(amb_, mpq_class(mpz_class(digits)));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[pos_])) ||
                                  std::isdigit(static_cast<unsigned char>(s_[pos_]))))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = amb_.var_index(name);
      if (!idx)
        throw UnknownVariable("'" + name + "' at byte " + std::to_string(start) +
                              " is not a variable of " + amb_.describe());
      return RationalPolynomial::variable(amb_, *idx);
    }
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  const Ambient& amb_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPolynomial parse_poly(std::string_view text, const Ambient& ambient) {
  return Parser(text, ambient).parse();
}

}  // namespace hoppe
