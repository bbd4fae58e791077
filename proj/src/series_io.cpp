#include "cobalg/series_io.hpp"

#include <cctype>

namespace cobalg {

namespace {

using LSeries = TruncSeries<LazardElement>;

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> vars, int order)
      : text_(text), vars_(std::move(vars)), order_(order) {}

  LSeries run() {
    LSeries s = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input", pos_);
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& why, std::size_t at) const {
    std::string token = at < text_.size() ? std::string(1, text_[at]) : "<end>";
    throw ParseError("series parse error: " + why + " at '" + token + "' (offset " +
                     std::to_string(at) + ")");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LSeries zero() const { return LSeries(vars_, order_); }
  LSeries constant(LazardElement v) const {
    return LSeries::constant(vars_, order_, std::move(v));
  }

  LSeries expr() {
    bool neg = eat('-');
    LSeries acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  LSeries term() {
    LSeries acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  LSeries factor() {
    LSeries base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t at = pos_;
      long k = natural();
      if (k < 0) fail("exponent expected", at);
      return pow(base, static_cast<int>(k));
    }
    return base;
  }

  long natural() {
    skip_ws();
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("number expected", start);
    return v;
  }

  LSeries atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LSeries inner = expr();
      if (!eat(')')) fail("')' expected", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      natural();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        natural();
      }
      return constant(LazardElement(
          Rational::parse(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name.size() >= 2 && name[0] == 'p' &&
          name.find_first_not_of("0123456789", 1) == std::string::npos) {
        int index = std::stoi(name.substr(1));
        if (index < 1) fail("bad generator index", start);
        return constant(LazardElement::generator(index));
      }
      for (const auto& v : vars_) {
        if (v == name) return LSeries::variable(vars_, order_, name);
      }
      fail("unknown symbol '" + name + "'", start);
    }
    fail("unexpected character", pos_);
  }

  std::string_view text_;
  std::vector<std::string> vars_;
  int order_;
  std::size_t pos_ = 0;
};

}  // namespace

TruncSeries<LazardElement> parse_series(std::string_view text, std::vector<std::string> vars,
                                        int order) {
  return Parser(text, std::move(vars), order).run();
}

TruncSeries<Rational> parse_rational_series(std::string_view text,
                                            std::vector<std::string> vars, int order) {
  return narrow(parse_series(text, std::move(vars), order));
}

TruncSeries<LazardElement> lift(const TruncSeries<Rational>& s) {
  TruncSeries<LazardElement> out(s.vars(), s.order());
  for (const auto& [e, c] : s.terms()) out.add_term(e, LazardElement(c));
  return out;
}

TruncSeries<Rational> narrow(const TruncSeries<LazardElement>& s) {
  TruncSeries<Rational> out(s.vars(), s.order());
  for (const auto& [e, c] : s.terms()) {
    if (!c.is_constant())
      throw Error("series has Lazard-generator coefficients; cannot narrow to rationals");
    out.add_term(e, c.constant_value());
  }
  return out;
}

}  // namespace cobalg
