#include "cobalg/rational.hpp"

#include <cctype>

namespace cobalg {

Rational Rational::parse(std::string_view text) {
  const std::string shown(text);
  std::size_t i = 0;
  auto fail = [&]() -> Rational { throw ParseError("bad rational '" + shown + "'"); };

  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return fail();

  mpz_class den(1);
  std::size_t num_end = i;
  if (i < text.size()) {
    if (text[i] != '/') return fail();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return fail();
    den = mpz_class(std::string(text.substr(den_begin)), 10);
    if (den == 0) return fail();
  }

  mpz_class num(std::string(text.substr(0, num_end)), 10);
  return Rational(num, den);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace cobalg
