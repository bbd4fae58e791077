#include "cobalg/chow.hpp"

#include <cctype>

namespace cobalg {

ProjProduct ProjProduct::parse(std::string_view text) {
  std::vector<int> factors;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != 'P') throw ParseError("bad variety '" + std::string(text) + "' (expected 'P')");
    ++i;
    std::size_t start = i;
    int r = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      r = r * 10 + (text[i] - '0');
      ++i;
    }
    if (i == start || r < 1)
      throw ParseError("bad variety '" + std::string(text) + "' (factor dimension)");
    factors.push_back(r);
    if (i < text.size()) {
      if (text[i] != 'x')
        throw ParseError("bad variety '" + std::string(text) + "' (expected 'x')");
      ++i;
      if (i == text.size())
        throw ParseError("bad variety '" + std::string(text) + "' (trailing 'x')");
    }
  }
  if (factors.empty()) throw ParseError("bad variety '" + std::string(text) + "'");
  return ProjProduct(std::move(factors));
}

std::string ProjProduct::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += 'x';
    out += "P" + std::to_string(factors[i]);
  }
  return out;
}

ChowClass<Rational> specialize(const ChowClass<LazardElement>& x, const GenusSpec& spec) {
  ChowClass<Rational> out(x.base());
  for (const auto& [e, c] : x.terms()) out.add_term(e, specialize(c, spec));
  return out;
}

LineBundleSpec LineBundleSpec::parse(std::string_view text, const ProjProduct& base) {
  const std::string shown(text);
  auto fail = [&]() -> LineBundleSpec { throw ParseError("bad line bundle '" + shown + "'"); };
  if (text.size() < 4 || text[0] != 'O' || text[1] != '(' || text.back() != ')') return fail();
  std::vector<int> degrees;
  std::size_t i = 2;
  const std::size_t end = text.size() - 1;
  while (i < end) {
    bool neg = false;
    if (text[i] == '-') {
      neg = true;
      ++i;
    }
    std::size_t start = i;
    int value = 0;
    while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      ++i;
    }
    if (i == start) return fail();
    degrees.push_back(neg ? -value : value);
    if (i < end) {
      if (text[i] != ',') return fail();
      ++i;
      if (i == end) return fail();
    }
  }
  if (degrees.size() != base.factors.size())
    throw ParseError("line bundle '" + shown + "' has " + std::to_string(degrees.size()) +
                     " degrees but the variety has " + std::to_string(base.factors.size()) +
                     " factors");
  return LineBundleSpec(base, std::move(degrees));
}

std::string LineBundleSpec::str() const {
  std::string out = "O(";
  for (std::size_t i = 0; i < multidegree.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(multidegree[i]);
  }
  return out + ")";
}

}  // namespace cobalg
