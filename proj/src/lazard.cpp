#include "cobalg/lazard.hpp"

#include <algorithm>
#include <functional>

namespace cobalg {

LazardElement LazardElement::generator(int index) {
  if (index < 1) throw Error("generator index must be >= 1");
  return monomial(Partition({index}), Rational(1));
}

LazardElement LazardElement::monomial(const Partition& m, const Rational& coeff) {
  LazardElement x;
  if (!coeff.is_zero()) x.terms_[m] = coeff;
  return x;
}

Rational LazardElement::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("constant_value on non-constant Lazard element");
  return terms_.begin()->second;
}

bool LazardElement::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_) {
    if (m.weight() != d) return false;
  }
  return true;
}

Rational LazardElement::coeff(const Partition& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LazardElement::add_term(const Partition& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LazardElement LazardElement::operator-() const {
  LazardElement out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

LazardElement& LazardElement::operator+=(const LazardElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LazardElement& LazardElement::operator-=(const LazardElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LazardElement operator*(const LazardElement& a, const LazardElement& b) {
  LazardElement out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      std::vector<int> merged;
      merged.reserve(ma.parts().size() + mb.parts().size());
      std::merge(ma.parts().begin(), ma.parts().end(), mb.parts().begin(), mb.parts().end(),
                 std::back_inserter(merged), std::greater<int>());
      out.add_term(Partition(std::move(merged)), ca * cb);
    }
  }
  return out;
}

LazardElement operator*(const LazardElement& a, const Rational& s) {
  LazardElement out;
  if (s.is_zero()) return out;
  for (const auto& [m, c] : a.terms()) out.add_term(m, c * s);
  return out;
}

namespace {

// One monomial without its sign: "1/2*p1^2*p3", "p2", "5".
std::string monomial_body(const Partition& m, const Rational& abs_coeff) {
  std::string gens;
  const auto& parts = m.parts();
  // Parts are stored descending; display ascending as p1^2*p3.
  for (auto it = parts.rbegin(); it != parts.rend();) {
    int index = *it;
    int mult = 0;
    while (it != parts.rend() && *it == index) {
      ++mult;
      ++it;
    }
    if (!gens.empty()) gens += '*';
    gens += "p" + std::to_string(index);
    if (mult > 1) gens += "^" + std::to_string(mult);
  }
  if (gens.empty()) return abs_coeff.str();
  if (abs_coeff.is_one()) return gens;
  return abs_coeff.str() + "*" + gens;
}

}  // namespace

std::string LazardElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (c.sign() < 0) out += '-';
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += monomial_body(m, c.abs());
  }
  return out;
}

std::string coeff_standalone(const LazardElement& x) { return x.str(); }

std::string coeff_prefix(const LazardElement& x) {
  if (x.terms().size() > 1) return "(" + x.str() + ")";
  // Single monomial: parenthesize a non-unit negative rational prefix so the
  // printed series reads "(-1/2)*p1*u^2"; a bare sign stays inside parens too.
  const auto& [m, c] = *x.terms().begin();
  if (m.empty()) return coeff_prefix(c);
  std::string body;
  {
    const auto& parts = m.parts();
    for (auto it = parts.rbegin(); it != parts.rend();) {
      int index = *it;
      int mult = 0;
      while (it != parts.rend() && *it == index) {
        ++mult;
        ++it;
      }
      if (!body.empty()) body += '*';
      body += "p" + std::to_string(index);
      if (mult > 1) body += "^" + std::to_string(mult);
    }
  }
  if (c.is_one()) return body;
  return coeff_prefix(c) + "*" + body;
}

GenusSpec GenusSpec::additive() {
  GenusSpec s;
  s.name_ = "additive";
  s.fallback_ = Rational(0);
  return s;
}

GenusSpec GenusSpec::multiplicative() {
  GenusSpec s;
  s.name_ = "multiplicative";
  s.fallback_ = Rational(1);
  return s;
}

GenusSpec GenusSpec::parse(std::string_view text) {
  if (text == "additive") return additive();
  if (text == "multiplicative") return multiplicative();
  GenusSpec s;
  s.name_ = std::string(text);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                             : comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || item.size() < 4 || item[0] != 'p')
      throw ParseError("bad genus assignment '" + std::string(item) + "'");
    int index = 0;
    for (std::size_t i = 1; i < eq; ++i) {
      if (item[i] < '0' || item[i] > '9')
        throw ParseError("bad genus assignment '" + std::string(item) + "'");
      index = index * 10 + (item[i] - '0');
    }
    if (index < 1) throw ParseError("bad genus assignment '" + std::string(item) + "'");
    s.values_[index] = Rational::parse(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (s.values_.empty()) throw ParseError("empty genus assignment '" + std::string(text) + "'");
  return s;
}

Rational GenusSpec::value_of(int index) const {
  auto it = values_.find(index);
  if (it != values_.end()) return it->second;
  if (fallback_) return *fallback_;
  throw Error("genus spec '" + name_ + "' does not assign generator p" + std::to_string(index));
}

Rational specialize(const LazardElement& x, const GenusSpec& spec) {
  Rational out(0);
  for (const auto& [m, c] : x.terms()) {
    Rational term = c;
    for (int index : m.parts()) term *= spec.value_of(index);
    out += term;
  }
  return out;
}

}  // namespace cobalg
