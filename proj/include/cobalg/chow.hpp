#ifndef COBALG_CHOW_HPP
#define COBALG_CHOW_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cobalg/error.hpp"
#include "cobalg/lazard.hpp"
#include "cobalg/rational.hpp"

namespace cobalg {

// A product of projective spaces P^{r1} x ... x P^{rk}.
struct ProjProduct {
  std::vector<int> factors;

  ProjProduct() = default;
  explicit ProjProduct(std::vector<int> f) : factors(std::move(f)) {
    if (factors.empty()) throw Error("ProjProduct needs at least one factor");
    for (int r : factors)
      if (r < 1) throw Error("ProjProduct factors must be >= 1");
  }

  int dim() const {
    int d = 0;
    for (int r : factors) d += r;
    return d;
  }
  int nfactors() const { return static_cast<int>(factors.size()); }

  static ProjProduct parse(std::string_view text);  // "P2xP1xP1"
  std::string str() const;

  friend bool operator==(const ProjProduct& a, const ProjProduct& b) {
    return a.factors == b.factors;
  }
};

/* Element of the intersection ring Q[H1,...,Hk]/(H_i^{r_i+1}) of a product
 * of projective spaces, with coefficients in C (Rational or LazardElement).
 * The nilpotency relations are enforced on every term insertion, so any
 * product lands back in the quotient automatically.
 */
template <class C>
class ChowClass {
 public:
  using Terms = std::map<std::vector<int>, C>;

  explicit ChowClass(ProjProduct base) : base_(std::move(base)) {}

  static ChowClass constant(ProjProduct base, C value) {
    ChowClass x(std::move(base));
    x.add_term(std::vector<int>(x.base_.factors.size(), 0), value);
    return x;
  }
  static ChowClass one(ProjProduct base) { return constant(std::move(base), C(1)); }

  // The hyperplane class H_{index} (0-based factor index).
  static ChowClass hyperplane(ProjProduct base, int index) {
    ChowClass x(std::move(base));
    if (index < 0 || index >= x.base_.nfactors()) throw Error("hyperplane index out of range");
    std::vector<int> e(x.base_.factors.size(), 0);
    e[static_cast<std::size_t>(index)] = 1;
    x.add_term(e, C(1));
    return x;
  }

  const ProjProduct& base() const { return base_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& e, const C& c) {
    if (e.size() != base_.factors.size()) throw Error("exponent arity mismatch");
    if (coeff_is_zero(c)) return;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw Error("negative Chow exponent");
      if (e[i] > base_.factors[i]) return;  // H_i^{r_i+1} = 0
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  C coeff(const std::vector<int>& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  // Coefficient of the top monomial H_1^{r_1}...H_k^{r_k}; classes of
  // degree != dim integrate to zero by construction.
  C integrate() const { return coeff(base_.factors); }

  ChowClass graded_part(int d) const {
    ChowClass out(base_);
    for (const auto& [e, c] : terms_) {
      int deg = 0;
      for (int x : e) deg += x;
      if (deg == d) out.terms_.emplace(e, c);
    }
    return out;
  }

  ChowClass operator-() const {
    ChowClass out(base_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    a.require_same_base(b);
    ChowClass out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b) { return a + (-b); }

  friend ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    a.require_same_base(b);
    ChowClass out(a.base_);
    std::vector<int> e(a.base_.factors.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        bool dead = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
          e[i] = ea[i] + eb[i];
          if (e[i] > a.base_.factors[i]) {
            dead = true;
            break;
          }
        }
        if (!dead) out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  template <class S>
  friend ChowClass operator*(const ChowClass& a, const S& s) {
    ChowClass out(a.base_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, c * s);
    return out;
  }

  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.base_ == b.base_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ChowClass& a, const ChowClass& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += "H" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string term;
      if (mono.empty()) {
        term = coeff_standalone(c);
      } else if (coeff_is_one(c)) {
        term = mono;
      } else {
        term = coeff_prefix(c) + "*" + mono;
      }
      if (!out.empty()) out += " + ";
      out += term;
    }
    return out;
  }

 private:
  void require_same_base(const ChowClass& o) const {
    if (!(base_ == o.base_)) throw Error("Chow classes live on different varieties");
  }

  ProjProduct base_;
  Terms terms_;
};

// Multiplicative inverse of a class with unit constant term (Neumann series
// over the nilpotent part).
template <class C>
ChowClass<C> inverse(const ChowClass<C>& x) {
  auto c0 = coeff_unit_inverse(x.coeff(std::vector<int>(x.base().factors.size(), 0)));
  if (!c0) throw Error("Chow inverse requires a unit constant term");
  ChowClass<C> one = ChowClass<C>::one(x.base());
  ChowClass<C> q = one - x * *c0;
  ChowClass<C> acc = one;
  for (int i = 0; i < x.base().dim(); ++i) acc = acc * q + one;
  return acc * *c0;
}

inline ChowClass<LazardElement> lift(const ChowClass<Rational>& x) {
  ChowClass<LazardElement> out(x.base());
  for (const auto& [e, c] : x.terms()) out.add_term(e, LazardElement(c));
  return out;
}

ChowClass<Rational> specialize(const ChowClass<LazardElement>& x, const GenusSpec& spec);

// The line bundle O(a1, ..., ak) on a product of projective spaces.
struct LineBundleSpec {
  ProjProduct base;
  std::vector<int> multidegree;

  LineBundleSpec(ProjProduct b, std::vector<int> degrees)
      : base(std::move(b)), multidegree(std::move(degrees)) {
    if (multidegree.size() != base.factors.size())
      throw Error("line bundle multidegree arity mismatch");
  }

  static LineBundleSpec parse(std::string_view text, const ProjProduct& base);  // "O(2,1,0)"
  std::string str() const;
};

}  // namespace cobalg

#endif
