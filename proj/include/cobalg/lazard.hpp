#ifndef COBALG_LAZARD_HPP
#define COBALG_LAZARD_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "cobalg/error.hpp"
#include "cobalg/partition.hpp"
#include "cobalg/rational.hpp"

namespace cobalg {

/* Element of the rational Lazard ring Q[p1, p2, ...], where the generator
 * p_i is the class of the i-dimensional projective space and carries
 * degree i.  Sparse: a monomial p_{i1}...p_{im} is keyed by the partition
 * (i1 >= ... >= im); its degree is the partition weight.  No zero
 * coefficients are ever stored, so equality is map equality.
 */
class LazardElement {
 public:
  using Terms = std::map<Partition, Rational>;

  LazardElement() = default;
  LazardElement(long v) : LazardElement(Rational(v)) {}  // NOLINT: ring embedding
  explicit LazardElement(const Rational& v) {
    if (!v.is_zero()) terms_[Partition()] = v;
  }

  static LazardElement generator(int index);  // p_index, index >= 1
  static LazardElement monomial(const Partition& m, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Rational constant_value() const;  // requires is_constant()
  bool is_one() const { return is_constant() && !is_zero() && constant_value().is_one(); }

  // Maximum term degree; 0 for the zero element.
  int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }
  bool is_homogeneous(int d) const;

  const Terms& terms() const { return terms_; }
  Rational coeff(const Partition& m) const;

  void add_term(const Partition& m, const Rational& c);

  LazardElement operator-() const;
  LazardElement& operator+=(const LazardElement& o);
  LazardElement& operator-=(const LazardElement& o);
  friend LazardElement operator+(LazardElement a, const LazardElement& b) { return a += b; }
  friend LazardElement operator-(LazardElement a, const LazardElement& b) { return a -= b; }
  friend LazardElement operator*(const LazardElement& a, const LazardElement& b);
  LazardElement& operator*=(const LazardElement& o) { return *this = *this * o; }
  friend LazardElement operator*(const LazardElement& a, const Rational& s);

  friend bool operator==(const LazardElement& a, const LazardElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LazardElement& a, const LazardElement& b) { return !(a == b); }

  // "p1^2*p3" style monomials with rational prefixes, graded then
  // reverse-lexicographic term order, e.g. "p2 - 1/2*p1^2".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const LazardElement& x) {
    return os << x.str();
  }

 private:
  Terms terms_;
};

// Series-printer hooks (mirror the Rational overloads).
inline bool coeff_is_zero(const LazardElement& x) { return x.is_zero(); }
inline bool coeff_is_one(const LazardElement& x) { return x.is_one(); }
std::string coeff_standalone(const LazardElement& x);
std::string coeff_prefix(const LazardElement& x);

// Units of Q[p1, p2, ...] are the nonzero rational constants.
inline std::optional<LazardElement> coeff_unit_inverse(const LazardElement& x) {
  if (!x.is_constant() || x.is_zero()) return std::nullopt;
  return LazardElement(x.constant_value().reciprocal());
}

/* A genus: ring morphism Q[p1, p2, ...] -> Q given by the images of the
 * generators.  Presets "additive" (p_i -> 0, the Chow-theory genus) and
 * "multiplicative" (p_i -> 1, the K-theory/Todd genus) cover the paper's
 * two specializations; arbitrary assignments come from parse().
 */
class GenusSpec {
 public:
  static GenusSpec additive();
  static GenusSpec multiplicative();

  // "additive" | "multiplicative" | assignment list "p1=1,p2=-1/2".
  static GenusSpec parse(std::string_view text);

  const std::string& name() const { return name_; }

  // Image of p_index; throws naming the generator when unassigned.
  Rational value_of(int index) const;

 private:
  std::string name_;
  std::map<int, Rational> values_;
  std::optional<Rational> fallback_;
};

// Ring-morphism image of x under the genus.
Rational specialize(const LazardElement& x, const GenusSpec& spec);

}  // namespace cobalg

#endif
