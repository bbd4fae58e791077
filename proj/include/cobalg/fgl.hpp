#ifndef COBALG_FGL_HPP
#define COBALG_FGL_HPP

#include <string>

#include "cobalg/lazard.hpp"
#include "cobalg/series.hpp"
#include "cobalg/series_io.hpp"

namespace cobalg {

/* The universal formal group law over the rational Lazard ring, together
 * with the series attached to it:
 *
 *   h(u)  = u + sum_i p_i/(i+1) u^{i+1}     (the universal logarithm)
 *   F(u,v) = h^{-1}(h(u) + h(v))            (the universal law)
 *   g(u)  = h^{-1}(u)/u                     (the universal inverse Todd
 *                                            series; constant term 1)
 *   chi(u) with F(u, chi(u)) = 0            (the formal inverse)
 *
 * The additive genus (p_i -> 0) turns F into u+v and g into 1; the
 * multiplicative genus (p_i -> 1) turns F into u+v-uv and g into
 * (1-e^{-u})/u, whose coefficients are (-1)^i/(i+1)!.
 */
struct FormalGroupLaw {
  TruncSeries<LazardElement> law;  // over {u, v}

  int order() const { return law.order(); }
  LazardElement coeff(int i, int j) const { return law.coeff(Expo{i, j, 0}); }
};

// h truncated at `order`; requires order >= 2.
TruncSeries<LazardElement> universal_log(int order);

// g with terms up to degree order-1, so u*g(u) matches h^{-1}(u) through
// degree `order`.
TruncSeries<LazardElement> inverse_todd(int order);

// Uncached construction; universal_fgl memoizes per order behind a lock and
// always hands back the identical coefficients.
FormalGroupLaw build_universal_fgl(int order);
FormalGroupLaw universal_fgl(int order);

// chi solved degree by degree from F(u, chi(u)) = 0; works for any
// coefficient ring, so specialized laws can be inverted directly.
template <class C>
TruncSeries<C> formal_inverse(const TruncSeries<C>& law);

struct FglAxiomReport {
  bool linear = false;       // F = u + v mod degree 2
  bool unit = false;         // F(0, u) = u and F(u, 0) = u
  bool commutative = false;  // F(u, v) = F(v, u)
  bool associative = false;  // F(u, F(v, w)) = F(F(u, v), w)
  std::string detail;        // both sides of the first failed equality
  bool all() const { return linear && unit && commutative && associative; }
};

FglAxiomReport verify_fgl_axioms(const FormalGroupLaw& fgl);

struct GAxiomReport {
  bool pass = false;
  std::string lhs;  // F(u g(u), v g(v))
  std::string rhs;  // (u+v) g(u+v)
};

// F(u g(u), v g(v)) = (u+v) g(u+v), checked as exact bivariate series.
GAxiomReport verify_g_axiom(int order);

struct LagrangeReport {
  bool pass = false;
  std::string detail;
};

// For r = 0..rmax: the u^r coefficient of g(u)^{-(r+1)} equals
// (r+1) * (u^{r+1} coefficient of h), i.e. p_r (p_0 = 1).
LagrangeReport verify_lagrange(int order, int rmax);

TruncSeries<Rational> specialize(const TruncSeries<LazardElement>& s, const GenusSpec& spec);
TruncSeries<Rational> specialize(const FormalGroupLaw& fgl, const GenusSpec& spec);

template <class C>
TruncSeries<C> formal_inverse(const TruncSeries<C>& law) {
  if (law.nvars() != 2) throw Error("formal_inverse: law must be a series in two variables");
  const int order = law.order();
  const std::vector<std::string> uvar{law.vars()[0]};
  TruncSeries<C> chi(uvar, order);
  chi.add_term(Expo{1, 0, 0}, C(-1));
  TruncSeries<C> u = TruncSeries<C>::variable(uvar, order, law.vars()[0]);
  for (int n = 2; n < order; ++n) {
    // F(u, v) = u + v + higher, so the u^n defect is cancelled by -defect at
    // chi_n exactly.
    C defect = substitute(law, {u, chi}).coeff1(n);
    if (!coeff_is_zero(defect)) chi.add_term(Expo{n, 0, 0}, -defect);
  }
  return chi;
}

}  // namespace cobalg

#endif
