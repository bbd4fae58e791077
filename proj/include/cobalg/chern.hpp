#ifndef COBALG_CHERN_HPP
#define COBALG_CHERN_HPP

#include <map>
#include <utility>
#include <vector>

#include "cobalg/chow.hpp"
#include "cobalg/partition.hpp"
#include "cobalg/series.hpp"

namespace cobalg {

// c1(O(a1,...,ak)) = sum a_i H_i.
ChowClass<Rational> c1(const LineBundleSpec& bundle);

/* Chern roots of the tangent bundle of P^{r1} x ... x P^{rk}: the Euler
 * sequence 0 -> O -> O(1)^{r+1} -> T -> 0 on each factor gives the root H_i
 * with multiplicity r_i + 1, so c(T_X) = prod (1 + H_i)^{r_i+1}.
 */
std::vector<std::pair<ChowClass<Rational>, int>> tangent_chern_roots(const ProjProduct& X);

// Total Chern class of the tangent bundle.
ChowClass<Rational> total_tangent_chern(const ProjProduct& X);

// phi evaluated at a nilpotent class: sum_k phi_k x^k (finite by nilpotency).
// Requires phi univariate with order > dim of the base.
template <class C>
ChowClass<C> eval_at(const TruncSeries<C>& phi, const ChowClass<C>& x) {
  if (phi.nvars() != 1) throw Error("eval_at: series must be univariate");
  if (phi.order() <= x.base().dim())
    throw Error("eval_at: series order must exceed the variety dimension");
  ChowClass<C> out(x.base());
  ChowClass<C> power = ChowClass<C>::one(x.base());
  for (int k = 0; k < phi.order(); ++k) {
    if (k > 0) {
      power = power * x;
      if (power.is_zero()) break;
    }
    C coeff = phi.coeff1(k);
    if (!coeff_is_zero(coeff)) out = out + power * coeff;
  }
  return out;
}

// prod over roots of phi(root)^multiplicity.
template <class C>
ChowClass<C> genus_of_roots(const TruncSeries<C>& phi,
                            const std::vector<std::pair<ChowClass<C>, int>>& roots) {
  if (roots.empty()) throw Error("genus_of_roots: empty root list");
  ChowClass<C> out = ChowClass<C>::one(roots.front().first.base());
  for (const auto& [root, mult] : roots) {
    ChowClass<C> value = eval_at(phi, root);
    for (int i = 0; i < mult; ++i) out = out * value;
  }
  return out;
}

// The phi-class of T_X, with the roots lifted into phi's coefficient ring.
template <class C>
ChowClass<C> tangent_genus_class(const TruncSeries<C>& phi, const ProjProduct& X) {
  std::vector<std::pair<ChowClass<C>, int>> roots;
  for (int i = 0; i < X.nfactors(); ++i) {
    roots.emplace_back(ChowClass<C>::hyperplane(X, i), X.factors[static_cast<std::size_t>(i)] + 1);
  }
  return genus_of_roots(phi, roots);
}

// All Chern numbers C_I(X) = int_X c_{i1}(T)...c_{ip}(T), keyed by the
// partition I of dim X.
std::map<Partition, Rational> chern_numbers(const ProjProduct& X);

/* Chern numbers of the virtual complete intersection cut out by the given
 * bundles: c(T_Z) = c(T_X) / prod(1 + c1 L_j) computed in the ambient ring,
 * and int_Z alpha = int_X alpha * prod c1(L_j).  Purely Chow-level; nothing
 * is assumed about actual smooth representatives.
 */
std::map<Partition, Rational> complete_intersection_chern_numbers(
    const ProjProduct& X, const std::vector<LineBundleSpec>& bundles);

// One cut; requires dim X >= 2 so the hypersurface has positive dimension.
std::map<Partition, Rational> hypersurface_chern_numbers(const ProjProduct& X,
                                                         const LineBundleSpec& bundle);

/* Universal polynomials v_{d,I}: the degree-d part of prod_j gInv(x_j) over
 * d formal roots, rewritten in the elementary symmetric functions of the
 * roots, i.e.  (prod gInv(x_j))^{deg d} = sum_I v_{d,I} c_I.  Computed by
 * brute expansion and triangular monomial-to-elementary reduction.
 * Requires gInv.order > d.
 */
template <class C>
std::map<Partition, C> v_poly_all(int d, const TruncSeries<C>& g_inv);

template <class C>
C v_poly(int d, const Partition& index, const TruncSeries<C>& g_inv) {
  if (index.weight() != d) throw Error("v_poly: partition weight must equal d");
  auto all = v_poly_all(d, g_inv);
  auto it = all.find(index);
  return it == all.end() ? C(0) : it->second;
}

// ---- implementation of v_poly_all -----------------------------------------

namespace sym_detail {

// Dense-exponent sparse polynomial in d root variables, total degree <= cap.
template <class C>
using RootPoly = std::map<std::vector<int>, C>;

template <class C>
void rp_add(RootPoly<C>& p, const std::vector<int>& e, const C& c) {
  if (coeff_is_zero(c)) return;
  auto [it, inserted] = p.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (coeff_is_zero(it->second)) p.erase(it);
  }
}

template <class C>
RootPoly<C> rp_mul(const RootPoly<C>& a, const RootPoly<C>& b, int cap) {
  RootPoly<C> out;
  std::vector<int> e;
  for (const auto& [ea, ca] : a) {
    int da = 0;
    for (int x : ea) da += x;
    for (const auto& [eb, cb] : b) {
      int db = da;
      for (int x : eb) db += x;
      if (db > cap) continue;
      e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      rp_add(out, e, ca * cb);
    }
  }
  return out;
}

// e_k(x_1..x_d) with unit coefficients.
template <class C>
RootPoly<C> elementary(int k, int d) {
  RootPoly<C> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  // iterate k-subsets of {0..d-1}
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k == 0) {
    out.emplace(std::vector<int>(static_cast<std::size_t>(d), 0), C(1));
    return out;
  }
  for (;;) {
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    for (int i : idx) e[static_cast<std::size_t>(i)] = 1;
    out.emplace(std::move(e), C(1));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == d - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

}  // namespace sym_detail

template <class C>
std::map<Partition, C> v_poly_all(int d, const TruncSeries<C>& g_inv) {
  using sym_detail::RootPoly;
  if (d < 1) throw Error("v_poly: d must be >= 1");
  if (g_inv.nvars() != 1) throw Error("v_poly: series must be univariate");
  if (g_inv.order() <= d) throw Error("v_poly: series order must exceed d");

  // prod_j gInv(x_j), truncated at total degree d.
  RootPoly<C> prod;
  prod.emplace(std::vector<int>(static_cast<std::size_t>(d), 0), C(1));
  for (int j = 0; j < d; ++j) {
    RootPoly<C> factor;
    for (int k = 0; k <= d; ++k) {
      C coeff = g_inv.coeff1(k);
      if (coeff_is_zero(coeff)) continue;
      std::vector<int> e(static_cast<std::size_t>(d), 0);
      e[static_cast<std::size_t>(j)] = k;
      factor.emplace(std::move(e), coeff);
    }
    prod = sym_detail::rp_mul(prod, factor, d);
  }

  // Homogeneous degree-d part.
  RootPoly<C> h;
  for (const auto& [e, c] : prod) {
    int deg = 0;
    for (int x : e) deg += x;
    if (deg == d) h.emplace(e, c);
  }

  // Triangular reduction: subtract c * prod_k e_k^{lambda_k - lambda_{k+1}}
  // for the lex-leading monomial x^lambda until nothing is left.
  std::map<Partition, C> out;
  std::vector<RootPoly<C>> elem;  // e_1..e_d, built lazily
  auto elementary_at = [&](int k) -> const RootPoly<C>& {
    while (static_cast<int>(elem.size()) < k)
      elem.push_back(sym_detail::elementary<C>(static_cast<int>(elem.size()) + 1, d));
    return elem[static_cast<std::size_t>(k - 1)];
  };

  while (!h.empty()) {
    const auto& [lead, coeff] = *h.rbegin();
    std::vector<int> lambda = lead;
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i) {
      if (lambda[i] < lambda[i + 1])
        throw Error("v_poly: internal error, expansion is not symmetric");
    }
    std::vector<int> index_parts;
    RootPoly<C> eprod;
    eprod.emplace(std::vector<int>(static_cast<std::size_t>(d), 0), C(1));
    for (int k = 1; k <= d; ++k) {
      int next = k < d ? lambda[static_cast<std::size_t>(k)] : 0;
      int mult = lambda[static_cast<std::size_t>(k - 1)] - next;
      for (int m = 0; m < mult; ++m) {
        index_parts.push_back(k);
        eprod = sym_detail::rp_mul(eprod, elementary_at(k), d);
      }
    }
    Partition index(std::move(index_parts));
    C c = coeff;  // copy before h mutates
    {
      auto [it, inserted] = out.emplace(index, c);
      if (!inserted) it->second += c;
    }
    for (const auto& [e, ec] : eprod) sym_detail::rp_add(h, e, -(ec * c));
  }
  for (auto it = out.begin(); it != out.end();) {
    it = coeff_is_zero(it->second) ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace cobalg

#endif
