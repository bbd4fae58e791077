#ifndef COBALG_COBORDISM_HPP
#define COBALG_COBORDISM_HPP

#include <map>
#include <string>
#include <vector>

#include "cobalg/chern.hpp"
#include "cobalg/fgl.hpp"
#include "cobalg/linsolve.hpp"

namespace cobalg {

// A rational cobordism class, homogeneous of one degree in the Lazard grading.
struct CobordismClass {
  int degree = 0;
  LazardElement value;
};

/* Coordinates of a cobordism class in the Milnor basis {P^{j1} x ... x P^{jm}},
 * solved exactly from its Chern numbers.  The residual is the maximum
 * absolute defect of the reconstructed Chern numbers; on success it is
 * exactly zero (and decompose throws otherwise).
 */
struct DecompositionReport {
  int degree = 0;
  std::vector<Partition> basis;
  std::vector<Rational> coordinates;
  Rational residual;
  std::map<Partition, Rational> chern_input;

  // sum_J alpha_J p_{j1}...p_{jm} as a Lazard element.
  LazardElement as_lazard() const;
};

// All partitions of d in the fixed basis order.
std::vector<Partition> milnor_basis(int d);

// M[I][J] = C_I(P^J) over partitions of d; invertible by Milnor's theorem.
Matrix chern_pairing_matrix(int d);

DecompositionReport decompose(const std::map<Partition, Rational>& numbers, int d);

// The cobordism class of a product of projective spaces; equals the
// monomial p_{r1}...p_{rk} on the nose.
CobordismClass ell(const ProjProduct& X);

// int_X g^{-1}(T_X) as a Lazard element (the Hirzebruch-Riemann-Roch left
// hand side); requires order > dim X.
LazardElement hrr_lhs(const ProjProduct& X, int order);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  int degree = 0;
  LazardElement lhs;
  LazardElement rhs;
  DecompositionReport rhs_decomposition;
};

// int_X g^{-1}(T_X) = ell(X), exactly.
IdentityCheck hrr_check(const ProjProduct& X, int order);

// int_X h^{-1}(L_1)...h^{-1}(L_p) g^{-1}(T_X) = ell(X, L_1..L_p), with the
// right-hand side decoded from the virtual complete intersection's Chern
// numbers.  Requires p <= dim X and order > dim X.
IdentityCheck hrrc_check(const ProjProduct& X, const std::vector<LineBundleSpec>& bundles,
                         int order);

// Ordered factor tuples (compositions): 2^{d-1} varieties per dimension d.
std::vector<ProjProduct> all_products_of_dim(int d);
std::vector<ProjProduct> all_products_up_to_dim(int max_dim);

// Verification sweeps; embarrassingly parallel, results in input order.
std::vector<IdentityCheck> hrr_suite(int max_dim, int order);
std::vector<IdentityCheck> hrrc_suite(
    const std::vector<std::pair<ProjProduct, std::vector<LineBundleSpec>>>& cases, int order);

}  // namespace cobalg

#endif
