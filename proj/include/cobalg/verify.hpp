#ifndef COBALG_VERIFY_HPP
#define COBALG_VERIFY_HPP

#include <string>
#include <vector>

#include "cobalg/cobordism.hpp"

namespace cobalg {

struct VerifyResult {
  std::string name;
  bool pass = false;
  std::string detail;  // both sides of the first failed equality, empty on pass
};

// Expected specialized laws, built independently of the FGL machinery.
TruncSeries<Rational> additive_law(int order);        // u + v
TruncSeries<Rational> multiplicative_law(int order);  // u + v - uv

// (-1)^i / (i+1)!, the multiplicative image of the inverse-Todd coefficients.
Rational inverse_todd_coeff_multiplicative(int i);

// Individual identity sweeps.  Each one checks exact equalities and reports
// the offending values in full on failure.
VerifyResult check_fgl_axioms(int order);
VerifyResult check_g_axiom(int order);
VerifyResult check_lagrange(int order, int rmax);
VerifyResult check_specializations(int law_order, int todd_terms);
VerifyResult check_grading(int order);
VerifyResult check_key_remark(int rmax, int lmax);
VerifyResult check_hrr_all(int max_dim, int order);
VerifyResult check_genus_regression(int max_dim, int order);
VerifyResult check_milnor_soundness(int max_degree);
VerifyResult check_hrrc_sweep(int min_cases, int order);
VerifyResult check_series_properties(int min_checks);

// Deterministic HRRC case list over {P2, P3, P1xP1, P1xP2, P1xP1xP1, P2xP2}
// with 1..2 bundles and multidegrees in [-2, 3].
std::vector<std::pair<ProjProduct, std::vector<LineBundleSpec>>> default_hrrc_cases(
    int min_cases);

// The aggregate the `verify` subcommand runs.
std::vector<VerifyResult> run_verification(int order, int max_dim);

}  // namespace cobalg

#endif
