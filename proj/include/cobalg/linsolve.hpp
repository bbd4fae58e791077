#ifndef COBALG_LINSOLVE_HPP
#define COBALG_LINSOLVE_HPP

#include <vector>

#include "cobalg/rational.hpp"

namespace cobalg {

using Matrix = std::vector<std::vector<Rational>>;

/* Exact dense linear algebra via fraction-free (Bareiss) elimination: rows
 * are scaled to integers, the two-step determinant recurrence keeps every
 * intermediate an exact integer, and back substitution recovers the
 * rational solution.  Sized for the pairing matrices here (<= p(6) = 11).
 */

// Solves A x = b; throws SingularMatrix when A is not invertible.
std::vector<Rational> solve_exact(const Matrix& a, const std::vector<Rational>& b);

Rational determinant(const Matrix& a);

}  // namespace cobalg

#endif
