#include "cobalg/linsolve.hpp"

#include <gmpxx.h>

#include "cobalg/error.hpp"

namespace cobalg {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

// Scale each row of [A | extra columns] by the lcm of its denominators.
ZMatrix to_integer_rows(const Matrix& a, const std::vector<Rational>* rhs) {
  const std::size_t n = a.size();
  ZMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l(1);
    for (const Rational& x : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[i].den().get_mpz_t());
    m[i].reserve(a[i].size() + (rhs ? 1 : 0));
    for (const Rational& x : a[i]) m[i].push_back(x.num() * (l / x.den()));
    if (rhs) m[i].push_back((*rhs)[i].num() * (l / (*rhs)[i].den()));
  }
  return m;
}

// Fraction-free elimination in place; returns the sign of the row swaps.
// After it runs, m is upper triangular with m[k][k] the leading principal
// minors (times the sign bookkeeping), every division having been exact.
int bareiss(ZMatrix& m) {
  const std::size_t n = m.size();
  int sign = 1;
  mpz_class prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) throw SingularMatrix("singular matrix in exact elimination");
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m[i].size(); ++j) {
        mpz_class t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  if (n > 0 && m[n - 1][n - 1] == 0)
    throw SingularMatrix("singular matrix in exact elimination");
  return sign;
}

}  // namespace

std::vector<Rational> solve_exact(const Matrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error("solve_exact: rhs size mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw Error("solve_exact: matrix is not square");
  if (n == 0) return {};

  ZMatrix m = to_integer_rows(a, &b);
  bareiss(m);

  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j];
    x[ii] = acc / Rational(m[ii][ii]);
  }
  return x;
}

Rational determinant(const Matrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw Error("determinant: matrix is not square");
  if (n == 0) return Rational(1);

  // Track the integer row scalings so the rational determinant comes back.
  Rational scaling(1);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l(1);
    for (const Rational& x : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    scaling *= Rational(l);
  }
  ZMatrix m = to_integer_rows(a, nullptr);
  int sign;
  try {
    sign = bareiss(m);
  } catch (const SingularMatrix&) {
    return Rational(0);
  }
  return Rational(m[n - 1][n - 1]) * Rational(sign) / scaling;
}

}  // namespace cobalg
