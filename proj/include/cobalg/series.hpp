#ifndef COBALG_SERIES_HPP
#define COBALG_SERIES_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cobalg/error.hpp"

namespace cobalg {

inline constexpr int kMaxSeriesVars = 3;

// Exponent vector; slots beyond the series' variable count stay 0.
using Expo = std::array<int, kMaxSeriesVars>;

inline int expo_degree(const Expo& e) { return e[0] + e[1] + e[2]; }

// Graded-lexicographic term order: total degree first, then u^2, u*v, v^2.
struct ExpoLess {
  bool operator()(const Expo& a, const Expo& b) const {
    int da = expo_degree(a);
    int db = expo_degree(b);
    if (da != db) return da < db;
    return a > b;
  }
};

/* Truncated sparse power series in 1..3 formal variables over a commutative
 * coefficient ring C (Rational or LazardElement here).  `order` is data:
 * terms of total degree >= order do not exist, and every binary operation
 * propagates the minimum of the operands' orders, so precision is never
 * silently overstated.  Values are immutable once built; all operations are
 * pure functions.
 *
 * C must be default-constructible to zero, constructible from long,
 * and provide +=, *, unary -, == plus the coeff_* printer hooks.
 */
template <class C>
class TruncSeries {
 public:
  using Terms = std::map<Expo, C, ExpoLess>;

  TruncSeries(std::vector<std::string> vars, int order) : vars_(std::move(vars)), order_(order) {
    if (order_ < 1) throw Error("series order must be >= 1");
    if (vars_.empty() || vars_.size() > kMaxSeriesVars)
      throw Error("series supports 1 to 3 variables");
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j]) throw Error("duplicate series variable '" + vars_[i] + "'");
  }

  static TruncSeries constant(std::vector<std::string> vars, int order, C value) {
    TruncSeries s(std::move(vars), order);
    s.add_term(Expo{0, 0, 0}, value);
    return s;
  }

  static TruncSeries variable(std::vector<std::string> vars, int order, const std::string& name) {
    TruncSeries s(std::move(vars), order);
    Expo e{0, 0, 0};
    e[static_cast<std::size_t>(s.var_index(name))] = 1;
    s.add_term(e, C(1));
    return s;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    throw Error("unknown series variable '" + name + "'");
  }

  C coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  // Coefficient of x^k for univariate series.
  C coeff1(int k) const { return coeff(Expo{k, 0, 0}); }

  C constant_term() const { return coeff(Expo{0, 0, 0}); }

  // Accumulates; terms at or above the truncation order are discarded, and
  // exponents must not use variable slots the series does not have.
  void add_term(const Expo& e, const C& c) {
    for (int i = nvars(); i < kMaxSeriesVars; ++i)
      if (e[static_cast<std::size_t>(i)] != 0) throw Error("exponent outside variable list");
    if (expo_degree(e) >= order_ || coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  TruncSeries truncated(int new_order) const {
    if (new_order > order_) throw Error("cannot raise truncation order");
    TruncSeries out(vars_, new_order);
    for (const auto& [e, c] : terms_) {
      if (expo_degree(e) < new_order) out.terms_.emplace(e, c);
    }
    return out;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

 private:
  std::vector<std::string> vars_;
  int order_;
  Terms terms_;
};

namespace detail {

template <class C>
void require_same_vars(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  if (a.vars() != b.vars()) throw Error("series variable lists differ");
}

}  // namespace detail

template <class C>
TruncSeries<C> operator+(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  detail::require_same_vars(a, b);
  TruncSeries<C> out(a.vars(), std::min(a.order(), b.order()));
  for (const auto& [e, c] : a.terms()) out.add_term(e, c);
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

template <class C>
TruncSeries<C> operator-(const TruncSeries<C>& s) {
  TruncSeries<C> out(s.vars(), s.order());
  for (const auto& [e, c] : s.terms()) out.add_term(e, -c);
  return out;
}

template <class C>
TruncSeries<C> operator-(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  return a + (-b);
}

template <class C, class S>
TruncSeries<C> scale(const TruncSeries<C>& s, const S& factor) {
  TruncSeries<C> out(s.vars(), s.order());
  for (const auto& [e, c] : s.terms()) out.add_term(e, c * factor);
  return out;
}

/* Cauchy product, truncated at min(a.order, b.order).
 *
 * mul_serial is the reference implementation.  mul_parallel partitions the
 * left factor's terms across OpenMP threads with thread-local accumulation
 * maps; coefficients are exact, so addition is associative and the merged
 * result is identical to the serial one, term for term.  operator* picks
 * the parallel kernel once the pair count makes it worthwhile.
 */
template <class C>
TruncSeries<C> mul_serial(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  detail::require_same_vars(a, b);
  const int order = std::min(a.order(), b.order());
  TruncSeries<C> out(a.vars(), order);
  for (const auto& [ea, ca] : a.terms()) {
    const int da = expo_degree(ea);
    if (da >= order) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + expo_degree(eb) >= order) break;  // b sorted by degree
      Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

template <class C>
TruncSeries<C> mul_parallel(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  detail::require_same_vars(a, b);
  const int order = std::min(a.order(), b.order());
  TruncSeries<C> out(a.vars(), order);
#ifdef _OPENMP
  std::vector<const std::pair<const Expo, C>*> aterms;
  aterms.reserve(a.terms().size());
  for (const auto& t : a.terms()) aterms.push_back(&t);
  const int n = static_cast<int>(aterms.size());
#pragma omp parallel
  {
    TruncSeries<C> local(a.vars(), order);
#pragma omp for schedule(dynamic, 4) nowait
    for (int i = 0; i < n; ++i) {
      const Expo& ea = aterms[static_cast<std::size_t>(i)]->first;
      const C& ca = aterms[static_cast<std::size_t>(i)]->second;
      const int da = expo_degree(ea);
      if (da >= order) continue;
      for (const auto& [eb, cb] : b.terms()) {
        if (da + expo_degree(eb) >= order) break;
        Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
        local.add_term(e, ca * cb);
      }
    }
#pragma omp critical(cobalg_series_merge)
    {
      for (const auto& [e, c] : local.terms()) out.add_term(e, c);
    }
  }
  return out;
#else
  return mul_serial(a, b);
#endif
}

enum class MulMode { kAuto, kSerial, kParallel };

template <class C>
TruncSeries<C> mul(const TruncSeries<C>& a, const TruncSeries<C>& b, MulMode mode = MulMode::kAuto) {
  switch (mode) {
    case MulMode::kSerial:
      return mul_serial(a, b);
    case MulMode::kParallel:
      return mul_parallel(a, b);
    case MulMode::kAuto:
      break;
  }
#ifdef _OPENMP
  if (omp_get_max_threads() > 1 && !omp_in_parallel() &&
      a.terms().size() * b.terms().size() >= 2048) {
    return mul_parallel(a, b);
  }
#endif
  return mul_serial(a, b);
}

template <class C>
TruncSeries<C> operator*(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  return mul(a, b);
}

template <class C>
TruncSeries<C> pow(const TruncSeries<C>& s, int k) {
  if (k < 0) throw Error("negative series power");
  TruncSeries<C> out = TruncSeries<C>::constant(s.vars(), s.order(), C(1));
  for (int i = 0; i < k; ++i) out = out * s;
  return out;
}

/* Simultaneous substitution: replacement[i] is plugged in for s.vars()[i].
 * Replacements must share one variable list and order among themselves and
 * have zero constant term (otherwise the truncation grading is meaningless).
 * Result order = min(s.order, replacement order).
 */
template <class C>
TruncSeries<C> substitute(const TruncSeries<C>& s, const std::vector<TruncSeries<C>>& repl) {
  if (static_cast<int>(repl.size()) != s.nvars())
    throw Error("substitute: need one replacement per variable");
  for (const auto& r : repl) {
    detail::require_same_vars(repl.front(), r);
    if (r.order() != repl.front().order()) throw Error("substitute: replacement orders differ");
    if (!coeff_is_zero(r.constant_term()))
      throw Error("substitute: replacement has nonzero constant term");
  }
  const int order = std::min(s.order(), repl.front().order());
  const auto& rvars = repl.front().vars();

  // Power tables, built on demand.
  std::array<std::vector<TruncSeries<C>>, kMaxSeriesVars> powers;
  auto power = [&](int var, int k) -> const TruncSeries<C>& {
    auto& table = powers[static_cast<std::size_t>(var)];
    if (table.empty()) table.push_back(TruncSeries<C>::constant(rvars, order, C(1)));
    while (static_cast<int>(table.size()) <= k)
      table.push_back(table.back() * repl[static_cast<std::size_t>(var)]);
    return table[static_cast<std::size_t>(k)];
  };

  TruncSeries<C> out(rvars, order);
  for (const auto& [e, c] : s.terms()) {
    // Replacements have no constant term, so a term of degree >= order
    // cannot contribute below the truncation.
    if (expo_degree(e) >= order) continue;
    std::optional<TruncSeries<C>> prod;
    for (int v = 0; v < s.nvars(); ++v) {
      int k = e[static_cast<std::size_t>(v)];
      if (k == 0) continue;
      prod = prod ? *prod * power(v, k) : power(v, k);
    }
    if (prod) {
      for (const auto& [pe, pc] : prod->terms()) out.add_term(pe, pc * c);
    } else {
      out.add_term(Expo{0, 0, 0}, c);
    }
  }
  return out;
}

// Composition outer(inner) for univariate outer; inner may be multivariate
// but needs a vanishing constant term.
template <class C>
TruncSeries<C> compose(const TruncSeries<C>& outer, const TruncSeries<C>& inner) {
  if (outer.nvars() != 1) throw Error("compose: outer series must be univariate");
  return substitute(outer, {inner});
}

// Multiplicative inverse of a series whose constant term is a unit:
// s = c0(1 - q) with q nilpotent mod truncation, so 1/s = (1 + q + q^2 + ...)/c0.
template <class C>
TruncSeries<C> inverse(const TruncSeries<C>& s) {
  auto c0 = coeff_unit_inverse(s.constant_term());
  if (!c0) throw Error("series inverse requires a unit constant term");
  TruncSeries<C> one = TruncSeries<C>::constant(s.vars(), s.order(), C(1));
  TruncSeries<C> q = one - scale(s, *c0);
  TruncSeries<C> acc = one;
  for (int i = 1; i < s.order(); ++i) acc = acc * q + one;
  return scale(acc, *c0);
}

/* Compositional inverse (reversion): the unique g with s(g(u)) = u mod
 * u^order, solved degree by degree.  With g known below degree n, the
 * defect r_n of s(g) at u^n is linear in the missing coefficient:
 * g_n = -r_n / s_1.  Requires a univariate s with zero constant term and
 * unit linear coefficient.
 */
template <class C>
TruncSeries<C> revert(const TruncSeries<C>& s) {
  if (s.nvars() != 1) throw Error("revert: series must be univariate");
  if (!coeff_is_zero(s.constant_term())) throw Error("revert: nonzero constant term");
  auto lin_inv = coeff_unit_inverse(s.coeff1(1));
  if (!lin_inv) throw Error("revert: linear coefficient is not a unit");

  TruncSeries<C> g(s.vars(), s.order());
  g.add_term(Expo{1, 0, 0}, *lin_inv);
  for (int n = 2; n < s.order(); ++n) {
    C defect = compose(s, g).coeff1(n);
    if (!coeff_is_zero(defect)) g.add_term(Expo{n, 0, 0}, -(defect * *lin_inv));
  }
  return g;
}

// Strips one factor of the variable from a univariate series with zero
// constant term: u + a*u^2 + ... -> 1 + a*u + ...  The order drops by
// nothing (the u^{order-1} knowledge comes from the u^order term, which the
// input never stored), so callers wanting g at order N should pass a series
// of order N+1.
template <class C>
TruncSeries<C> divide_by_variable(const TruncSeries<C>& s) {
  if (s.nvars() != 1) throw Error("divide_by_variable: series must be univariate");
  if (!coeff_is_zero(s.constant_term()))
    throw Error("divide_by_variable: nonzero constant term");
  TruncSeries<C> out(s.vars(), s.order() - 1 >= 1 ? s.order() - 1 : 1);
  for (const auto& [e, c] : s.terms()) out.add_term(Expo{e[0] - 1, 0, 0}, c);
  return out;
}

// Graded-lexicographic human-readable form, e.g. "u + (-1/2)*p1*u^2".
template <class C>
std::string to_string(const TruncSeries<C>& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : s.terms()) {
    std::string mono;
    for (int v = 0; v < s.nvars(); ++v) {
      int k = e[static_cast<std::size_t>(v)];
      if (k == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += s.vars()[static_cast<std::size_t>(v)];
      if (k > 1) mono += "^" + std::to_string(k);
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

}  // namespace cobalg

#endif
