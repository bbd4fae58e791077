#include "cobalg/cobordism.hpp"

namespace cobalg {

LazardElement DecompositionReport::as_lazard() const {
  LazardElement out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], coordinates[i]);
  return out;
}

std::vector<Partition> milnor_basis(int d) {
  if (d < 0) throw Error("milnor_basis: negative degree");
  return partitions_of(d);
}

namespace {

ProjProduct product_for(const Partition& J) {
  return ProjProduct(std::vector<int>(J.parts().begin(), J.parts().end()));
}

}  // namespace

Matrix chern_pairing_matrix(int d) {
  if (d < 1) throw Error("chern_pairing_matrix: degree must be >= 1");
  const std::vector<Partition> basis = milnor_basis(d);
  const std::size_t n = basis.size();
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t col = 0; col < n; ++col) {
    auto numbers = chern_numbers(product_for(basis[col]));
    for (std::size_t row = 0; row < n; ++row) m[row][col] = numbers.at(basis[row]);
  }
  return m;
}

DecompositionReport decompose(const std::map<Partition, Rational>& numbers, int d) {
  if (d < 0) throw Error("decompose: negative degree");
  DecompositionReport report;
  report.degree = d;
  report.basis = milnor_basis(d);
  report.chern_input = numbers;

  for (const Partition& index : report.basis) {
    if (!numbers.count(index))
      throw Error("decompose: missing Chern number for partition " + index.str());
  }

  if (d == 0) {
    // A zero-dimensional class is its point count times the empty monomial.
    report.coordinates = {numbers.at(Partition())};
    report.residual = Rational(0);
    return report;
  }

  Matrix m = chern_pairing_matrix(d);
  std::vector<Rational> rhs;
  rhs.reserve(report.basis.size());
  for (const Partition& index : report.basis) rhs.push_back(numbers.at(index));

  std::vector<Rational> alpha;
  try {
    alpha = solve_exact(m, rhs);
  } catch (const SingularMatrix&) {
    throw SingularMatrix("chern pairing matrix is singular at degree " + std::to_string(d) +
                         "; this contradicts Milnor's theorem and indicates a bug");
  }

  // Reconstruct and record the defect; anything nonzero is an error.
  Rational residual(0);
  for (std::size_t row = 0; row < report.basis.size(); ++row) {
    Rational acc(0);
    for (std::size_t col = 0; col < alpha.size(); ++col) acc += m[row][col] * alpha[col];
    Rational defect = (acc - rhs[row]).abs();
    if (defect > residual) residual = defect;
  }
  if (!residual.is_zero())
    throw Error("decompose: inconsistent Chern-number system (residual " + residual.str() + ")");

  report.coordinates = std::move(alpha);
  report.residual = residual;
  return report;
}

CobordismClass ell(const ProjProduct& X) {
  DecompositionReport report = decompose(chern_numbers(X), X.dim());
  return CobordismClass{X.dim(), report.as_lazard()};
}

LazardElement hrr_lhs(const ProjProduct& X, int order) {
  if (order <= X.dim()) throw Error("hrr: order must exceed dim X");
  TruncSeries<LazardElement> g_inv = inverse(inverse_todd(order));
  return tangent_genus_class(g_inv, X).integrate();
}

IdentityCheck hrr_check(const ProjProduct& X, int order) {
  IdentityCheck check;
  check.name = "hrr " + X.str();
  check.degree = X.dim();
  check.lhs = hrr_lhs(X, order);
  check.rhs_decomposition = decompose(chern_numbers(X), X.dim());
  check.rhs = check.rhs_decomposition.as_lazard();
  check.pass = check.lhs == check.rhs;
  return check;
}

IdentityCheck hrrc_check(const ProjProduct& X, const std::vector<LineBundleSpec>& bundles,
                         int order) {
  const int p = static_cast<int>(bundles.size());
  if (p > X.dim()) throw Error("hrrc: more bundles than the dimension of X");
  if (order <= X.dim()) throw Error("hrrc: order must exceed dim X");

  IdentityCheck check;
  check.name = "hrrc " + X.str();
  for (const LineBundleSpec& bundle : bundles) check.name += " " + bundle.str();
  check.degree = X.dim() - p;

  // LHS: h^{-1}(L) = c1(L) g(c1(L)) for each bundle, times g^{-1}(T_X).
  TruncSeries<LazardElement> g = inverse_todd(order);
  ChowClass<LazardElement> integrand = tangent_genus_class(inverse(g), X);
  for (const LineBundleSpec& bundle : bundles) {
    ChowClass<LazardElement> c = lift(c1(bundle));
    integrand = integrand * (c * eval_at(g, c));
  }
  check.lhs = integrand.integrate();

  check.rhs_decomposition =
      decompose(complete_intersection_chern_numbers(X, bundles), X.dim() - p);
  check.rhs = check.rhs_decomposition.as_lazard();
  check.pass = check.lhs == check.rhs;
  return check;
}

namespace {

void compositions(int d, std::vector<int>& stack, std::vector<ProjProduct>& out) {
  if (d == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int first = 1; first <= d; ++first) {
    stack.push_back(first);
    compositions(d - first, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<ProjProduct> all_products_of_dim(int d) {
  if (d < 1) throw Error("all_products_of_dim: dimension must be >= 1");
  std::vector<ProjProduct> out;
  std::vector<int> stack;
  compositions(d, stack, out);
  return out;
}

std::vector<ProjProduct> all_products_up_to_dim(int max_dim) {
  std::vector<ProjProduct> out;
  for (int d = 1; d <= max_dim; ++d) {
    auto batch = all_products_of_dim(d);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<IdentityCheck> hrr_suite(int max_dim, int order) {
  const std::vector<ProjProduct> varieties = all_products_up_to_dim(max_dim);
  std::vector<IdentityCheck> checks(varieties.size());
  const int n = static_cast<int>(varieties.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    checks[static_cast<std::size_t>(i)] = hrr_check(varieties[static_cast<std::size_t>(i)], order);
  }
  return checks;
}

std::vector<IdentityCheck> hrrc_suite(
    const std::vector<std::pair<ProjProduct, std::vector<LineBundleSpec>>>& cases, int order) {
  std::vector<IdentityCheck> checks(cases.size());
  const int n = static_cast<int>(cases.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    const auto& [variety, bundles] = cases[static_cast<std::size_t>(i)];
    checks[static_cast<std::size_t>(i)] = hrrc_check(variety, bundles, order);
  }
  return checks;
}

}  // namespace cobalg
