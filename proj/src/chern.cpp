#include "cobalg/chern.hpp"

namespace cobalg {

ChowClass<Rational> c1(const LineBundleSpec& bundle) {
  ChowClass<Rational> out(bundle.base);
  for (int i = 0; i < bundle.base.nfactors(); ++i) {
    int a = bundle.multidegree[static_cast<std::size_t>(i)];
    if (a != 0)
      out = out + ChowClass<Rational>::hyperplane(bundle.base, i) * Rational(a);
  }
  return out;
}

std::vector<std::pair<ChowClass<Rational>, int>> tangent_chern_roots(const ProjProduct& X) {
  std::vector<std::pair<ChowClass<Rational>, int>> roots;
  for (int i = 0; i < X.nfactors(); ++i) {
    roots.emplace_back(ChowClass<Rational>::hyperplane(X, i),
                       X.factors[static_cast<std::size_t>(i)] + 1);
  }
  return roots;
}

ChowClass<Rational> total_tangent_chern(const ProjProduct& X) {
  ChowClass<Rational> total = ChowClass<Rational>::one(X);
  for (const auto& [root, mult] : tangent_chern_roots(X)) {
    ChowClass<Rational> factor = ChowClass<Rational>::one(X) + root;
    for (int i = 0; i < mult; ++i) total = total * factor;
  }
  return total;
}

namespace {

std::map<Partition, Rational> chern_numbers_of_class(const ChowClass<Rational>& total_chern,
                                                     const ChowClass<Rational>& measure,
                                                     int z_dim) {
  const ProjProduct& X = total_chern.base();
  std::vector<ChowClass<Rational>> graded;
  graded.reserve(static_cast<std::size_t>(z_dim) + 1);
  for (int j = 0; j <= z_dim; ++j) graded.push_back(total_chern.graded_part(j));

  std::map<Partition, Rational> out;
  for (const Partition& index : partitions_of(z_dim)) {
    ChowClass<Rational> prod = measure;
    for (int part : index.parts()) prod = prod * graded[static_cast<std::size_t>(part)];
    out.emplace(index, prod.integrate());
  }
  return out;
}

}  // namespace

std::map<Partition, Rational> chern_numbers(const ProjProduct& X) {
  return chern_numbers_of_class(total_tangent_chern(X), ChowClass<Rational>::one(X), X.dim());
}

std::map<Partition, Rational> complete_intersection_chern_numbers(
    const ProjProduct& X, const std::vector<LineBundleSpec>& bundles) {
  const int p = static_cast<int>(bundles.size());
  if (p > X.dim()) throw Error("complete intersection: more bundles than the dimension");
  ChowClass<Rational> total = total_tangent_chern(X);
  ChowClass<Rational> measure = ChowClass<Rational>::one(X);
  for (const LineBundleSpec& bundle : bundles) {
    if (!(bundle.base == X)) throw Error("bundle lives on a different variety");
    ChowClass<Rational> c = c1(bundle);
    total = total * inverse(ChowClass<Rational>::one(X) + c);
    measure = measure * c;
  }
  return chern_numbers_of_class(total, measure, X.dim() - p);
}

std::map<Partition, Rational> hypersurface_chern_numbers(const ProjProduct& X,
                                                         const LineBundleSpec& bundle) {
  if (X.dim() < 2) throw Error("hypersurface_chern_numbers: need dim X >= 2");
  return complete_intersection_chern_numbers(X, {bundle});
}

}  // namespace cobalg
