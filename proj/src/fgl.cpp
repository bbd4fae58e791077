#include "cobalg/fgl.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace cobalg {

namespace {
const std::vector<std::string> kU{"u"};
const std::vector<std::string> kUV{"u", "v"};
const std::vector<std::string> kUVW{"u", "v", "w"};
}  // namespace

TruncSeries<LazardElement> universal_log(int order) {
  if (order < 2) throw Error("universal_log: order must be >= 2");
  TruncSeries<LazardElement> h(kU, order);
  h.add_term(Expo{1, 0, 0}, LazardElement(1));
  for (int i = 1; i + 1 < order; ++i) {
    h.add_term(Expo{i + 1, 0, 0},
               LazardElement::monomial(Partition({i}), Rational(1, i + 1)));
  }
  return h;
}

TruncSeries<LazardElement> inverse_todd(int order) {
  if (order < 1) throw Error("inverse_todd: order must be >= 1");
  // u*g(u) = h^{-1}(u) holds through degree order, so revert h at order+1.
  return divide_by_variable(revert(universal_log(order + 1)));
}

FormalGroupLaw build_universal_fgl(int order) {
  if (order < 2) throw Error("universal_fgl: order must be >= 2");
  TruncSeries<LazardElement> h = universal_log(order);
  TruncSeries<LazardElement> h_inv = revert(h);
  TruncSeries<LazardElement> u = TruncSeries<LazardElement>::variable(kUV, order, "u");
  TruncSeries<LazardElement> v = TruncSeries<LazardElement>::variable(kUV, order, "v");
  TruncSeries<LazardElement> sum = compose(h, u) + compose(h, v);
  return FormalGroupLaw{compose(h_inv, sum)};
}

FormalGroupLaw universal_fgl(int order) {
  static std::mutex lock;
  static std::map<int, FormalGroupLaw> cache;
  std::scoped_lock guard(lock);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_universal_fgl(order)).first;
  return it->second;
}

FglAxiomReport verify_fgl_axioms(const FormalGroupLaw& fgl) {
  FglAxiomReport report;
  const auto& F = fgl.law;
  const int order = F.order();
  std::ostringstream detail;

  // Linearization: exactly u + v below degree 2.
  report.linear = F.coeff(Expo{1, 0, 0}).is_one() && F.coeff(Expo{0, 1, 0}).is_one() &&
                  F.coeff(Expo{0, 0, 0}).is_zero();
  if (!report.linear)
    detail << "linearization: degree<2 part of F is not u+v; F = " << to_string(F) << "\n";

  // Unit: F(0, v) = v and F(u, 0) = u.
  {
    TruncSeries<LazardElement> zero(kUV, order);
    TruncSeries<LazardElement> u = TruncSeries<LazardElement>::variable(kUV, order, "u");
    TruncSeries<LazardElement> v = TruncSeries<LazardElement>::variable(kUV, order, "v");
    auto left = substitute(F, {zero, v});
    auto right = substitute(F, {u, zero});
    report.unit = left == v && right == u;
    if (!report.unit)
      detail << "unit: F(0,v) = " << to_string(left) << " ; F(u,0) = " << to_string(right)
             << "\n";
  }

  // Commutativity by exponent swap.
  {
    TruncSeries<LazardElement> swapped(kUV, order);
    for (const auto& [e, c] : F.terms()) swapped.add_term(Expo{e[1], e[0], 0}, c);
    report.commutative = swapped == F;
    if (!report.commutative)
      detail << "commutativity: F(v,u) = " << to_string(swapped) << " ; F(u,v) = "
             << to_string(F) << "\n";
  }

  // Associativity in three variables.
  {
    TruncSeries<LazardElement> u = TruncSeries<LazardElement>::variable(kUVW, order, "u");
    TruncSeries<LazardElement> v = TruncSeries<LazardElement>::variable(kUVW, order, "v");
    TruncSeries<LazardElement> w = TruncSeries<LazardElement>::variable(kUVW, order, "w");
    auto Fuv = substitute(F, {u, v});
    auto Fvw = substitute(F, {v, w});
    auto left = substitute(F, {u, Fvw});
    auto right = substitute(F, {Fuv, w});
    report.associative = left == right;
    if (!report.associative)
      detail << "associativity: F(u,F(v,w)) = " << to_string(left) << " ; F(F(u,v),w) = "
             << to_string(right) << "\n";
  }

  report.detail = detail.str();
  return report;
}

GAxiomReport verify_g_axiom(int order) {
  if (order < 2) throw Error("verify_g_axiom: order must be >= 2");
  FormalGroupLaw fgl = universal_fgl(order);
  TruncSeries<LazardElement> g = inverse_todd(order);
  TruncSeries<LazardElement> ug =
      TruncSeries<LazardElement>::variable(kU, order, "u") * g;  // u*g(u) = h^{-1}(u)

  TruncSeries<LazardElement> u = TruncSeries<LazardElement>::variable(kUV, order, "u");
  TruncSeries<LazardElement> v = TruncSeries<LazardElement>::variable(kUV, order, "v");
  auto lhs = substitute(fgl.law, {compose(ug, u), compose(ug, v)});
  auto rhs = compose(ug, u + v);

  GAxiomReport report;
  report.pass = lhs == rhs;
  report.lhs = to_string(lhs);
  report.rhs = to_string(rhs);
  return report;
}

LagrangeReport verify_lagrange(int order, int rmax) {
  if (rmax > order - 2)
    throw Error("verify_lagrange: need order >= rmax + 2");
  TruncSeries<LazardElement> g = inverse_todd(order);
  TruncSeries<LazardElement> g_inv = inverse(g);
  TruncSeries<LazardElement> h = universal_log(order);

  LagrangeReport report;
  report.pass = true;
  std::ostringstream detail;
  TruncSeries<LazardElement> power = g_inv;  // g^{-(r+1)} for r = 0, 1, ...
  for (int r = 0; r <= rmax; ++r) {
    LazardElement lhs = power.coeff1(r);
    LazardElement rhs = h.coeff1(r + 1) * Rational(r + 1);
    LazardElement expected = r == 0 ? LazardElement(1) : LazardElement::generator(r);
    if (!(lhs == rhs && lhs == expected)) {
      report.pass = false;
      detail << "r=" << r << ": [u^r] g^-(r+1) = " << lhs.str() << " ; (r+1)[u^{r+1}] h = "
             << rhs.str() << " ; expected " << expected.str() << "\n";
    }
    if (r < rmax) power = power * g_inv;
  }
  report.detail = detail.str();
  return report;
}

TruncSeries<Rational> specialize(const TruncSeries<LazardElement>& s, const GenusSpec& spec) {
  TruncSeries<Rational> out(s.vars(), s.order());
  for (const auto& [e, c] : s.terms()) out.add_term(e, specialize(c, spec));
  return out;
}

TruncSeries<Rational> specialize(const FormalGroupLaw& fgl, const GenusSpec& spec) {
  return specialize(fgl.law, spec);
}

}  // namespace cobalg
