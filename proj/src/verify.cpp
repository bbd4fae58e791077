#include "cobalg/verify.hpp"

#include <random>
#include <sstream>

#include "cobalg/series_io.hpp"

namespace cobalg {

namespace {

const std::vector<std::string> kU{"u"};
const std::vector<std::string> kUV{"u", "v"};

VerifyResult result(std::string name, bool pass, std::string detail = "") {
  return VerifyResult{std::move(name), pass, pass ? "" : std::move(detail)};
}

// Deterministic RNG facade: mt19937 output is standardized, so derived
// values are identical everywhere (std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint32_t seed) : gen_(seed) {}
  int range(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<std::uint32_t>(hi - lo + 1));
  }

 private:
  std::mt19937 gen_;
};

}  // namespace

TruncSeries<Rational> additive_law(int order) {
  TruncSeries<Rational> f(kUV, order);
  f.add_term(Expo{1, 0, 0}, Rational(1));
  f.add_term(Expo{0, 1, 0}, Rational(1));
  return f;
}

TruncSeries<Rational> multiplicative_law(int order) {
  TruncSeries<Rational> f = additive_law(order);
  f.add_term(Expo{1, 1, 0}, Rational(-1));
  return f;
}

Rational inverse_todd_coeff_multiplicative(int i) {
  mpz_class fact(1);
  for (int k = 2; k <= i + 1; ++k) fact *= k;
  Rational value(mpz_class(1), fact);
  return i % 2 == 0 ? value : -value;
}

VerifyResult check_fgl_axioms(int order) {
  FglAxiomReport report = verify_fgl_axioms(universal_fgl(order));
  return result("fgl-axioms order=" + std::to_string(order), report.all(), report.detail);
}

VerifyResult check_g_axiom(int order) {
  GAxiomReport report = verify_g_axiom(order);
  return result("g-axiom order=" + std::to_string(order), report.pass,
                "lhs = " + report.lhs + "\nrhs = " + report.rhs);
}

VerifyResult check_lagrange(int order, int rmax) {
  LagrangeReport report = verify_lagrange(order, rmax);
  return result("lagrange r=0.." + std::to_string(rmax), report.pass, report.detail);
}

VerifyResult check_specializations(int law_order, int todd_terms) {
  std::ostringstream detail;
  bool pass = true;
  const GenusSpec mult = GenusSpec::multiplicative();
  const GenusSpec add = GenusSpec::additive();

  FormalGroupLaw fgl = universal_fgl(law_order);
  auto fm = specialize(fgl, mult);
  if (fm != multiplicative_law(law_order)) {
    pass = false;
    detail << "multiplicative law: got " << to_string(fm) << " want "
           << to_string(multiplicative_law(law_order)) << "\n";
  }
  auto fa = specialize(fgl, add);
  if (fa != additive_law(law_order)) {
    pass = false;
    detail << "additive law: got " << to_string(fa) << " want u + v\n";
  }

  auto g = inverse_todd(todd_terms);
  auto gm = specialize(g, mult);
  for (int i = 0; i < todd_terms; ++i) {
    Rational want = inverse_todd_coeff_multiplicative(i);
    if (gm.coeff1(i) != want) {
      pass = false;
      detail << "todd coefficient i=" << i << ": got " << gm.coeff1(i).str() << " want "
             << want.str() << "\n";
    }
  }
  auto ga = specialize(g, add);
  if (ga != TruncSeries<Rational>::constant(kU, todd_terms, Rational(1))) {
    pass = false;
    detail << "additive g: got " << to_string(ga) << " want 1\n";
  }
  return result("specializations", pass, detail.str());
}

VerifyResult check_grading(int order) {
  FormalGroupLaw fgl = universal_fgl(order);
  std::ostringstream detail;
  bool pass = true;
  for (const auto& [e, c] : fgl.law.terms()) {
    const int i = e[0], j = e[1];
    if (!c.is_homogeneous(i + j - 1)) {
      pass = false;
      detail << "a[" << i << "," << j << "] = " << c.str() << " is not homogeneous of degree "
             << (i + j - 1) << "\n";
    }
    if (fgl.coeff(j, i) != c) {
      pass = false;
      detail << "a[" << i << "," << j << "] != a[" << j << "," << i << "]\n";
    }
  }
  LazardElement want = -LazardElement::generator(1);
  if (fgl.coeff(1, 1) != want) {
    pass = false;
    detail << "a[1,1] = " << fgl.coeff(1, 1).str() << " want " << want.str() << "\n";
  }
  return result("grading order=" + std::to_string(order), pass, detail.str());
}

VerifyResult check_key_remark(int rmax, int lmax) {
  std::ostringstream detail;
  bool pass = true;
  for (int r = 1; r <= rmax; ++r) {
    for (int l = 1; l <= lmax; ++l) {
      ProjProduct x(std::vector<int>{r, l});
      for (int i = 0; i <= r; ++i) {
        for (int j = 0; j <= l; ++j) {
          ChowClass<Rational> cls(x);
          cls.add_term({i, j}, Rational(1));
          Rational got = cls.integrate();
          Rational want((i == r && j == l) ? 1 : 0);
          if (got != want) {
            pass = false;
            detail << "int_{P" << r << "xP" << l << "} H1^" << i << " H2^" << j << " = "
                   << got.str() << " want " << want.str() << "\n";
          }
        }
      }
    }
  }
  return result("key-remark r,l<=" + std::to_string(rmax), pass, detail.str());
}

VerifyResult check_hrr_all(int max_dim, int order) {
  std::ostringstream detail;
  bool pass = true;
  for (const IdentityCheck& check : hrr_suite(max_dim, order)) {
    if (!check.pass) {
      pass = false;
      detail << check.name << ": lhs = " << check.lhs.str() << " ; rhs = " << check.rhs.str()
             << "\n";
    }
  }
  return result("hrr dim<=" + std::to_string(max_dim), pass, detail.str());
}

VerifyResult check_genus_regression(int max_dim, int order) {
  std::ostringstream detail;
  bool pass = true;
  const GenusSpec mult = GenusSpec::multiplicative();
  const GenusSpec add = GenusSpec::additive();
  for (const ProjProduct& x : all_products_up_to_dim(max_dim)) {
    LazardElement lhs = hrr_lhs(x, order);
    Rational todd = specialize(lhs, mult);
    if (!todd.is_one()) {
      pass = false;
      detail << "todd genus of " << x.str() << " = " << todd.str() << " want 1\n";
    }
    Rational additive = specialize(lhs, add);
    if (!additive.is_zero()) {
      pass = false;
      detail << "additive genus of " << x.str() << " = " << additive.str() << " want 0\n";
    }
  }
  return result("genus-regression dim<=" + std::to_string(max_dim), pass, detail.str());
}

VerifyResult check_milnor_soundness(int max_degree) {
  std::ostringstream detail;
  bool pass = true;
  for (int d = 1; d <= max_degree; ++d) {
    Rational det = determinant(chern_pairing_matrix(d));
    if (det.is_zero()) {
      pass = false;
      detail << "pairing matrix singular at degree " << d << "\n";
      continue;
    }
    for (const Partition& basis_element : milnor_basis(d)) {
      ProjProduct x(std::vector<int>(basis_element.parts().begin(), basis_element.parts().end()));
      LazardElement got = decompose(chern_numbers(x), d).as_lazard();
      LazardElement want = LazardElement::monomial(basis_element, Rational(1));
      if (got != want) {
        pass = false;
        detail << "decompose(" << x.str() << ") = " << got.str() << " want " << want.str()
               << "\n";
      }
    }
  }
  {
    ProjProduct x(std::vector<int>{1, 1});
    LineBundleSpec bundle(x, {1, 1});
    LazardElement got = decompose(hypersurface_chern_numbers(x, bundle), 1).as_lazard();
    LazardElement want = LazardElement::generator(1);
    if (got != want) {
      pass = false;
      detail << "O(1,1) hypersurface in P1xP1: got " << got.str() << " want p1\n";
    }
  }
  return result("milnor-soundness d<=" + std::to_string(max_degree), pass, detail.str());
}

std::vector<std::pair<ProjProduct, std::vector<LineBundleSpec>>> default_hrrc_cases(
    int min_cases) {
  const std::vector<ProjProduct> varieties = {
      ProjProduct({2}), ProjProduct({3}),       ProjProduct({1, 1}),
      ProjProduct({1, 2}), ProjProduct({1, 1, 1}), ProjProduct({2, 2}),
  };
  Rng rng(987654321u);
  std::vector<std::pair<ProjProduct, std::vector<LineBundleSpec>>> cases;
  for (int i = 0; static_cast<int>(cases.size()) < min_cases; ++i) {
    const ProjProduct& x = varieties[static_cast<std::size_t>(i) % varieties.size()];
    int p = 1 + (i / static_cast<int>(varieties.size())) % 2;
    if (p > x.dim()) p = x.dim();
    std::vector<LineBundleSpec> bundles;
    for (int b = 0; b < p; ++b) {
      std::vector<int> degrees(static_cast<std::size_t>(x.nfactors()));
      for (auto& a : degrees) a = rng.range(-2, 3);
      bundles.emplace_back(x, std::move(degrees));
    }
    cases.emplace_back(x, std::move(bundles));
  }
  return cases;
}

VerifyResult check_hrrc_sweep(int min_cases, int order) {
  auto cases = default_hrrc_cases(min_cases);
  std::ostringstream detail;
  bool pass = true;
  for (const IdentityCheck& check : hrrc_suite(cases, order)) {
    if (!check.pass) {
      pass = false;
      detail << check.name << ": lhs = " << check.lhs.str() << " ; rhs = " << check.rhs.str()
             << "\n";
    }
  }
  return result("hrrc sweep n=" + std::to_string(cases.size()), pass, detail.str());
}

namespace {

Rational random_rational(Rng& rng) {
  return Rational(rng.range(-9, 9), rng.range(1, 9));
}

TruncSeries<Rational> random_series(Rng& rng, const std::vector<std::string>& vars, int order,
                                    bool zero_constant, bool unit_linear, bool unit_constant) {
  TruncSeries<Rational> s(vars, order);
  const int n = static_cast<int>(vars.size());
  for (int e0 = 0; e0 < order; ++e0) {
    const int cap1 = n > 1 ? order - 1 - e0 : 0;
    for (int e1 = 0; e1 <= cap1; ++e1) {
      const int cap2 = n > 2 ? order - 1 - e0 - e1 : 0;
      for (int e2 = 0; e2 <= cap2; ++e2) {
        if (rng.range(0, 2) == 0) s.add_term(Expo{e0, e1, e2}, random_rational(rng));
      }
    }
  }
  Expo zero{0, 0, 0};
  Expo lin{1, 0, 0};
  if (zero_constant) s.add_term(zero, -s.constant_term());
  if (unit_constant) s.add_term(zero, Rational(1) - s.constant_term());
  if (unit_linear) s.add_term(lin, Rational(1) - s.coeff1(1));
  return s;
}

}  // namespace

VerifyResult check_series_properties(int min_checks) {
  Rng rng(271828183u);
  int performed = 0;
  int failed = 0;
  std::ostringstream detail;
  auto expect = [&](bool ok, const char* what) {
    ++performed;
    if (!ok) {
      ++failed;
      if (failed <= 5) detail << "series property failed: " << what << "\n";
    }
  };

  const std::vector<std::vector<std::string>> var_choices = {{"u"}, {"u", "v"}, {"u", "v", "w"}};
  while (performed < min_checks) {
    const int order = rng.range(4, 10);
    const auto& vars = var_choices[static_cast<std::size_t>(rng.range(0, 2))];

    auto a = random_series(rng, vars, order, false, false, false);
    auto b = random_series(rng, vars, order, false, false, false);
    auto c = random_series(rng, vars, order, false, false, false);

    expect((a * b) * c == a * (b * c), "associativity");
    expect(a * b == b * a, "commutativity");
    expect(a * (b + c) == a * b + a * c, "distributivity");
    expect(mul(a, b, MulMode::kSerial) == mul(a, b, MulMode::kParallel),
           "serial/parallel agreement");

    // Truncation consistency: compute at order, then truncate, vs compute
    // at the lower order directly.
    {
      int lower = rng.range(2, order);
      expect((a * b).truncated(lower) == a.truncated(lower) * b.truncated(lower),
             "truncation consistency");
    }

    // Round trips on tame series.
    {
      auto s = random_series(rng, {"u"}, order, true, true, false);
      auto r = revert(s);
      auto u = TruncSeries<Rational>::variable({"u"}, order, "u");
      expect(compose(s, r) == u, "compose(s, revert(s)) == u");
      expect(compose(r, s) == u, "compose(revert(s), s) == u");
    }
    {
      auto s = random_series(rng, vars, order, false, false, true);
      auto one = TruncSeries<Rational>::constant(vars, order, Rational(1));
      expect(s * inverse(s) == one, "s * inverse(s) == 1");
    }
  }

  VerifyResult out = result("series-properties n=" + std::to_string(performed), failed == 0,
                            detail.str());
  return out;
}

std::vector<VerifyResult> run_verification(int order, int max_dim) {
  std::vector<VerifyResult> results;
  results.push_back(check_fgl_axioms(order));
  results.push_back(check_g_axiom(order));
  results.push_back(check_lagrange(order, order - 2));
  results.push_back(check_specializations(order, order - 1));
  results.push_back(check_grading(order));
  results.push_back(check_key_remark(4, 4));
  results.push_back(check_milnor_soundness(std::min(max_dim, 6)));
  for (const IdentityCheck& check : hrr_suite(max_dim, order)) {
    results.push_back(result(check.name, check.pass,
                             "lhs = " + check.lhs.str() + " ; rhs = " + check.rhs.str()));
  }
  results.push_back(check_genus_regression(max_dim, order));
  return results;
}

}  // namespace cobalg
