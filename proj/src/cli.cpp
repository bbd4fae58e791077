#include "cobalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cobalg/verify.hpp"

namespace cobalg {

namespace {

using nlohmann::json;

constexpr int kDefaultOrder = 8;
constexpr int kMaxOrder = 16;

struct Options {
  int order = kDefaultOrder;
  std::string variety;
  std::vector<std::string> bundles;
  std::string spec;
  std::string format = "text";
  int threads = 0;
  int max_dim = 4;
};

bool want_json(const Options& opt) { return opt.format == "json"; }

void warn_large_order(const Options& opt, std::ostream& err) {
  if (opt.order >= 12)
    err << "note: order " << opt.order << " can take a while; the hard cap is " << kMaxOrder
        << "\n";
}

ProjProduct variety_of(const Options& opt) {
  if (opt.variety.empty()) throw ParseError("missing --variety");
  return ProjProduct::parse(opt.variety);
}

std::vector<LineBundleSpec> bundles_of(const Options& opt, const ProjProduct& x) {
  std::vector<LineBundleSpec> out;
  out.reserve(opt.bundles.size());
  for (const std::string& text : opt.bundles) out.push_back(LineBundleSpec::parse(text, x));
  return out;
}

// Orders only pad precision beyond dim X, so lift them as needed.
int order_for(const Options& opt, const ProjProduct& x) {
  return std::max(opt.order, x.dim() + 1);
}

json decomposition_json(const DecompositionReport& report) {
  json basis = json::array();
  json coords = json::array();
  for (const Partition& p : report.basis) basis.push_back(p.str());
  for (const Rational& c : report.coordinates) coords.push_back(c.str());
  json input = json::object();
  for (const auto& [index, value] : report.chern_input) input[index.str()] = value.str();
  return json{{"degree", report.degree},
              {"basis", basis},
              {"coordinates", coords},
              {"residual", report.residual.str()},
              {"chern_input", input},
              {"class", report.as_lazard().str()}};
}

json identity_json(const IdentityCheck& check) {
  json basis = json::array();
  json coords = json::array();
  for (const Partition& p : check.rhs_decomposition.basis) basis.push_back(p.str());
  for (const Rational& c : check.rhs_decomposition.coordinates) coords.push_back(c.str());
  return json{{"degree", check.degree}, {"basis", basis},   {"coordinates", coords},
              {"lhs", check.lhs.str()}, {"rhs", check.rhs.str()}, {"pass", check.pass}};
}

int emit_identity(const IdentityCheck& check, const Options& opt, std::ostream& out) {
  if (want_json(opt)) {
    out << identity_json(check).dump(2) << "\n";
  } else if (check.pass) {
    out << "PASS " << check.name << ": lhs = rhs = " << check.lhs.str() << "\n";
  } else {
    out << "FAIL " << check.name << "\n  lhs = " << check.lhs.str()
        << "\n  rhs = " << check.rhs.str() << "\n";
  }
  return check.pass ? 0 : 1;
}

int cmd_fgl(const Options& opt, std::ostream& out, std::ostream& err) {
  warn_large_order(opt, err);
  FormalGroupLaw fgl = universal_fgl(opt.order);
  const bool specialized = !opt.spec.empty();
  GenusSpec spec = specialized ? GenusSpec::parse(opt.spec) : GenusSpec::additive();

  json coefficients = json::array();
  for (int total = 1; total < opt.order; ++total) {
    for (int i = 0; 2 * i <= total; ++i) {
      const int j = total - i;
      LazardElement c = fgl.coeff(i, j);
      if (c.is_zero()) continue;
      std::string v = specialized ? specialize(c, spec).str() : c.str();
      if (v == "0") continue;
      if (want_json(opt)) {
        coefficients.push_back(json{{"i", i}, {"j", j}, {"value", v}});
      } else {
        out << "a[" << i << "," << j << "] = " << v << "\n";
      }
    }
  }
  if (want_json(opt)) {
    json doc{{"command", "fgl"}, {"order", opt.order}, {"coefficients", coefficients}};
    if (specialized) doc["spec"] = spec.name();
    out << doc.dump(2) << "\n";
  }
  return 0;
}

// log, gseries and chi share the "one series out" shape.
int cmd_series(const std::string& which, const Options& opt, std::ostream& out,
               std::ostream& err) {
  warn_large_order(opt, err);
  TruncSeries<LazardElement> series = [&]() {
    if (which == "log") return universal_log(opt.order);
    if (which == "gseries") return inverse_todd(opt.order);
    return formal_inverse(universal_fgl(opt.order).law);
  }();

  std::string text;
  if (!opt.spec.empty()) {
    text = to_string(specialize(series, GenusSpec::parse(opt.spec)));
  } else {
    text = to_string(series);
  }
  if (want_json(opt)) {
    json doc{{"command", which}, {"order", opt.order}, {"series", text}};
    if (!opt.spec.empty()) doc["spec"] = opt.spec;
    out << doc.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
  return 0;
}

int cmd_genus(const Options& opt, std::ostream& out, std::ostream& err) {
  warn_large_order(opt, err);
  ProjProduct x = variety_of(opt);
  LazardElement lhs = hrr_lhs(x, order_for(opt, x));
  std::string value;
  if (!opt.spec.empty()) {
    value = specialize(lhs, GenusSpec::parse(opt.spec)).str();
  } else {
    value = lhs.str();
  }
  if (want_json(opt)) {
    json doc{{"command", "genus"}, {"variety", x.str()}, {"value", value}};
    if (!opt.spec.empty()) doc["spec"] = opt.spec;
    out << doc.dump(2) << "\n";
  } else {
    out << value << "\n";
  }
  return 0;
}

int cmd_chern(const Options& opt, std::ostream& out, std::ostream&) {
  ProjProduct x = variety_of(opt);
  std::vector<LineBundleSpec> bundles = bundles_of(opt, x);
  std::map<Partition, Rational> numbers =
      bundles.empty() ? chern_numbers(x) : complete_intersection_chern_numbers(x, bundles);
  if (want_json(opt)) {
    json table = json::object();
    for (const auto& [index, value] : numbers) table[index.str()] = value.str();
    json doc{{"command", "chern"},
             {"variety", x.str()},
             {"dimension", x.dim() - static_cast<int>(bundles.size())},
             {"chern_numbers", table}};
    if (!bundles.empty()) {
      json b = json::array();
      for (const auto& bundle : bundles) b.push_back(bundle.str());
      doc["bundles"] = b;
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [index, value] : numbers)
      out << "C[" << index.str() << "] = " << value.str() << "\n";
  }
  return 0;
}

int cmd_decompose(const Options& opt, std::ostream& out, std::ostream&) {
  ProjProduct x = variety_of(opt);
  std::vector<LineBundleSpec> bundles = bundles_of(opt, x);
  std::map<Partition, Rational> numbers =
      bundles.empty() ? chern_numbers(x) : complete_intersection_chern_numbers(x, bundles);
  DecompositionReport report = decompose(numbers, x.dim() - static_cast<int>(bundles.size()));
  if (want_json(opt)) {
    out << decomposition_json(report).dump(2) << "\n";
  } else {
    out << "degree " << report.degree << "\n";
    out << "basis:";
    for (const Partition& p : report.basis) out << " " << p.str();
    out << "\ncoordinates:";
    for (const Rational& c : report.coordinates) out << " " << c.str();
    out << "\nclass = " << report.as_lazard().str() << "\n";
    out << "residual = " << report.residual.str() << "\n";
  }
  return 0;
}

int cmd_hrr(const Options& opt, std::ostream& out, std::ostream& err) {
  warn_large_order(opt, err);
  ProjProduct x = variety_of(opt);
  return emit_identity(hrr_check(x, order_for(opt, x)), opt, out);
}

int cmd_hrrc(const Options& opt, std::ostream& out, std::ostream& err) {
  warn_large_order(opt, err);
  ProjProduct x = variety_of(opt);
  std::vector<LineBundleSpec> bundles = bundles_of(opt, x);
  if (bundles.empty()) throw ParseError("hrrc requires at least one --bundle");
  return emit_identity(hrrc_check(x, bundles, order_for(opt, x)), opt, out);
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  warn_large_order(opt, err);
#ifdef _OPENMP
  if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif
  std::vector<VerifyResult> results = run_verification(opt.order, opt.max_dim);
  bool all_pass = true;
  if (want_json(opt)) {
    json checks = json::array();
    for (const VerifyResult& r : results) {
      all_pass = all_pass && r.pass;
      json item{{"name", r.name}, {"pass", r.pass}};
      if (!r.pass) item["detail"] = r.detail;
      checks.push_back(item);
    }
    out << json{{"command", "verify"},
                {"order", opt.order},
                {"max_dim", opt.max_dim},
                {"checks", checks},
                {"pass", all_pass}}
               .dump(2)
        << "\n";
  } else {
    for (const VerifyResult& r : results) {
      all_pass = all_pass && r.pass;
      out << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
      if (!r.pass && !r.detail.empty()) out << r.detail;
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact formal-group-law, genus and cobordism calculator"};
  app.name("cobalg");
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_order = true) {
    if (with_order)
      cmd->add_option("--order", opt.order, "truncation order")
          ->check(CLI::Range(2, kMaxOrder))
          ->capture_default_str();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    return cmd;
  };
  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("--spec", opt.spec,
                    "genus: 'additive', 'multiplicative' or assignments like p1=1,p2=-1/2");
  };
  auto add_variety = [&](CLI::App* cmd) {
    cmd->add_option("--variety", opt.variety, "product of projective spaces, e.g. P2xP1")
        ->required();
  };
  auto add_bundles = [&](CLI::App* cmd) {
    cmd->add_option("--bundle", opt.bundles, "line bundle, e.g. O(2,-1); repeatable");
  };

  CLI::App* fgl = add_common(app.add_subcommand("fgl", "universal formal group law coefficients"));
  add_spec(fgl);
  CLI::App* log_cmd = add_common(app.add_subcommand("log", "universal logarithm h"));
  add_spec(log_cmd);
  CLI::App* gseries = add_common(app.add_subcommand("gseries", "universal inverse Todd series g"));
  add_spec(gseries);
  CLI::App* chi = add_common(app.add_subcommand("chi", "formal inverse chi with F(u,chi(u)) = 0"));
  add_spec(chi);
  CLI::App* genus = add_common(app.add_subcommand("genus", "genus of a variety"));
  add_spec(genus);
  add_variety(genus);
  CLI::App* chern = add_common(app.add_subcommand("chern", "Chern numbers"), false);
  add_variety(chern);
  add_bundles(chern);
  CLI::App* dec = add_common(app.add_subcommand("decompose", "Milnor-basis decomposition"), false);
  add_variety(dec);
  add_bundles(dec);
  CLI::App* hrr = add_common(app.add_subcommand("hrr", "Hirzebruch-Riemann-Roch check"));
  add_variety(hrr);
  CLI::App* hrrc = add_common(app.add_subcommand("hrrc", "HRR check with line bundles"));
  add_variety(hrrc);
  add_bundles(hrrc);
  CLI::App* verify = add_common(app.add_subcommand("verify", "run the verification suite"));
  verify->add_option("--max-dim", opt.max_dim, "largest variety dimension for HRR")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  verify->add_option("--threads", opt.threads, "worker threads (0 = library default)")
      ->check(CLI::Range(0, 256));

  app.require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (fgl->parsed()) return cmd_fgl(opt, out, err);
    if (log_cmd->parsed()) return cmd_series("log", opt, out, err);
    if (gseries->parsed()) return cmd_series("gseries", opt, out, err);
    if (chi->parsed()) return cmd_series("chi", opt, out, err);
    if (genus->parsed()) return cmd_genus(opt, out, err);
    if (chern->parsed()) return cmd_chern(opt, out, err);
    if (dec->parsed()) return cmd_decompose(opt, out, err);
    if (hrr->parsed()) return cmd_hrr(opt, out, err);
    if (hrrc->parsed()) return cmd_hrrc(opt, out, err);
    if (verify->parsed()) return cmd_verify(opt, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace cobalg
