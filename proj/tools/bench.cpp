/* Benchmark comparing the serial reference kernels against the OpenMP
 * ones on the workloads that dominate verification: Lazard-coefficient
 * series products, full FGL construction, and the HRR/HRRC sweeps.
 * Results must agree exactly; the tool aborts if they ever differ.
 */
#include <chrono>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cobalg/verify.hpp"

using namespace cobalg;

namespace {

double seconds(std::chrono::steady_clock::time_point begin) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
}

void row(const std::string& name, double serial, double parallel, bool equal) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(3) << std::setw(9) << serial << " s" << std::setw(9) << parallel
            << " s" << std::setw(8) << std::setprecision(2)
            << (parallel > 0 ? serial / parallel : 0.0) << "x  " << (equal ? "equal" : "MISMATCH")
            << "\n";
  if (!equal) std::exit(1);
}

template <class F>
double timed(F&& f) {
  auto begin = std::chrono::steady_clock::now();
  f();
  return seconds(begin);
}

void bench_series_product(int order) {
  // F(v,w)-style factors: the bivariate universal law against itself.
  FormalGroupLaw fgl = build_universal_fgl(order);
  TruncSeries<LazardElement> a = fgl.law;
  TruncSeries<LazardElement> s(a.vars(), a.order());
  TruncSeries<LazardElement> p(a.vars(), a.order());
  double ts = timed([&] { s = mul(a, a, MulMode::kSerial); });
  double tp = timed([&] { p = mul(a, a, MulMode::kParallel); });
  row("series product, order " + std::to_string(order), ts, tp, s == p);
}

template <class F>
void with_threads(int n, F&& f) {
#ifdef _OPENMP
  int saved = omp_get_max_threads();
  omp_set_num_threads(n);
  f();
  omp_set_num_threads(saved);
#else
  (void)n;
  f();
#endif
}

void bench_axioms(int order) {
  bool ok1 = false, okn = false;
  double ts = timed([&] { with_threads(1, [&] { ok1 = verify_fgl_axioms(build_universal_fgl(order)).all(); }); });
  double tp = timed([&] { okn = verify_fgl_axioms(build_universal_fgl(order)).all(); });
  row("fgl axioms, order " + std::to_string(order), ts, tp, ok1 == okn && ok1);
}

void bench_hrr(int max_dim, int order) {
  std::vector<IdentityCheck> serial, parallel;
  double ts = timed([&] { with_threads(1, [&] { serial = hrr_suite(max_dim, order); }); });
  double tp = timed([&] { parallel = hrr_suite(max_dim, order); });
  bool equal = serial.size() == parallel.size();
  for (std::size_t i = 0; equal && i < serial.size(); ++i)
    equal = serial[i].pass && parallel[i].pass && serial[i].lhs == parallel[i].lhs;
  row("hrr sweep, dim <= " + std::to_string(max_dim), ts, tp, equal);
}

void bench_hrrc(int cases, int order) {
  auto work = default_hrrc_cases(cases);
  std::vector<IdentityCheck> serial, parallel;
  double ts = timed([&] { with_threads(1, [&] { serial = hrrc_suite(work, order); }); });
  double tp = timed([&] { parallel = hrrc_suite(work, order); });
  bool equal = serial.size() == parallel.size();
  for (std::size_t i = 0; equal && i < serial.size(); ++i)
    equal = serial[i].pass && parallel[i].pass && serial[i].lhs == parallel[i].lhs;
  row("hrrc sweep, " + std::to_string(work.size()) + " cases", ts, tp, equal);
}

}  // namespace

int main(int argc, char** argv) {
  int order = argc > 1 ? std::atoi(argv[1]) : 10;
  if (order < 4 || order > 16) {
    std::cerr << "usage: cobalg_bench [order 4..16]\n";
    return 2;
  }
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::cout << std::left << std::setw(34) << "workload" << std::right << std::setw(11) << "serial"
            << std::setw(11) << "parallel" << std::setw(9) << "speedup" << "\n";

  bench_series_product(order);
  bench_series_product(order + 2 <= 16 ? order + 2 : order);
  bench_axioms(order);
  bench_hrr(6, order < 7 ? 7 : order);
  bench_hrrc(120, 8);
  return 0;
}
