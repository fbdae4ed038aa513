// Compares the serial element-order scan against the OpenMP one on a few
// representative groups and reports the speedup.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "abelian/group.hpp"
#include "abelian/parse.hpp"

namespace {

using abelian::Group;
using abelian::u64;

template <typename F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> exprs;
  for (int i = 1; i < argc; ++i) exprs.emplace_back(argv[i]);
  if (exprs.empty())
    exprs = {"add:999983", "mult:999983", "add:960xadd:1024", "add:100xmult:961"};

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-22s %12s %12s %12s %9s\n", "group", "|G|", "serial ms", "parallel ms",
              "speedup");

  for (const auto& expr : exprs) {
    const Group g(abelian::parse_group_expr(expr), /*element_cap=*/100'000'000);
    std::vector<u64> serial, parallel;
    const double s_ms = best_ms(3, [&] { serial = abelian::element_orders_serial(g); });
    const double p_ms = best_ms(3, [&] { parallel = abelian::element_orders(g); });
    if (serial != parallel) {
      std::fprintf(stderr, "MISMATCH: %s parallel scan differs from serial reference\n",
                   expr.c_str());
      return 1;
    }
    std::printf("%-22s %12llu %12.2f %12.2f %8.2fx\n", expr.c_str(),
                static_cast<unsigned long long>(g.order()), s_ms, p_ms, s_ms / p_ms);
  }
  return 0;
}
