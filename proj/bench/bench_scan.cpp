// Compares the serial reference kernels against the OpenMP ones on the same
// inputs: a Hom-Poisson identity scan at growing dimension and an o-operator
// grid search. Results must agree exactly; the table reports wall times.

#include <chrono>
#include <cstdio>
#include <string>

#include "homcheck/checks.hpp"
#include "homcheck/construct.hpp"
#include "homcheck/fixtures.hpp"
#include "homcheck/operators.hpp"
#include "homcheck/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace homcheck;
namespace fx = homcheck::fixtures;

namespace {

double seconds(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

HomTwoProductAlgebra poisson_of_dim(int dim) {
  HomTwoProductAlgebra a = fx::unital_solvable_poisson();  // dim 3
  const auto f6 = fx::f6();
  const auto f1p = fx::f1_poisson();
  int i = 0;
  while (a.dim() + 3 <= dim) {
    a = direct_sum(a, i % 3 == 0 ? fx::unital_solvable_poisson()
                                 : direct_sum(f6, f1p));
    i += a.dim() % 5 + 1;
  }
  while (a.dim() < dim) a = direct_sum(a, fx::w2_algebra());
  return a;
}

void row(const std::string& label, double serial, double parallel) {
  std::printf("%-36s %10.3fs %10.3fs %8.2fx\n", label.c_str(), serial,
              parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int max_dim = 27;
  if (argc > 1) max_dim = std::max(3, std::atoi(argv[1]));

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial kernel\n");
#endif
  std::printf("%-36s %11s %11s %9s\n", "workload", "serial", "parallel",
              "speedup");

  for (int dim = 9; dim <= max_dim; dim += 9) {
    const auto a = poisson_of_dim(dim);
    CheckReport serial_report, parallel_report;
    const double ts = seconds([&] {
      set_default_exec(Exec::serial);
      serial_report = check_hom_poisson(a, {false, true});
    });
    const double tp = seconds([&] {
      set_default_exec(Exec::parallel);
      parallel_report = check_hom_poisson(a, {false, true});
    });
    if (!(serial_report.passed() && parallel_report.passed())) {
      std::printf("kernel disagreement at dim %d\n", dim);
      return 1;
    }
    row("check_hom_poisson, dim " + std::to_string(dim), ts, tp);
  }

  {
    const auto rep = regular_representation(fx::f1_poisson());
    std::size_t found_serial = 0, found_parallel = 0;
    const double ts = seconds([&] {
      set_default_exec(Exec::serial);
      found_serial = search_o_operators(rep, 4).size();
    });
    const double tp = seconds([&] {
      set_default_exec(Exec::parallel);
      found_parallel = search_o_operators(rep, 4).size();
    });
    if (found_serial != found_parallel) {
      std::printf("search disagreement: %zu vs %zu\n", found_serial,
                  found_parallel);
      return 1;
    }
    row("search_o_operators, bound 4 (" + std::to_string(found_serial) +
            " hits)",
        ts, tp);
  }
  return 0;
}
