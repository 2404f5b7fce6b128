#include "doctest.h"
#include "helpers.hpp"
#include "homcheck/checks.hpp"
#include "homcheck/fixtures.hpp"
#include "homcheck/scan.hpp"

using namespace homcheck;

namespace {

Vector one_dim_flag(bool set) {
  Vector v(1);
  if (set) v[0] = 1;
  return v;
}

}  // namespace

TEST_SUITE("scan kernels") {
  TEST_CASE("violations come back sorted by tuple") {
    for (Exec exec : {Exec::serial, Exec::parallel}) {
      auto vs = scan2(4, 4, "probe", [](int i, int j) {
        return one_dim_flag((i + j) % 2 == 1);
      }, exec);
      CHECK(vs.size() == 8);
      for (std::size_t k = 1; k < vs.size(); ++k)
        CHECK(vs[k - 1].where < vs[k].where);
      CHECK(vs.front().where == std::vector<int>{0, 1});
      CHECK(vs.front().identity == "probe");
    }
  }

  TEST_CASE("serial and parallel kernels agree exactly") {
    oracle::Rng rng;
    Tensor3 t(5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) t(i, j, k) = rng.rational(2, 2);
    auto fn = [&](int i, int j, int k) { return t.slice(i, j) - t.slice(j, k); };
    const auto serial = scan3(5, 5, 5, "probe", fn, Exec::serial);
    const auto parallel = scan3(5, 5, 5, "probe", fn, Exec::parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
      CHECK(serial[k].where == parallel[k].where);
      CHECK(serial[k].discrepancy == parallel[k].discrepancy);
    }
  }

  TEST_CASE("checkers give identical reports under both execution modes") {
    const auto before = default_exec();
    auto alg = fixtures::f7();
    set_default_exec(Exec::serial);
    const auto serial = check_hom_poisson(alg, kAll);
    set_default_exec(Exec::parallel);
    const auto parallel = check_hom_poisson(alg, kAll);
    set_default_exec(before);
    REQUIRE(serial.violations().size() == parallel.violations().size());
    for (std::size_t k = 0; k < serial.violations().size(); ++k) {
      CHECK(serial.violations()[k].identity == parallel.violations()[k].identity);
      CHECK(serial.violations()[k].where == parallel.violations()[k].where);
      CHECK(serial.violations()[k].discrepancy ==
            parallel.violations()[k].discrepancy);
    }
  }

  TEST_CASE("violation rendering is 1-based") {
    Violation v{"Eq. (16)", {1, 0, 0}, Vector{Rational(0), Rational(1)}};
    CHECK(v.str() == "Eq. (16) violated at (e2,e1,e1): discrepancy = (0, 1)");
  }
}
