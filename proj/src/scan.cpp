#include "homcheck/scan.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homcheck {

namespace {

std::atomic<Exec> g_exec{Exec::parallel};

std::string tuple_str(const std::vector<int>& where) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (i) os << ",";
    os << "e" << where[i] + 1;
  }
  os << ")";
  return os.str();
}

}  // namespace

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

void set_jobs(int jobs) {
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
}

std::string Violation::str() const {
  return identity + " violated at " + tuple_str(where) +
         ": discrepancy = " + discrepancy.str();
}

void CheckReport::append(std::vector<Violation>&& vs) {
  for (auto& v : vs) violations_.push_back(std::move(v));
}

void CheckReport::append(CheckReport&& other) {
  append(std::move(other.violations_));
}

void CheckReport::truncate_to_first() {
  if (violations_.size() > 1) violations_.resize(1);
}

std::string CheckReport::str() const {
  if (passed()) return "PASS";
  std::ostringstream os;
  for (const auto& v : violations_) os << v.str() << "\n";
  return os.str();
}

namespace {

// All three scans funnel through one flat-index kernel; `decode` turns the
// flat index back into the basis tuple.
using DecodeFn = std::function<std::vector<int>(long)>;
using FlatFn = std::function<Vector(long)>;

std::vector<Violation> scan_flat(long total, const std::string& identity,
                                 const DecodeFn& decode, const FlatFn& fn,
                                 Exec exec) {
  std::vector<Violation> out;
#ifdef _OPENMP
  if (exec == Exec::parallel && total > 1) {
    const int threads = omp_get_max_threads();
    std::vector<std::vector<Violation>> local(
        static_cast<std::size_t>(threads));
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
      Vector d = fn(idx);
      if (!d.is_zero()) {
        local[static_cast<std::size_t>(omp_get_thread_num())].push_back(
            Violation{identity, decode(idx), std::move(d)});
      }
    }
    std::size_t n = 0;
    for (const auto& l : local) n += l.size();
    out.reserve(n);
    for (auto& l : local)
      for (auto& v : l) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(),
              [](const Violation& a, const Violation& b) {
                return a.where < b.where;
              });
    return out;
  }
#else
  (void)exec;
#endif
  for (long idx = 0; idx < total; ++idx) {
    Vector d = fn(idx);
    if (!d.is_zero()) out.push_back(Violation{identity, decode(idx), std::move(d)});
  }
  return out;
}

}  // namespace

std::vector<Violation> scan1(int d0, const std::string& identity,
                             const Fn1& fn, Exec exec) {
  return scan_flat(
      d0, identity, [](long idx) { return std::vector<int>{static_cast<int>(idx)}; },
      [&fn](long idx) { return fn(static_cast<int>(idx)); }, exec);
}

std::vector<Violation> scan2(int d0, int d1, const std::string& identity,
                             const Fn2& fn, Exec exec) {
  const long n1 = d1;
  return scan_flat(
      static_cast<long>(d0) * d1, identity,
      [n1](long idx) {
        return std::vector<int>{static_cast<int>(idx / n1),
                                static_cast<int>(idx % n1)};
      },
      [&fn, n1](long idx) {
        return fn(static_cast<int>(idx / n1), static_cast<int>(idx % n1));
      },
      exec);
}

std::vector<Violation> scan3(int d0, int d1, int d2,
                             const std::string& identity, const Fn3& fn,
                             Exec exec) {
  const long n1 = d1, n2 = d2;
  return scan_flat(
      static_cast<long>(d0) * d1 * d2, identity,
      [n1, n2](long idx) {
        return std::vector<int>{static_cast<int>(idx / (n1 * n2)),
                                static_cast<int>((idx / n2) % n1),
                                static_cast<int>(idx % n2)};
      },
      [&fn, n1, n2](long idx) {
        return fn(static_cast<int>(idx / (n1 * n2)),
                  static_cast<int>((idx / n2) % n1),
                  static_cast<int>(idx % n2));
      },
      exec);
}

}  // namespace homcheck
