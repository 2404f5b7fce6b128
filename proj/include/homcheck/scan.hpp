#pragma once

#include <functional>
#include <string>
#include <vector>

#include "homcheck/report.hpp"

namespace homcheck {

/// Identity scans run either as a plain loop or as an OpenMP-parallel kernel.
/// Both produce the same violation list in the same order; the serial path is
/// the reference the parallel one is tested against.
enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec e);

/// 0 restores the OpenMP default thread count.
void set_jobs(int jobs);

using Fn1 = std::function<Vector(int)>;
using Fn2 = std::function<Vector(int, int)>;
using Fn3 = std::function<Vector(int, int, int)>;

/// Evaluate `fn` on every index tuple of the given box and collect nonzero
/// discrepancies, sorted lexicographically by tuple. Deterministic for any
/// thread count.
std::vector<Violation> scan1(int d0, const std::string& identity,
                             const Fn1& fn, Exec exec = default_exec());
std::vector<Violation> scan2(int d0, int d1, const std::string& identity,
                             const Fn2& fn, Exec exec = default_exec());
std::vector<Violation> scan3(int d0, int d1, int d2,
                             const std::string& identity, const Fn3& fn,
                             Exec exec = default_exec());

}  // namespace homcheck
