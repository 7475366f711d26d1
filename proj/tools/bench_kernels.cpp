// Times the OpenMP kernels against their serial references and checks that
// both produce bit-identical results. Also compares a lazy incremental walk
// against the eager full-recheck reference on one mid-sized instance.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "edgewalk/coloring.hpp"
#include "edgewalk/instances.hpp"
#include "edgewalk/kernels.hpp"
#include "edgewalk/oracle.hpp"
#include "edgewalk/rng.hpp"
#include "edgewalk/subspace.hpp"
#include "edgewalk/walk.hpp"

namespace ew = edgewalk;
namespace ker = ew::kernels;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(const char* name, double serial_s, double parallel_s, bool same) {
  std::printf("%-24s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n",
              name, serial_s * 1e3, parallel_s * 1e3,
              parallel_s > 0 ? serial_s / parallel_s : 0.0,
              same ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel paths fall back to serial\n\n");
#endif

  const int n = 2048;
  const int d = 1024;
  const int reps = 50;
  ew::Rng rng(42);

  std::vector<double> frame(std::size_t(n) * d);
  for (auto& v : frame) v = rng.normal();
  std::vector<double> g(d);
  for (auto& v : g) v = rng.normal();
  std::vector<double> w(n);
  for (auto& v : w) v = rng.normal();

  {
    std::vector<double> a(n), b(n);
    auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r)
      ker::mat_vec_serial(frame.data(), n, d, d, g.data(), a.data());
    const double ts = seconds_since(t0) / reps;
    t0 = clock_type::now();
    for (int r = 0; r < reps; ++r)
      ker::mat_vec(frame.data(), n, d, d, g.data(), b.data());
    const double tp = seconds_since(t0) / reps;
    report("mat_vec (sampling)", ts, tp,
           std::memcmp(a.data(), b.data(), sizeof(double) * n) == 0);
  }

  {
    std::vector<double> a(d), b(d);
    auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r)
      ker::mat_tvec_serial(frame.data(), n, d, d, w.data(), a.data());
    const double ts = seconds_since(t0) / reps;
    t0 = clock_type::now();
    for (int r = 0; r < reps; ++r)
      ker::mat_tvec(frame.data(), n, d, d, w.data(), b.data());
    const double tp = seconds_since(t0) / reps;
    report("mat_tvec (projection)", ts, tp,
           std::memcmp(a.data(), b.data(), sizeof(double) * d) == 0);
  }

  {
    std::vector<ker::Rotation> rot(d - 1);
    double angle = 0.3;
    for (auto& r : rot) {
      r = {std::cos(angle), std::sin(angle)};
      angle += 0.01;
    }
    std::vector<double> a = frame, b = frame;
    auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r)
      ker::apply_rotations_serial(a.data(), n, d, rot.data(), rot.size());
    const double ts = seconds_since(t0) / reps;
    t0 = clock_type::now();
    for (int r = 0; r < reps; ++r)
      ker::apply_rotations(b.data(), n, d, rot.data(), rot.size());
    const double tp = seconds_since(t0) / reps;
    report("apply_rotations", ts, tp,
           std::memcmp(a.data(), b.data(), sizeof(double) * a.size()) == 0);
  }

  {
    ew::GeneratorSpec spec;
    spec.kind = ew::GeneratorKind::kBernoulli;
    spec.n = 20;
    spec.m = 24;
    spec.param = 0.5;
    spec.seed = 7;
    const ew::SetSystem sys = ew::generate_sets(spec);
    auto t0 = clock_type::now();
    const ew::OracleResult a = ew::brute_force_disc_serial(sys);
    const double ts = seconds_since(t0);
    t0 = clock_type::now();
    const ew::OracleResult b = ew::brute_force_disc(sys);
    const double tp = seconds_since(t0);
    report("brute force n=20", ts, tp,
           a.opt_disc == b.opt_disc && a.argmin.chi == b.argmin.chi);
  }

  {
    ew::GeneratorSpec spec;
    spec.kind = ew::GeneratorKind::kBernoulli;
    spec.n = 128;
    spec.m = 128;
    spec.param = 0.5;
    spec.seed = 11;
    const ew::SetSystem sys = ew::generate_sets(spec);
    ew::ConstraintSet cs = ew::indicator_matrix(sys);
    cs.set_uniform_threshold(ew::default_alpha(cs.m, cs.n));
    const ew::ConstraintSet unit = cs.normalized();
    const ew::FractionalColoring x0 = ew::FractionalColoring::zeros(unit.n);

    ew::WalkParams lazy = ew::WalkParams::make(0.05, unit.n, unit.m, 3);
    ew::WalkParams eager = lazy;
    eager.eager_checks = true;

    auto t0 = clock_type::now();
    const ew::WalkOutcome a = ew::edge_walk(unit, x0, eager);
    const double ts = seconds_since(t0);
    t0 = clock_type::now();
    const ew::WalkOutcome b = ew::edge_walk(unit, x0, lazy);
    const double tp = seconds_since(t0);
    report("walk eager vs lazy", ts, tp, a.x.x == b.x.x);
  }

  return 0;
}
