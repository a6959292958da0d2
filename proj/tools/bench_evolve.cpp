// Benchmark of the serial reference evolvers against the OpenMP kernels,
// on the two-system PT model (the largest space in the library, 40x40).

#include "ptsym/dynamics.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

double max_deviation(const ptsym::Trajectory& a, const ptsym::Trajectory& b) {
  double dev = 0.0;
  for (std::size_t k = 0; k < a.states.size(); ++k)
    dev = std::max(dev,
                   (a.states[k].mat - b.states[k].mat).cwiseAbs().maxCoeff());
  return dev;
}

}  // namespace

int main(int argc, char** argv) {
  int steps = 200;
  if (argc > 1) steps = std::atoi(argv[1]);
  if (steps < 2) steps = 2;

  const ptsym::PTParams params{0.1, 0.4, 0.5235987755982988, 0.0};
  const ptsym::BathSpec bath{2.0, 10, 10.0};
  const ptsym::CompositeModel model =
      ptsym::build_two_pt_model(params, bath, 0.5, 1.0);
  const ptsym::PseudoStatePair pair = ptsym::pseudo_ground_excited(params);
  const ptsym::GeneralizedDensityMatrix rho0{
      ptsym::kron(pair.excited.mat, pair.excited.mat)};
  const std::vector<double> grid = ptsym::uniform_grid(25.0, steps);

  std::printf("two-system PT model, dim %ld x %ld, %d grid points, %d threads\n",
              static_cast<long>(model.dim_system * model.dim_bath),
              static_cast<long>(model.dim_system * model.dim_bath), steps,
              omp_get_max_threads());
  std::printf("%-16s %12s %12s %9s %10s\n", "evolver", "serial ms",
              "parallel ms", "speedup", "max |d|");

  {
    auto t0 = Clock::now();
    const auto serial =
        ptsym::evolve_rotated(model, rho0, grid, ptsym::Exec::serial);
    const double ts = ms_since(t0);
    t0 = Clock::now();
    const auto parallel =
        ptsym::evolve_rotated(model, rho0, grid, ptsym::Exec::parallel);
    const double tp = ms_since(t0);
    std::printf("%-16s %12.1f %12.1f %9.2f %10.2e\n", "evolve_rotated", ts, tp,
                ts / tp, max_deviation(serial, parallel));
  }
  {
    auto t0 = Clock::now();
    const auto serial =
        ptsym::evolve_pseudo(model, rho0, grid, ptsym::Exec::serial);
    const double ts = ms_since(t0);
    t0 = Clock::now();
    const auto parallel =
        ptsym::evolve_pseudo(model, rho0, grid, ptsym::Exec::parallel);
    const double tp = ms_since(t0);
    std::printf("%-16s %12.1f %12.1f %9.2f %10.2e\n", "evolve_pseudo", ts, tp,
                ts / tp, max_deviation(serial, parallel));
  }
  return 0;
}
