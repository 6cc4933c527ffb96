#pragma once

#include "sphlab/eos.hpp"
#include "sphlab/grid.hpp"
#include "sphlab/solver.hpp"

namespace sphlab {

//! Inviscid reference: first-order finite-volume radial Euler equations on
//! the same grid and snapshot cadence as the viscous solver.  Vacuum cells
//! are admitted and must carry zero momentum.
class EulerSolver {
 public:
  EulerSolver(const GasParams& g, const SolverConfig& cfg);

  double cfl_dt(const RadialField& f) const;
  void step(RadialField& f, double dt) const;
  Trajectory run(const RadialField& initial) const;

  //! Total relative energy Int (m^2/(2 rho) + e(rho, rho_bar)) r^{N-1} dr,
  //! with the kinetic part zero on vacuum.
  double relative_energy(const RadialField& f) const;

  const GasParams& gas() const { return gas_; }

 private:
  void check_contract(const RadialField& f, double t) const;

  GasParams gas_;
  SolverConfig cfg_;
};

}  // namespace sphlab
