#pragma once

#include <vector>

#include "padeint/system.hpp"

namespace padeint {

// Single-mass oscillator benchmark family. All six cases share m = 1,
// natural frequency 1 Hz (omega = 2*pi, k = omega^2) and differ in damping,
// initial conditions and load:
//   1: undamped,   u0 = 1, v0 = 0, free
//   2: undamped,   u0 = 0, v0 = 2*pi, free
//   3: zeta = 5%,  u0 = 1, v0 = 0, free
//   4: zeta = 5%,  u0 = 0, v0 = 2*pi, free
//   5: undamped,   u0 = 2, v0 = pi/3, two-tone harmonic load
//   6: undamped,   u0 = 2, v0 = pi/3, piecewise-linear triangle pulse
struct SdofCase {
  int index = 1;
  double m = 1.0, c = 0.0, k = 1.0;
  double u0 = 0.0, v0 = 0.0;
  double zeta = 0.0;
  double omega_n = 1.0;
  double Tn = 1.0;
  bool has_closed_form = true;  // cases 1..5; case 6 uses the segment oracle
};

SdofCase sdof_case(int index);
SecondOrderSystem sdof_system(const SdofCase& c);

// Closed-form displacement for cases 1..5 (free vibration, damped free
// vibration, and the two-tone particular+homogeneous solution).
double sdof_analytic(int index, double t);

// Machine-exact displacement reference for case 6 at the given ascending
// sample times: the load is linear between its kinks, so the response is
// propagated segment by segment with the undamped rotation closed form plus
// the static particular solution of the linear load. Segment boundaries are
// the union of sample times and load kinks, so no segment straddles a kink.
std::vector<double> sdof_case6_reference(const std::vector<double>& times);

// Plane-stress cantilever strip, length 1, height 0.2, E = 100, density 1,
// zero Poisson ratio (longitudinal wave speed 10). Meshed with nx x ny square
// bilinear quads (nx = 5*ny), consistent mass, left-edge axial DOFs fixed,
// uniform axial edge traction on the right edge modulated by a 50 Hz sine
// burst. Observation point (0.5, 0.1) lies on a node for every valid mesh.
struct RodModel {
  SecondOrderSystem system;   // constrained (free DOFs only)
  int nx = 0, ny = 0;
  double elem_size = 0.0;
  int ndof_unconstrained = 0; // 2 * node count, before eliminating supports
  int obs_node = 0;           // mesh node at the observation point
  int obs_dof = 0;            // free-DOF index of its axial displacement
  std::vector<int> free_map;  // unconstrained dof -> free index, -1 if fixed
};

RodModel build_rod(int nx, int ny, double fex = 50.0, double traction = 1.0);

// Longitudinal CFL number c_L * dt / h for the rod mesh.
double cfl_number(const RodModel& rod, double dt);

// First `count` natural frequencies (Hz) of the rod's axial response,
// computed on the y-uniform axial subspace (the 2D mesh's exact counterpart
// of a consistent-mass bar). Test-support helper, dense solve inside.
std::vector<double> axial_frequencies(const RodModel& rod, int count);

// Fixed-free bar reference frequencies (2k-1) * c / (4 L), in Hz.
std::vector<double> axial_frequencies_analytic(int count);

}  // namespace padeint
