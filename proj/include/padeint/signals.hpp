#pragma once

#include <functional>
#include <string>
#include <vector>

namespace padeint {

// Two-tone load used by the forced single-mass benchmark:
// 10 cos(2t/sqrt(5)) + 70 sin(2 sqrt(10) t). Both tones are incommensurate
// with the oscillator's own period, so nothing resonates exactly.
double harmonic_pair(double t);

// Triangle-wave pulse that ramps 0 -> 1 -> -1 -> 0 over [0, 1] with kinks at
// t = 0.25, 0.75, 1.0 and is identically zero afterwards. Continuous but not
// differentiable at the kinks, which is exactly what makes it a useful
// convergence stressor: steps that straddle a kink see a non-smooth load.
double piecewise_ramp(double t);
inline const std::vector<double>& piecewise_ramp_kinks() {
  static const std::vector<double> k{0.25, 0.75, 1.0};
  return k;
}

// Modulated sine burst p0*sin(2*pi*fex*t)*exp(-((t-t0)/tau)^2/2) with
// tau = 1/fex and t0 = 4/fex. Energy is concentrated near fex but the
// envelope spreads the spectrum; the usable band ends near 1.5*fex.
double sine_burst(double t, double fex = 50.0, double p0 = 1.0);

// Ricker wavelet f0*(1-psi)*exp(-psi/2), psi = 2*(pi*fex*(t-t0))^2,
// t0 = 2/fex. Peak spectral content sits at fex; the band is 0..~2.8*fex.
double ricker(double t, double fex = 12.5, double f0 = 100.0);

// Name-based lookup for the CLI ("harmonic_pair", "piecewise_ramp",
// "sine_burst", "ricker", "none"). Throws invalid_argument on unknown names.
std::function<double(double)> signal_by_name(const std::string& name);

}  // namespace padeint
