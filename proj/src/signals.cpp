#include "padeint/signals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace padeint {

double harmonic_pair(double t) {
  return 10.0 * std::cos(2.0 * t / std::sqrt(5.0)) +
         70.0 * std::sin(2.0 * std::sqrt(10.0) * t);
}

double piecewise_ramp(double t) {
  if (t < 0.0) return 0.0;
  if (t < 0.25) return 4.0 * t;
  if (t < 0.75) return -4.0 * t + 2.0;
  if (t < 1.0) return 4.0 * t - 4.0;
  return 0.0;
}

double sine_burst(double t, double fex, double p0) {
  const double tau = 1.0 / fex;
  const double t0 = 4.0 / fex;
  const double arg = (t - t0) / tau;
  return p0 * std::sin(2.0 * std::numbers::pi * fex * t) *
         std::exp(-0.5 * arg * arg);
}

double ricker(double t, double fex, double f0) {
  const double t0 = 2.0 / fex;
  const double w = std::numbers::pi * fex * (t - t0);
  const double psi = 2.0 * w * w;
  return f0 * (1.0 - psi) * std::exp(-0.5 * psi);
}

std::function<double(double)> signal_by_name(const std::string& name) {
  if (name == "harmonic_pair") return [](double t) { return harmonic_pair(t); };
  if (name == "piecewise_ramp")
    return [](double t) { return piecewise_ramp(t); };
  if (name == "sine_burst") return [](double t) { return sine_burst(t); };
  if (name == "ricker") return [](double t) { return ricker(t); };
  if (name == "none") return [](double) { return 0.0; };
  throw std::invalid_argument("unknown signal name: " + name);
}

}  // namespace padeint
