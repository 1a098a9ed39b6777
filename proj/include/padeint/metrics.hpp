#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace padeint {

// Relative time-history error in percent,
// 100 * sqrt( int (u - ref)^2 dt / int ref^2 dt ), trapezoidal in time.
// Both series live on the same uniform grid.
double l2_error(const std::vector<double>& u, const std::vector<double>& ref,
                double dt);

// Times of the local maxima of a sampled signal, refined by fitting a
// parabola through each maximum and its neighbors (offset clipped to half a
// sample). A flat top produces one detection per strict edge, each refined
// toward the plateau.
std::vector<double> detect_peaks(const std::vector<double>& u, double dt);

// Mean relative delay of the k-th detected peak against k*Tn, in percent.
// Positive means the numerical oscillation runs slow (period stretched).
double period_elongation(const std::vector<double>& peak_times, double Tn,
                         int max_periods);

// Natural cubic spline through (x_i, y_i); x strictly increasing.
class CubicSpline {
public:
  CubicSpline(std::vector<double> x, std::vector<double> y);
  double operator()(double xq) const;

private:
  std::vector<double> x_, y_, m_;
};

// Mean of |ref(k*Tn) - u(k*Tn)| / |ref(k*Tn)| over whole periods k that fit
// in the sampled window, in percent; u is spline-interpolated at k*Tn.
double amplitude_error(const std::vector<double>& u, double dt,
                       const std::function<double(double)>& ref, double Tn,
                       int max_periods);

// Least-squares slope of log(err) against log(dt). Points at or below
// plateau_floor (same units as err) are excluded: once an error sits on the
// roundoff plateau it carries no rate information.
double convergence_slope(const std::vector<double>& dts,
                         const std::vector<double>& errs,
                         double plateau_floor = 1e-8);

// Largest amplification-matrix eigenvalue magnitude of the order-2M scheme
// on an undamped unit oscillator at step-to-period ratio dt/T. Probes the
// production stepper by propagating basis states, not a reimplementation.
double sdof_spectral_radius(int order, double dt_over_T);

// In-place radix-2 FFT; length must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& a);

struct SpectrumResult {
  double fmax = 0.0;  // highest frequency whose magnitude clears threshold
  double df = 0.0;    // frequency resolution of the padded transform
};

// Samples sig on [0, t_sim] at spacing dt_samp, zero-pads to at least
// pad_time, and reports the top end of the band where the magnitude
// spectrum still exceeds threshold * max magnitude.
SpectrumResult fmax_from_spectrum(const std::function<double(double)>& sig,
                                  double t_sim, double dt_samp,
                                  double pad_time, double threshold = 0.01);

}  // namespace padeint
