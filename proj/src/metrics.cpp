#include "padeint/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "padeint/models.hpp"
#include "padeint/stepper.hpp"

namespace padeint {

double l2_error(const std::vector<double>& u, const std::vector<double>& ref,
                double dt) {
  if (u.size() != ref.size() || u.size() < 2) {
    throw std::invalid_argument("l2_error: series must match and have >= 2 samples");
  }
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    const double w = (i == 0 || i + 1 == u.size()) ? 0.5 * dt : dt;
    const double d = u[i] - ref[i];
    num += w * d * d;
    den += w * ref[i] * ref[i];
  }
  if (den <= 0.0) {
    throw std::invalid_argument("l2_error: reference has no energy");
  }
  return 100.0 * std::sqrt(num / den);
}

std::vector<double> detect_peaks(const std::vector<double>& u, double dt) {
  std::vector<double> ts;
  for (size_t j = 1; j + 1 < u.size(); ++j) {
    const bool ok = u[j] >= u[j - 1] && u[j] >= u[j + 1] &&
                    (u[j] > u[j - 1] || u[j] > u[j + 1]);
    if (!ok) continue;
    const double den = u[j - 1] - 2.0 * u[j] + u[j + 1];
    double off = den == 0.0 ? 0.0 : 0.5 * (u[j - 1] - u[j + 1]) / den;
    off = std::clamp(off, -0.5, 0.5);
    ts.push_back((static_cast<double>(j) + off) * dt);
  }
  return ts;
}

double period_elongation(const std::vector<double>& peak_times, double Tn,
                         int max_periods) {
  const int n = std::min<int>(static_cast<int>(peak_times.size()), max_periods);
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  double s = 0.0;
  for (int k = 1; k <= n; ++k) {
    s += (peak_times[k - 1] - k * Tn) / (k * Tn);
  }
  return 100.0 * s / n;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const int n = static_cast<int>(x_.size());
  if (n < 2 || y_.size() != x_.size()) {
    throw std::invalid_argument("CubicSpline: need matching arrays, >= 2 points");
  }
  for (int i = 1; i < n; ++i) {
    if (!(x_[i] > x_[i - 1])) {
      throw std::invalid_argument("CubicSpline: abscissae must increase");
    }
  }
  // Natural boundary: second derivatives m_ with m_0 = m_{n-1} = 0, interior
  // from the standard tridiagonal system, solved by the Thomas sweep.
  m_.assign(n, 0.0);
  if (n == 2) return;
  std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
  for (int i = 1; i + 1 < n; ++i) {
    const double h0 = x_[i] - x_[i - 1];
    const double h1 = x_[i + 1] - x_[i];
    a[i] = h0;
    b[i] = 2.0 * (h0 + h1);
    c[i] = h1;
    d[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
  }
  for (int i = 2; i + 1 < n; ++i) {
    const double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    d[i] -= w * d[i - 1];
  }
  for (int i = n - 2; i >= 1; --i) {
    m_[i] = (d[i] - c[i] * m_[i + 1]) / b[i];
  }
}

double CubicSpline::operator()(double xq) const {
  const int n = static_cast<int>(x_.size());
  int lo = static_cast<int>(
      std::upper_bound(x_.begin(), x_.end(), xq) - x_.begin()) - 1;
  lo = std::clamp(lo, 0, n - 2);
  const double h = x_[lo + 1] - x_[lo];
  const double t1 = (x_[lo + 1] - xq) / h;
  const double t2 = (xq - x_[lo]) / h;
  return t1 * y_[lo] + t2 * y_[lo + 1] +
         ((t1 * t1 * t1 - t1) * m_[lo] + (t2 * t2 * t2 - t2) * m_[lo + 1]) *
             h * h / 6.0;
}

double amplitude_error(const std::vector<double>& u, double dt,
                       const std::function<double(double)>& ref, double Tn,
                       int max_periods) {
  if (u.size() < 4) {
    throw std::invalid_argument("amplitude_error: series too short");
  }
  std::vector<double> t(u.size());
  for (size_t i = 0; i < u.size(); ++i) t[i] = i * dt;
  const CubicSpline sp(t, u);
  const double t_end = t.back();
  double s = 0.0;
  int n = 0;
  for (int k = 1; k <= max_periods; ++k) {
    const double tk = k * Tn;
    if (tk > t_end * (1.0 + 1e-12)) break;
    const double r = ref(tk);
    if (r == 0.0) {
      throw std::invalid_argument("amplitude_error: reference vanishes at a period");
    }
    s += std::abs(r - sp(tk)) / std::abs(r);
    ++n;
  }
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  return 100.0 * s / n;
}

double convergence_slope(const std::vector<double>& dts,
                         const std::vector<double>& errs,
                         double plateau_floor) {
  if (dts.size() != errs.size()) {
    throw std::invalid_argument("convergence_slope: length mismatch");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (size_t i = 0; i < dts.size(); ++i) {
    if (!(errs[i] > plateau_floor) || !std::isfinite(errs[i])) continue;
    const double lx = std::log(dts[i]);
    const double ly = std::log(errs[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) {
    throw std::invalid_argument(
        "convergence_slope: need at least two points above the floor");
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double sdof_spectral_radius(int order, double dt_over_T) {
  SdofCase c = sdof_case(1);
  SecondOrderSystem sys = sdof_system(c);
  sys.u0 = {0.0};
  sys.v0 = {0.0};
  StepperOptions opts;
  opts.order = order;
  PadeStepper st(sys, dt_over_T * c.Tn, opts);
  double g[2][2];
  for (int col = 0; col < 2; ++col) {
    std::vector<double> e(2, 0.0);
    e[col] = 1.0;
    st.set_state(e, 0);
    st.step();
    g[0][col] = st.state()[0];
    g[1][col] = st.state()[1];
  }
  const std::complex<double> tr(g[0][0] + g[1][1], 0.0);
  const std::complex<double> det(g[0][0] * g[1][1] - g[0][1] * g[1][0], 0.0);
  const std::complex<double> disc = std::sqrt(tr * tr - 4.0 * det);
  const double l1 = std::abs(0.5 * (tr + disc));
  const double l2 = std::abs(0.5 * (tr - disc));
  return std::max(l1, l2);
}

void fft_radix2(std::vector<std::complex<double>>& a) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("fft_radix2: length must be a power of two");
  }
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

SpectrumResult fmax_from_spectrum(const std::function<double(double)>& sig,
                                  double t_sim, double dt_samp,
                                  double pad_time, double threshold) {
  if (!(dt_samp > 0.0) || !(t_sim > 0.0) || pad_time < t_sim) {
    throw std::invalid_argument("fmax_from_spectrum: bad window parameters");
  }
  size_t n = 1;
  while (n * dt_samp < pad_time) n <<= 1;
  std::vector<std::complex<double>> a(n, 0.0);
  const size_t ns = std::min(n, static_cast<size_t>(t_sim / dt_samp) + 1);
  for (size_t i = 0; i < ns; ++i) a[i] = sig(i * dt_samp);
  fft_radix2(a);
  const size_t half = n / 2;
  double peak = 0.0;
  for (size_t k = 0; k <= half; ++k) peak = std::max(peak, std::abs(a[k]));
  SpectrumResult res;
  res.df = 1.0 / (static_cast<double>(n) * dt_samp);
  for (size_t k = half + 1; k-- > 0;) {
    if (std::abs(a[k]) >= threshold * peak) {
      res.fmax = static_cast<double>(k) * res.df;
      break;
    }
  }
  return res;
}

}  // namespace padeint
