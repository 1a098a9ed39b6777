// Release gate. Runs every numerical acceptance criterion and prints one
// PASS/FAIL line per criterion; exits 0 only if all of them hold. Tolerances
// are pinned in this file on purpose, so a regression cannot be hidden by
// editing a config input. Pass criterion numbers as arguments to run a
// subset while debugging, e.g. "acceptance 3 6".

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "padeint/exact_propagator.hpp"
#include "padeint/metrics.hpp"
#include "padeint/models.hpp"
#include "padeint/newmark.hpp"
#include "padeint/pade_scheme.hpp"
#include "padeint/signals.hpp"
#include "padeint/stepper.hpp"
#include "support/test_oracles.hpp"

namespace {

using namespace padeint;

int g_pass = 0;
int g_fail = 0;

std::string strf(const char* fmt, ...) {
  char buf[768];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

void report(int id, const char* label, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, label,
              detail.c_str());
  std::fflush(stdout);
  (ok ? g_pass : g_fail)++;
}

// Displacement trace of an oscillator benchmark case, one sample per step.
std::vector<double> sdof_trace(int idx, int M, double dt, long nsteps) {
  StepperOptions o;
  o.order = M;
  PadeStepper st(sdof_system(sdof_case(idx)), dt, o);
  std::vector<double> u;
  u.reserve(nsteps + 1);
  u.push_back(st.displacement(0));
  for (long s = 0; s < nsteps; ++s) {
    st.step();
    u.push_back(st.displacement(0));
  }
  return u;
}

std::vector<double> sdof_reference(int idx, double dt, long nsteps) {
  std::vector<double> t(nsteps + 1);
  for (long i = 0; i <= nsteps; ++i) t[i] = i * dt;
  if (idx == 6) return sdof_case6_reference(t);
  std::vector<double> r(nsteps + 1);
  for (long i = 0; i <= nsteps; ++i) r[i] = sdof_analytic(idx, t[i]);
  return r;
}

// Ladder starts chosen per order so every rung is inside the asymptotic
// range: the 2M = 6, 8 schemes are still pre-asymptotic at two steps per
// period, and at exactly half a period the sine-started cases sample the
// reference at its zeros.
double ladder_start(int M) { return M == 1 ? 1.0 / 8.0 : 1.0 / 4.0; }

constexpr double kSlopeTol = 0.3;
constexpr double kPlateauFloorPct = 1e-8;

// ---- criterion 1: exact scheme data ---------------------------------------

bool rational_is(const Rational& r, long long num, long long den) {
  return r == Rational(num, den);
}

bool poly_matches(const RationalPoly& poly,
                  const std::vector<std::pair<long long, long long>>& want) {
  const size_t n = std::max(poly.size(), want.size());
  for (size_t j = 0; j < n; ++j) {
    const Rational got = j < poly.size() ? poly[j] : Rational(0);
    const long long num = j < want.size() ? want[j].first : 0;
    const long long den = j < want.size() ? want[j].second : 1;
    if (!rational_is(got, num, den)) return false;
  }
  return true;
}

void criterion1() {
  const char* label = "frozen scheme tables and denominator roots";
  std::string why;
  bool ok = true;

  const std::vector<std::vector<long long>> numer = {
      {2, 1}, {12, 6, 1}, {120, 60, 12, 1}, {1680, 840, 180, 20, 1}};
  for (int M = 1; M <= 4 && ok; ++M) {
    const auto p = pade_coefficients(M);
    if (p.size() != numer[M - 1].size()) {
      ok = false;
      why = strf("numerator size mismatch at M=%d", M);
      break;
    }
    for (size_t m = 0; m < p.size(); ++m) {
      if (!rational_is(p[m], numer[M - 1][m], 1)) {
        ok = false;
        why = strf("numerator coefficient m=%zu wrong at M=%d", m, M);
        break;
      }
    }
  }

  // 16-digit root values, compared against the scheme's grouped storage
  // (real roots ascending, conjugate pairs by ascending imaginary part).
  struct RootSet {
    std::vector<double> real;
    std::vector<std::complex<double>> pairs;
  };
  const std::vector<RootSet> roots = {
      {{2.0}, {}},
      {{}, {{3.0, 1.7320508075688772}}},
      {{4.644370709252171}, {{3.677814645373910, 3.508761919567443}}},
      {{},
       {{5.792421205640749, 1.734468257869007},
        {4.207578794359259, 5.314836083713504}}}};
  for (int M = 1; M <= 4 && ok; ++M) {
    const PadeScheme s = make_scheme(M);
    const RootSet& want = roots[M - 1];
    if (s.real_roots.size() != want.real.size() ||
        s.pair_roots.size() != want.pairs.size()) {
      ok = false;
      why = strf("root grouping wrong at M=%d", M);
      break;
    }
    for (size_t i = 0; i < want.real.size(); ++i) {
      if (std::abs(s.real_roots[i] - want.real[i]) > 1e-12) {
        ok = false;
        why = strf("real root %zu off at M=%d", i, M);
      }
    }
    for (size_t i = 0; i < want.pairs.size(); ++i) {
      if (std::abs(s.pair_roots[i].real() - want.pairs[i].real()) > 1e-12 ||
          std::abs(s.pair_roots[i].imag() - want.pairs[i].imag()) > 1e-12) {
        ok = false;
        why = strf("pair root %zu off at M=%d", i, M);
      }
    }
  }

  // Load polynomials and the folded update polynomial, exact rationals.
  using PV = std::vector<std::pair<long long, long long>>;
  const std::vector<std::vector<PV>> ck_want = {
      {{{2, 1}}, {}},
      {{{12, 1}}, {{0, 1}, {-1, 1}}, {{1, 1}}},
      {{{120, 1}, {0, 1}, {2, 1}},
       {{0, 1}, {-10, 1}},
       {{10, 1}, {0, 1}, {1, 2}},
       {{0, 1}, {-3, 2}}},
      {{{1680, 1}, {0, 1}, {40, 1}},
       {{0, 1}, {-140, 1}, {0, 1}, {-1, 1}},
       {{140, 1}, {0, 1}, {8, 1}},
       {{0, 1}, {-21, 1}, {0, 1}, {-1, 4}},
       {{21, 1}, {0, 1}, {3, 2}}}};
  const std::vector<PV> phat_want = {{{4, 1}},
                                     {{0, 1}, {12, 1}},
                                     {{240, 1}, {0, 1}, {24, 1}},
                                     {{0, 1}, {1680, 1}, {0, 1}, {40, 1}}};
  for (int M = 1; M <= 4 && ok; ++M) {
    const PadeScheme s = make_scheme(M);
    if (s.ck.size() != ck_want[M - 1].size()) {
      ok = false;
      why = strf("load polynomial count wrong at M=%d", M);
      break;
    }
    for (size_t k = 0; k < s.ck.size(); ++k) {
      if (!poly_matches(s.ck[k], ck_want[M - 1][k])) {
        ok = false;
        why = strf("load polynomial k=%zu wrong at M=%d", k, M);
      }
    }
    if (!poly_matches(s.phat, phat_want[M - 1])) {
      ok = false;
      why = strf("update polynomial wrong at M=%d", M);
    }
  }

  // Above the tabulated range the roots come from a companion eigensolve;
  // require a tiny scaled denominator residual at each of them.
  double worst_res = 0.0;
  for (int M = 5; M <= 8 && ok; ++M) {
    const auto p = pade_coefficients(M);
    for (const auto& r : pade_denominator_roots(M)) {
      double scale = 0.0;
      double am = 1.0;
      const double ar = std::max(1.0, std::abs(r));
      for (size_t m = 0; m < p.size(); ++m) {
        scale += std::abs(p[m].to_double()) * am;
        am *= ar;
      }
      const double res = std::abs(evaluate_denominator(p, r)) / scale;
      worst_res = std::max(worst_res, res);
      if (res > 1e-10) {
        ok = false;
        why = strf("root residual %.2e at M=%d", res, M);
      }
    }
  }

  if (ok) why = strf("tables exact, worst scaled residual %.1e (M=5..8)", worst_res);
  report(1, label, ok, why);
}

// ---- criterion 2: order-1 scheme is the trapezoidal rule ------------------

void criterion2() {
  const char* label = "order-1 scheme matches the trapezoidal baseline";
  const double dt = 1e-3;
  const long nsteps = 10000;
  double worst = 0.0;  // relative to the trajectory sup norm
  std::string worst_name = "";

  std::vector<std::pair<std::string, SecondOrderSystem>> systems;
  systems.push_back({"case 3", sdof_system(sdof_case(3))});
  systems.push_back({"case 5", sdof_system(sdof_case(5))});
  systems.push_back({"random 10-dof", oracle::random_system(10, 20240817u, true)});

  for (auto& [name, sys] : systems) {
    StepperOptions o;
    o.order = 1;
    PadeStepper pade(sys, dt, o);
    NewmarkIntegrator nm(sys, dt);
    const int n = pade.ndof();
    double diff = 0.0, scale = 0.0;
    for (long s = 0; s < nsteps; ++s) {
      pade.step();
      nm.step();
      for (int d = 0; d < n; ++d) {
        diff = std::max(diff, std::abs(pade.displacement(d) - nm.displacement(d)));
        diff = std::max(diff, std::abs(pade.velocity(d) - nm.velocity(d)));
        scale = std::max({scale, std::abs(nm.displacement(d)),
                          std::abs(nm.velocity(d))});
      }
    }
    const double local = diff / scale;
    if (local > worst) {
      worst = local;
      worst_name = name;
    }
  }

  const bool ok = worst < 1e-12;
  report(2, label, ok,
         strf("max relative state difference %.2e over %ld steps (worst: %s), "
              "tol 1e-12",
              worst, nsteps, worst_name.c_str()));
}

// ---- criterion 3: oscillator convergence at rate 2M -----------------------

void criterion3() {
  const char* label = "oscillator error decays at the design rate 2M";
  bool ok = true;
  double worst_dev = 0.0;
  int worst_case = 0, worst_M = 0;
  const double tsim = 5.0;

  for (int idx = 1; idx <= 6 && ok; ++idx) {
    for (int M = 1; M <= 4; ++M) {
      std::vector<double> dts;
      if (idx == 6) {
        // Kink-aligned rungs: every step grid contains the load corners.
        for (int k : {1, 2, 3, 4, 6, 8, 11, 16, 23, 32})
          dts.push_back(0.25 / k);
      } else {
        double dt = ladder_start(M);
        for (int j = 0; j < 9; ++j, dt /= std::sqrt(2.0)) dts.push_back(dt);
      }
      std::vector<double> errs;
      for (double dt : dts) {
        const long nsteps = std::llround(tsim / dt);
        errs.push_back(l2_error(sdof_trace(idx, M, dt, nsteps),
                                sdof_reference(idx, dt, nsteps), dt));
      }
      double slope;
      try {
        slope = convergence_slope(dts, errs, kPlateauFloorPct);
      } catch (const std::exception&) {
        // Fewer than two rungs above the floor: acceptable only if the
        // whole ladder already sits at roundoff.
        const bool all_floor =
            std::all_of(errs.begin(), errs.end(),
                        [](double e) { return e < kPlateauFloorPct; });
        if (!all_floor) {
          ok = false;
          worst_case = idx;
          worst_M = M;
        }
        continue;
      }
      const double dev = std::abs(slope - 2.0 * M);
      if (dev > worst_dev) {
        worst_dev = dev;
        worst_case = idx;
        worst_M = M;
      }
      if (dev > kSlopeTol) ok = false;
    }
  }

  report(3, label, ok,
         strf("24 ladders, max |slope - 2M| = %.3f (case %d, M=%d), tol %.1f",
              worst_dev, worst_case, worst_M, kSlopeTol));
}

// ---- criterion 4: unconditional stability ---------------------------------

void criterion4() {
  const char* label = "unit spectral radius and drift-free long runs";
  double worst_rho = 0.0;
  for (int M = 1; M <= 4; ++M)
    for (double ratio : {0.1, 1.0, 10.0, 100.0})
      worst_rho = std::max(worst_rho,
                           std::abs(sdof_spectral_radius(M, ratio) - 1.0));
  const bool rho_ok = worst_rho <= 1e-12;

  // Undamped amplitude functional sqrt(u^2 + (v/w)^2) over 1e5 steps at an
  // irrational fraction of the period, so samples never repeat in phase.
  const SdofCase c = sdof_case(1);
  StepperOptions o;
  o.order = 2;
  const double dt = 0.25 * std::sqrt(2.0) * c.Tn;
  PadeStepper st(sdof_system(c), dt, o);
  const double a0 = std::hypot(c.u0, c.v0 / c.omega_n);
  double drift = 0.0;
  for (long s = 0; s < 100000; ++s) {
    st.step();
    const double a = std::hypot(st.displacement(0), st.velocity(0) / c.omega_n);
    drift = std::max(drift, std::abs(a - a0) / a0);
  }
  const bool drift_ok = drift < 1e-9;

  report(4, label, rho_ok && drift_ok,
         strf("max |rho - 1| = %.2e (tol 1e-12), amplitude drift %.2e over "
              "1e5 steps (tol 1e-9)",
              worst_rho, drift));
}

// ---- criterion 5: near-Nyquist period and amplitude accuracy --------------

void criterion5() {
  const char* label = "two-samples-per-period accuracy thresholds";
  const double Tn = 1.0;
  const int eval_periods = 100;
  const auto ref = [](double t) { return sdof_analytic(1, t); };

  // Period elongation and amplitude error at two steps per period, measured
  // by the peak-detection pipeline over the first 100 periods.
  double pe[5] = {0, 0, 0, 0, 0};
  double ae4 = 0.0;
  for (int M = 1; M <= 4; ++M) {
    const double dt = Tn / 2.0;
    const auto u = sdof_trace(1, M, dt, 400);
    pe[M] = period_elongation(detect_peaks(u, dt), Tn, eval_periods);
    if (M == 4) ae4 = amplitude_error(u, dt, ref, Tn, eval_periods);
  }
  const bool pe_ok = std::abs(pe[1] - 56.5) <= 11.3 &&
                     std::abs(pe[2] - 7.7) <= 1.54 &&
                     std::abs(pe[3] - 0.5) <= 0.1 && std::abs(pe[4]) <= 1e-3;
  const bool ae4_ok = ae4 <= 1.0;

  // Step size where the order-2 scheme's amplitude error crosses 1%,
  // located by a log-log scan in samples per period.
  const std::vector<int> spps = {45, 64, 80, 85, 91, 100, 128};
  std::vector<double> aes;
  for (int spp : spps) {
    const double dt = Tn / spp;
    const auto u = sdof_trace(1, 1, dt, 200L * spp);
    aes.push_back(amplitude_error(u, dt, ref, Tn, eval_periods));
  }
  double crossing = 0.0;
  for (size_t i = 0; i + 1 < aes.size(); ++i) {
    if ((aes[i] - 1.0) * (aes[i + 1] - 1.0) <= 0.0) {
      const double t = std::log(aes[i]) /
                       (std::log(aes[i]) - std::log(aes[i + 1]));
      crossing = std::exp(std::log(double(spps[i])) +
                          t * (std::log(double(spps[i + 1])) -
                               std::log(double(spps[i]))));
      break;
    }
  }
  const bool cross_ok = crossing >= 65.4 && crossing <= 110.5;

  report(5, label, pe_ok && ae4_ok && cross_ok,
         strf("PE%% = {%.2f, %.2f, %.3f, %.1e}, AE(2M=8) = %.3f%%, 1%% "
              "amplitude crossing at Tn/%.1f",
              pe[1], pe[2], pe[3], pe[4], ae4, crossing));
}

// ---- criterion 6: rod accuracy thresholds and step-size gains -------------

void criterion6() {
  const char* label = "rod 1% step-size thresholds and high-order gains";
  const RodModel rod = build_rod(80, 16);
  const double dt_rec = 7.8125e-5;
  const int nrung = 8;

  // Self-converged reference: the 2M = 8 scheme at one eighth of the finest
  // rung, recorded on the rung grid.
  std::vector<double> ref;
  {
    StepperOptions o;
    o.order = 4;
    PadeStepper st(rod.system, dt_rec / 8.0, o);
    ref.reserve(12801);
    ref.push_back(st.displacement(rod.obs_dof));
    for (long s = 1; s <= 102400; ++s) {
      st.step();
      if (s % 8 == 0) ref.push_back(st.displacement(rod.obs_dof));
    }
  }

  double crossing[5] = {0, 0, 0, 0, 0};
  bool ok = true;
  for (int M = 1; M <= 4; ++M) {
    std::vector<double> dts, errs;
    for (int j = 0; j < nrung; ++j) {
      const double dt = dt_rec * (1 << j);
      const long nsteps = 12800L >> j;
      StepperOptions o;
      o.order = M;
      PadeStepper st(rod.system, dt, o);
      std::vector<double> u;
      u.reserve(nsteps + 1);
      u.push_back(st.displacement(rod.obs_dof));
      for (long s = 0; s < nsteps; ++s) {
        st.step();
        u.push_back(st.displacement(rod.obs_dof));
      }
      std::vector<double> sub(nsteps + 1);
      for (long i = 0; i <= nsteps; ++i) sub[i] = ref[i * (1L << j)];
      dts.push_back(dt);
      errs.push_back(l2_error(u, sub, dt));
    }
    // Largest step still inside the 1% error band, log-log interpolated
    // between the bracketing rungs.
    for (int j = 0; j + 1 < nrung; ++j) {
      if ((errs[j] - 1.0) * (errs[j + 1] - 1.0) <= 0.0) {
        const double t = std::log(errs[j]) /
                         (std::log(errs[j]) - std::log(errs[j + 1]));
        crossing[M] = std::exp(std::log(dts[j]) +
                               t * (std::log(dts[j + 1]) - std::log(dts[j])));
        break;
      }
    }
    if (crossing[M] == 0.0) ok = false;
  }

  const double anchor[5] = {0, 8.4e-5, 1.4e-3, 4.1e-3, 7.6e-3};
  for (int M = 1; M <= 4; ++M)
    if (std::abs(crossing[M] - anchor[M]) > 0.25 * anchor[M]) ok = false;
  const double need_gain[5] = {0, 0, 10.0, 30.0, 60.0};
  double gain[5] = {0, 0, 0, 0, 0};
  for (int M = 2; M <= 4; ++M) {
    gain[M] = crossing[M] / crossing[1];
    if (gain[M] < need_gain[M]) ok = false;
  }

  report(6, label, ok,
         strf("1%% crossings dt = {%.3e, %.3e, %.3e, %.3e}, gains over "
              "2M=2: {%.1f, %.1f, %.1f}",
              crossing[1], crossing[2], crossing[3], crossing[4], gain[2],
              gain[3], gain[4]));
}

// ---- criterion 7: propagator oracle ---------------------------------------

void criterion7() {
  const char* label = "propagator oracle exactness and cross-convergence";

  // Step-size independence on polynomial loads of degree <= pf. The
  // propagator is exact for those, so halving the step must not move it.
  // The raw state scales velocity by dt, so compare physical quantities.
  const auto worst_uv = [](const ExactPropagator& a, const ExactPropagator& b) {
    double w = 0.0;
    for (int d = 0; d < a.ndof(); ++d) {
      w = std::max(w, std::abs(a.displacement(d) - b.displacement(d)));
      w = std::max(w, std::abs(a.velocity(d) - b.velocity(d)));
    }
    return w;
  };
  double worst_indep = 0.0;
  {
    SecondOrderSystem sys = oracle::random_system(6, 42u, false);
    sys.force_spatial = std::vector<double>{0.3, -1.1, 0.7, 0.2, -0.5, 0.9};
    sys.force_signal = [](double t) { return 2.0 - 3.0 * t; };
    ExactPropagator one(sys, 0.2, 1);
    one.step();
    ExactPropagator two(sys, 0.1, 1);
    two.step();
    two.step();
    worst_indep = std::max(worst_indep, worst_uv(one, two));

    sys.force_signal = [](double t) { return 1.0 + t * (2.0 - 0.5 * t); };
    ExactPropagator oneq(sys, 0.4, 2);
    oneq.step();
    ExactPropagator twoq(sys, 0.2, 2);
    twoq.step();
    twoq.step();
    worst_indep = std::max(worst_indep, worst_uv(oneq, twoq));
  }
  const bool indep_ok = worst_indep < 1e-10;

  // The production scheme must converge at rate 2M toward the propagator,
  // with no closed-form solution in the loop.
  const SecondOrderSystem sys3 = sdof_system(sdof_case(3));
  const double tsim = 5.0;
  bool slopes_ok = true;
  double worst_dev = 0.0;
  for (int M = 1; M <= 4; ++M) {
    std::vector<double> dts, errs;
    double dt = ladder_start(M);
    for (int j = 0; j < 9; ++j, dt /= std::sqrt(2.0)) {
      const long nsteps = std::llround(tsim / dt);
      ExactPropagator prop(sys3, dt, 1);
      std::vector<double> refu;
      refu.reserve(nsteps + 1);
      refu.push_back(prop.displacement(0));
      for (long s = 0; s < nsteps; ++s) {
        prop.step();
        refu.push_back(prop.displacement(0));
      }
      dts.push_back(dt);
      errs.push_back(l2_error(sdof_trace(3, M, dt, nsteps), refu, dt));
    }
    const double slope = convergence_slope(dts, errs, kPlateauFloorPct);
    const double dev = std::abs(slope - 2.0 * M);
    worst_dev = std::max(worst_dev, dev);
    if (dev > kSlopeTol) slopes_ok = false;
  }

  report(7, label, indep_ok && slopes_ok,
         strf("polynomial-load step independence %.2e (tol 1e-10), max "
              "|slope - 2M| = %.3f vs propagator reference",
              worst_indep, worst_dev));
}

// ---- criterion 8: load bandwidth detection --------------------------------

void criterion8() {
  const char* label = "spectrum edge detection for the bundled load signals";
  const auto burst = [](double t) { return sine_burst(t); };
  const auto rick = [](double t) { return ricker(t); };
  const SpectrumResult a = fmax_from_spectrum(burst, 0.5, 1.0 / 1024.0, 8.0);
  const SpectrumResult b = fmax_from_spectrum(rick, 0.5, 1.0 / 1024.0, 8.0);
  const bool ok = std::abs(a.fmax - 74.125) <= 0.2 &&
                  std::abs(b.fmax - 34.5) <= 0.2 &&
                  std::abs(a.df - 0.125) <= 1e-12 &&
                  std::abs(b.df - 0.125) <= 1e-12;
  report(8, label, ok,
         strf("sine burst fmax = %.3f Hz (want 74.125), ricker fmax = %.3f "
              "Hz (want 34.5), df = %.3f",
              a.fmax, b.fmax, a.df));
}

// ---- criterion 9: per-step cost ordering ----------------------------------

void criterion9() {
  const char* label = "step cost grows with order but stays within budget";
  const RodModel rod = build_rod(80, 16);
  const double dt = 2e-4;
  const long nsteps = 200;

  double t[5] = {0, 0, 0, 0, 0};
  for (int M = 1; M <= 4; ++M) {
    double best = 1e300;
    for (int rep = 0; rep < 2; ++rep) {
      StepperOptions o;
      o.order = M;
      PadeStepper st(rod.system, dt, o);
      for (int w = 0; w < 3; ++w) st.step();
      const auto t0 = std::chrono::steady_clock::now();
      for (long s = 0; s < nsteps; ++s) st.step();
      const auto t1 = std::chrono::steady_clock::now();
      best = std::min(best,
                      std::chrono::duration<double>(t1 - t0).count());
    }
    t[M] = best;
  }

  // A 5% jitter allowance on the monotonicity check; timings are min-of-two
  // on a shared machine.
  bool ok = t[4] <= 8.0 * t[1];
  for (int M = 1; M <= 3; ++M)
    if (t[M + 1] < 0.95 * t[M]) ok = false;

  report(9, label, ok,
         strf("per-200-step times {%.3f, %.3f, %.3f, %.3f} s, ratio "
              "t4/t1 = %.2f (budget 8)",
              t[1], t[2], t[3], t[4], t[4] / t[1]));
}

const char* criterion_label(int id) {
  switch (id) {
    case 1: return "frozen scheme tables and denominator roots";
    case 2: return "order-1 scheme matches the trapezoidal baseline";
    case 3: return "oscillator error decays at the design rate 2M";
    case 4: return "unit spectral radius and drift-free long runs";
    case 5: return "two-samples-per-period accuracy thresholds";
    case 6: return "rod 1% step-size thresholds and high-order gains";
    case 7: return "propagator oracle exactness and cross-convergence";
    case 8: return "spectrum edge detection for the bundled load signals";
    case 9: return "step cost grows with order but stays within budget";
  }
  return "";
}

void run_criterion(int id) {
  switch (id) {
    case 1: criterion1(); break;
    case 2: criterion2(); break;
    case 3: criterion3(); break;
    case 4: criterion4(); break;
    case 5: criterion5(); break;
    case 6: criterion6(); break;
    case 7: criterion7(); break;
    case 8: criterion8(); break;
    case 9: criterion9(); break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) {
    const int id = std::atoi(argv[i]);
    if (id < 1 || id > 9) {
      std::fprintf(stderr, "usage: %s [criterion numbers 1..9]\n", argv[0]);
      return 2;
    }
    wanted.insert(id);
  }
  for (int id = 1; id <= 9; ++id) {
    if (!wanted.empty() && !wanted.count(id)) continue;
    try {
      run_criterion(id);
    } catch (const std::exception& e) {
      report(id, criterion_label(id), false,
             strf("exception: %s", e.what()));
    }
  }
  std::printf("acceptance: %d/%d passed\n", g_pass, g_pass + g_fail);
  return g_fail == 0 ? 0 : 1;
}
