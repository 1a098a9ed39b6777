#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "padeint/exact_propagator.hpp"
#include "padeint/metrics.hpp"
#include "padeint/models.hpp"
#include "padeint/newmark.hpp"
#include "padeint/pade_scheme.hpp"
#include "padeint/signals.hpp"
#include "padeint/stepper.hpp"
#include "padeint/system.hpp"
#include "padeint/time_history.hpp"

namespace {

using namespace padeint;

struct ModelSelect {
  int sdof_case = 0;          // 1..6, 0 = unset
  std::string rod_spec;        // "NXxNY"
  std::string files_dir;       // directory with M.mtx/C.mtx/K.mtx
};

struct LoadedModel {
  SecondOrderSystem system;
  int report_ndof = 0;   // unconstrained count for meshes, matrix size else
  int default_dof = 0;   // observation DOF in free numbering
  double default_tn = 0; // natural period if the model has a canonical one
};

std::vector<double> read_vector_file(const std::string& path, int expect) {
  std::ifstream f(path);
  if (!f) return std::vector<double>(expect, 0.0);
  std::vector<double> v;
  double x;
  while (f >> x) v.push_back(x);
  if (static_cast<int>(v.size()) != expect) {
    throw std::invalid_argument(path + ": expected " + std::to_string(expect) +
                                " values");
  }
  return v;
}

LoadedModel load_model(const ModelSelect& sel) {
  const int picked = (sel.sdof_case != 0) + !sel.rod_spec.empty() +
                     !sel.files_dir.empty();
  if (picked != 1) {
    throw std::invalid_argument(
        "select exactly one model: --case, --rod or --files");
  }
  LoadedModel lm;
  if (sel.sdof_case != 0) {
    const SdofCase c = sdof_case(sel.sdof_case);
    lm.system = sdof_system(c);
    lm.report_ndof = 1;
    lm.default_dof = 0;
    lm.default_tn = c.Tn;
    return lm;
  }
  if (!sel.rod_spec.empty()) {
    int nx = 0, ny = 0;
    char sep = 0;
    std::istringstream ss(sel.rod_spec);
    if (!(ss >> nx >> sep >> ny) || (sep != 'x' && sep != 'X') || !ss.eof()) {
      throw std::invalid_argument("--rod expects NXxNY, e.g. 10x2");
    }
    RodModel rod = build_rod(nx, ny);
    lm.report_ndof = rod.ndof_unconstrained;
    lm.default_dof = rod.obs_dof;
    lm.system = std::move(rod.system);
    return lm;
  }
  const std::string dir = sel.files_dir;
  SecondOrderSystem sys;
  sys.M = read_matrix_market_file(dir + "/M.mtx");
  sys.K = read_matrix_market_file(dir + "/K.mtx");
  const int n = sys.M.rows();
  {
    std::ifstream probe(dir + "/C.mtx");
    sys.C = probe ? read_matrix_market_file(dir + "/C.mtx")
                  : SparseRealMatrix::zero(n, n);
  }
  sys.u0 = read_vector_file(dir + "/u0.txt", n);
  sys.v0 = read_vector_file(dir + "/v0.txt", n);
  sys.name = "files:" + dir;
  sys.validate();
  lm.system = std::move(sys);
  lm.report_ndof = n;
  lm.default_dof = 0;
  return lm;
}

SolvePath parse_path(const std::string& s) {
  if (s == "auto") return SolvePath::Auto;
  if (s == "dense") return SolvePath::Dense;
  if (s == "sparse") return SolvePath::Sparse;
  throw std::invalid_argument("--path must be auto, dense or sparse");
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  return file;
}

int cmd_scheme(int order, int pf) {
  const PadeScheme s = make_scheme(order, pf);
  std::cout << "order 2M = " << 2 * s.order << " (M = " << s.order
            << "), load degree " << s.pf << "\n";
  std::cout << "numerator coefficients p_m (denominator: (-1)^m p_m):\n";
  for (size_t m = 0; m < s.p.size(); ++m) {
    std::cout << "  m=" << m << ": " << s.p[m].str() << "\n";
  }
  std::cout << "denominator roots:\n";
  for (double r : s.real_roots) {
    std::printf("  %.16g (real)\n", r);
  }
  for (const auto& r : s.pair_roots) {
    std::printf("  %.16g +- %.16gi\n", r.real(), r.imag());
  }
  auto print_poly = [](const RationalPoly& poly) {
    bool first = true;
    for (size_t j = 0; j < poly.size(); ++j) {
      if (poly[j].is_zero()) continue;
      std::cout << (first ? "" : " + ") << poly[j].str() << "*A^" << j;
      first = false;
    }
    if (first) std::cout << "0";
    std::cout << "\n";
  };
  std::cout << "update polynomial (parity-folded numerator):\n  ";
  print_poly(s.phat);
  std::cout << "load polynomials C_k:\n";
  for (size_t k = 0; k < s.ck.size(); ++k) {
    std::cout << "  k=" << k << ": ";
    print_poly(s.ck[k]);
  }
  return 0;
}

template <typename Integrator>
TimeHistory drive(Integrator& it, int steps, const std::vector<int>& dofs,
                  int stride) {
  return record_history(it, steps, dofs, stride);
}

int cmd_run(const ModelSelect& sel, int order, int pf, double dt, int steps,
            double tsim, const std::string& integrator,
            const std::string& path, std::vector<int> dofs, int stride,
            const std::string& out_path) {
  LoadedModel lm = load_model(sel);
  if ((steps <= 0) == (tsim <= 0.0)) {
    throw std::invalid_argument("give exactly one of --steps or --tsim");
  }
  if (steps <= 0) steps = static_cast<int>(std::llround(tsim / dt));
  if (steps <= 0) throw std::invalid_argument("run is empty");
  if (dofs.empty()) dofs = {lm.default_dof};
  for (int d : dofs) {
    if (d < 0 || d >= lm.system.ndof()) {
      throw std::invalid_argument("observed DOF out of range");
    }
  }

  TimeHistory h;
  if (integrator == "pade") {
    StepperOptions opts;
    opts.order = order;
    opts.force_degree = pf;
    opts.path = parse_path(path);
    PadeStepper it(lm.system, dt, opts);
    h = drive(it, steps, dofs, stride);
  } else if (integrator == "newmark") {
    NewmarkIntegrator it(lm.system, dt, parse_path(path));
    h = drive(it, steps, dofs, stride);
  } else if (integrator == "exact") {
    ExactPropagator it(lm.system, dt, pf < 0 ? order : pf);
    h = drive(it, steps, dofs, stride);
  } else {
    throw std::invalid_argument("--integrator must be pade, newmark or exact");
  }
  h.metadata = {{"model", lm.system.name},
                {"integrator", integrator},
                {"order", std::to_string(order)},
                {"force_degree", std::to_string(pf < 0 ? order : pf)},
                {"dt", format_double(dt)},
                {"steps", std::to_string(steps)},
                {"ndof", std::to_string(lm.report_ndof)}};
  std::ofstream file;
  write_csv(open_out(file, out_path), h);
  return 0;
}

std::vector<double> default_ladder(const ModelSelect& sel) {
  if (sel.sdof_case == 6) {
    std::vector<double> dts;
    for (int k : {2, 3, 4, 6, 8, 11, 16, 23, 32}) dts.push_back(0.25 / k);
    return dts;
  }
  if (sel.sdof_case != 0) {
    std::vector<double> dts;
    double dt = 1.0 / 8.0;  // natural period over 8, refined by sqrt(2)
    for (int j = 0; j < 9; ++j) {
      dts.push_back(dt);
      dt /= std::sqrt(2.0);
    }
    return dts;
  }
  throw std::invalid_argument("--dt-list is required for this model");
}

int cmd_converge(const ModelSelect& sel, std::vector<int> orders, int pf,
                 std::vector<double> dts, double tsim,
                 const std::string& path, const std::string& out_path) {
  LoadedModel lm = load_model(sel);
  if (orders.empty()) orders = {1, 2, 3, 4};
  if (dts.empty()) dts = default_ladder(sel);
  std::sort(dts.begin(), dts.end());
  if (tsim <= 0.0) tsim = sel.sdof_case != 0 ? 5.0 : 1.0;
  const int dof = lm.default_dof;
  const SolvePath sp = parse_path(path);

  // Reference displacement sampled on every rung's grid. Closed forms for
  // the oscillator cases; otherwise an overkill high-order run on the finest
  // grid divided by 8, recorded at the alignment stride.
  std::vector<std::vector<double>> refs(dts.size());
  if (sel.sdof_case != 0 && sel.sdof_case != 6) {
    for (size_t j = 0; j < dts.size(); ++j) {
      const int ns = static_cast<int>(std::llround(tsim / dts[j]));
      refs[j].resize(ns + 1);
      for (int i = 0; i <= ns; ++i) {
        refs[j][i] = sdof_analytic(sel.sdof_case, i * dts[j]);
      }
    }
  } else if (sel.sdof_case == 6) {
    for (size_t j = 0; j < dts.size(); ++j) {
      const int ns = static_cast<int>(std::llround(tsim / dts[j]));
      std::vector<double> times(ns + 1);
      for (int i = 0; i <= ns; ++i) times[i] = i * dts[j];
      refs[j] = sdof_case6_reference(times);
    }
  } else {
    for (size_t j = 1; j < dts.size(); ++j) {
      const double ratio = dts[j] / dts[0];
      if (std::abs(ratio - std::llround(ratio)) > 1e-9) {
        throw std::invalid_argument(
            "--dt-list rungs must be integer multiples of the finest for "
            "this model (shared reference grid)");
      }
    }
    StepperOptions opts;
    opts.order = 4;
    opts.path = sp;
    const double dtr = dts[0] / 8.0;
    PadeStepper ref(lm.system, dtr, opts);
    const int ns = static_cast<int>(std::llround(tsim / dtr));
    TimeHistory rh = record_history(ref, ns, {dof}, 8);
    const std::vector<double> base = rh.displacement_series(0);
    for (size_t j = 0; j < dts.size(); ++j) {
      const int every = static_cast<int>(std::llround(dts[j] / dts[0]));
      for (size_t i = 0; i < base.size(); i += every) refs[j].push_back(base[i]);
    }
  }

  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "# model=" << lm.system.name << " tsim=" << format_double(tsim)
      << " metric=l2_displacement_pct\n";
  out << "order,dt,error_pct\n";
  for (int M : orders) {
    std::vector<double> errs;
    for (size_t j = 0; j < dts.size(); ++j) {
      const int ns = static_cast<int>(std::llround(tsim / dts[j]));
      StepperOptions opts;
      opts.order = M;
      opts.force_degree = pf;
      opts.path = sp;
      PadeStepper it(lm.system, dts[j], opts);
      TimeHistory h = record_history(it, ns, {dof}, 1);
      const double e = l2_error(h.displacement_series(0), refs[j], dts[j]);
      errs.push_back(e);
      out << M << "," << format_double(dts[j]) << "," << format_double(e)
          << "\n";
    }
    try {
      std::cerr << "order " << M << " slope "
                << format_double(convergence_slope(dts, errs)) << "\n";
    } catch (const std::invalid_argument&) {
      std::cerr << "order " << M << " slope n/a (plateau)\n";
    }
  }
  return 0;
}

int cmd_peae(std::vector<int> orders, std::vector<int> spp_list, int periods,
             int eval_periods, const std::string& out_path) {
  if (orders.empty()) orders = {1, 2, 3, 4};
  if (spp_list.empty()) spp_list = {2};
  const SdofCase c = sdof_case(1);
  const SecondOrderSystem sys = sdof_system(c);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "# model=" << sys.name << " periods=" << periods
      << " eval_periods=" << eval_periods << "\n";
  out << "order,steps_per_period,pe_pct,ae_pct\n";
  for (int M : orders) {
    for (int spp : spp_list) {
      const double dt = c.Tn / spp;
      const int ns = spp * periods;
      StepperOptions opts;
      opts.order = M;
      PadeStepper it(sys, dt, opts);
      TimeHistory h = record_history(it, ns, {0}, 1);
      const std::vector<double> u = h.displacement_series(0);
      const double pe =
          period_elongation(detect_peaks(u, dt), c.Tn, eval_periods);
      const double ae = amplitude_error(
          u, dt, [](double t) { return sdof_analytic(1, t); }, c.Tn,
          eval_periods);
      out << M << "," << spp << "," << format_double(pe) << ","
          << format_double(ae) << "\n";
    }
  }
  return 0;
}

int cmd_time(const ModelSelect& sel, std::vector<int> orders, int steps,
             double dt, const std::string& path, const std::string& out_path) {
  LoadedModel lm = load_model(sel);
  if (orders.empty()) orders = {1, 2, 3, 4};
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "# model=" << lm.system.name << " dt=" << format_double(dt)
      << " steps=" << steps << "\n";
  out << "order,steps,setup_s,run_s,s_per_step\n";
  for (int M : orders) {
    StepperOptions opts;
    opts.order = M;
    opts.path = parse_path(path);
    const auto t0 = std::chrono::steady_clock::now();
    PadeStepper it(lm.system, dt, opts);
    const auto t1 = std::chrono::steady_clock::now();
    for (int s = 0; s < steps; ++s) it.step();
    const auto t2 = std::chrono::steady_clock::now();
    const double setup = std::chrono::duration<double>(t1 - t0).count();
    const double run = std::chrono::duration<double>(t2 - t1).count();
    out << M << "," << steps << "," << format_double(setup) << ","
        << format_double(run) << "," << format_double(run / steps) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "High-order single-step structural dynamics integrator built on "
      "rational approximants of the state transition"};
  app.require_subcommand(1);

  ModelSelect sel;
  int order = 1, pf = -1, steps = 0, stride = 1;
  double dt = 0.0, tsim = 0.0;
  std::string integrator = "pade", path = "auto", out_path;
  std::vector<int> dofs, orders, spp_list;
  std::vector<double> dt_list;
  int periods = 10000, eval_periods = 100;

  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--case", sel.sdof_case,
                    "oscillator benchmark case 1..6");
    cmd->add_option("--rod", sel.rod_spec, "rod mesh NXxNY (nx = 5*ny)");
    cmd->add_option("--files", sel.files_dir,
                    "directory with M.mtx, K.mtx and optional C.mtx, "
                    "u0.txt, v0.txt");
  };

  CLI::App* c_scheme = app.add_subcommand(
      "scheme", "print the exact scheme data for one order");
  c_scheme->add_option("--order", order, "half-order M (accuracy 2M)")
      ->required();
  c_scheme->add_option("--force-degree", pf, "load polynomial degree");

  CLI::App* c_run =
      app.add_subcommand("run", "integrate one model and write a history CSV");
  add_model(c_run);
  c_run->add_option("--order", order, "half-order M")->required();
  c_run->add_option("--force-degree", pf, "load polynomial degree");
  c_run->add_option("--dt", dt, "time step")->required();
  c_run->add_option("--steps", steps, "number of steps");
  c_run->add_option("--tsim", tsim, "simulated time (alternative to --steps)");
  c_run->add_option("--integrator", integrator, "pade, newmark or exact");
  c_run->add_option("--path", path, "auto, dense or sparse solves");
  c_run->add_option("--dofs", dofs, "observed DOFs (free numbering)")
      ->delimiter(',');
  c_run->add_option("--stride", stride, "record every k-th step");
  c_run->add_option("--out", out_path, "output CSV (default stdout)");

  CLI::App* c_conv = app.add_subcommand(
      "converge", "step-size ladder against the model's reference");
  add_model(c_conv);
  c_conv->add_option("--orders", orders, "half-orders to sweep")
      ->delimiter(',');
  c_conv->add_option("--force-degree", pf, "load polynomial degree");
  c_conv->add_option("--dt-list", dt_list, "ladder of time steps")
      ->delimiter(',');
  c_conv->add_option("--tsim", tsim, "simulated time");
  c_conv->add_option("--path", path, "auto, dense or sparse solves");
  c_conv->add_option("--out", out_path, "output CSV (default stdout)");

  CLI::App* c_peae = app.add_subcommand(
      "peae", "period elongation and amplitude error on the free oscillator");
  c_peae->add_option("--orders", orders, "half-orders to sweep")
      ->delimiter(',');
  c_peae->add_option("--steps-per-period", spp_list, "samples per period")
      ->delimiter(',');
  c_peae->add_option("--periods", periods, "simulated periods");
  c_peae->add_option("--eval-periods", eval_periods,
                     "periods entering the averages");
  c_peae->add_option("--out", out_path, "output CSV (default stdout)");

  CLI::App* c_time =
      app.add_subcommand("time", "wall-clock cost per step by order");
  add_model(c_time);
  c_time->add_option("--orders", orders, "half-orders to sweep")
      ->delimiter(',');
  c_time->add_option("--steps", steps, "steps to run")->required();
  c_time->add_option("--dt", dt, "time step")->required();
  c_time->add_option("--path", path, "auto, dense or sparse solves");
  c_time->add_option("--out", out_path, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
    if (c_scheme->parsed()) return cmd_scheme(order, pf);
    if (c_run->parsed()) {
      return cmd_run(sel, order, pf, dt, steps, tsim, integrator, path, dofs,
                     stride, out_path);
    }
    if (c_conv->parsed()) {
      return cmd_converge(sel, orders, pf, dt_list, tsim, path, out_path);
    }
    if (c_peae->parsed()) {
      return cmd_peae(orders, spp_list, periods, eval_periods, out_path);
    }
    if (c_time->parsed()) {
      return cmd_time(sel, orders, steps, dt, path, out_path);
    }
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const padeint::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const padeint::SingularSystemError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 3;
  }
}
