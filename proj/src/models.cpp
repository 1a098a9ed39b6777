#include "padeint/models.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "padeint/signals.hpp"

namespace padeint {

namespace {
constexpr double kPi = std::numbers::pi;
}

SdofCase sdof_case(int index) {
  if (index < 1 || index > 6) {
    throw std::invalid_argument("sdof_case: index must be 1..6");
  }
  SdofCase c;
  c.index = index;
  c.omega_n = 2.0 * kPi;
  c.Tn = 1.0;
  c.m = 1.0;
  c.k = c.omega_n * c.omega_n;
  c.zeta = (index == 3 || index == 4) ? 0.05 : 0.0;
  c.c = 2.0 * c.zeta * c.omega_n;
  switch (index) {
    case 1:
    case 3:
      c.u0 = 1.0;
      c.v0 = 0.0;
      break;
    case 2:
    case 4:
      c.u0 = 0.0;
      c.v0 = 2.0 * kPi;
      break;
    case 5:
    case 6:
      c.u0 = 2.0;
      c.v0 = kPi / 3.0;
      break;
  }
  c.has_closed_form = index != 6;
  return c;
}

SecondOrderSystem sdof_system(const SdofCase& c) {
  SecondOrderSystem sys;
  sys.M = SparseRealMatrix::from_triplets(1, 1, {{0, 0, c.m}});
  sys.C = c.c != 0.0 ? SparseRealMatrix::from_triplets(1, 1, {{0, 0, c.c}})
                     : SparseRealMatrix::zero(1, 1);
  sys.K = SparseRealMatrix::from_triplets(1, 1, {{0, 0, c.k}});
  sys.u0 = {c.u0};
  sys.v0 = {c.v0};
  if (c.index == 5) {
    sys.force_spatial = {1.0};
    sys.force_signal = [](double t) { return harmonic_pair(t); };
  } else if (c.index == 6) {
    sys.force_spatial = {1.0};
    sys.force_signal = [](double t) { return piecewise_ramp(t); };
  }
  sys.name = "sdof_case_" + std::to_string(c.index);
  sys.validate();
  return sys;
}

double sdof_analytic(int index, double t) {
  const SdofCase c = sdof_case(index);
  const double w = c.omega_n;
  switch (index) {
    case 1:
    case 2:
      return c.u0 * std::cos(w * t) + c.v0 / w * std::sin(w * t);
    case 3:
    case 4: {
      const double wd = w * std::sqrt(1.0 - c.zeta * c.zeta);
      const double a = c.u0;
      const double b = (c.v0 + c.zeta * w * c.u0) / wd;
      return std::exp(-c.zeta * w * t) *
             (a * std::cos(wd * t) + b * std::sin(wd * t));
    }
    case 5: {
      // Steady response of each tone plus the homogeneous part that matches
      // the initial conditions.
      const double w1 = 2.0 / std::sqrt(5.0);
      const double w2 = 2.0 * std::sqrt(10.0);
      const double r1 = w1 / w, r2 = w2 / w;
      const double x1 = (10.0 / c.k) / (1.0 - r1 * r1);
      const double x2 = (70.0 / c.k) / (1.0 - r2 * r2);
      const double A = c.u0 - x1;
      const double B = c.v0 / w - r2 * x2;
      return A * std::cos(w * t) + B * std::sin(w * t) +
             x1 * std::cos(w1 * t) + x2 * std::sin(w2 * t);
    }
    default:
      throw std::invalid_argument(
          "sdof_analytic: no closed form for this case");
  }
}

std::vector<double> sdof_case6_reference(const std::vector<double>& times) {
  const SdofCase c = sdof_case(6);
  const double w = c.omega_n;
  // Events: sample times plus the load kinks in order.
  std::vector<double> events = times;
  for (double kink : piecewise_ramp_kinks()) events.push_back(kink);
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end(),
                           [](double a, double b) {
                             return std::abs(a - b) < 1e-14;
                           }),
               events.end());

  std::vector<double> out;
  out.reserve(times.size());
  double t = 0.0, u = c.u0, v = c.v0;
  size_t qi = 0;
  auto emit_if_sample = [&](double tc) {
    while (qi < times.size() && std::abs(times[qi] - tc) < 1e-12) {
      out.push_back(u);
      ++qi;
    }
  };
  emit_if_sample(0.0);
  for (double te : events) {
    if (te <= t + 1e-15) continue;
    const double tau = te - t;
    // Load is alpha + beta*s on [t, te] (s measured from t); with no damping
    // the particular solution is the quasi-static (alpha + beta*s)/k.
    // No segment straddles a kink, so two interior samples pin the line.
    const double f1 = piecewise_ramp(t + 0.25 * tau);
    const double f2 = piecewise_ramp(t + 0.75 * tau);
    const double beta = (f2 - f1) / (0.5 * tau);
    const double alpha = f1 - beta * 0.25 * tau;
    double uh = u - alpha / c.k;
    double vh = v - beta / c.k;
    const double cs = std::cos(w * tau), sn = std::sin(w * tau);
    const double uh1 = uh * cs + vh / w * sn;
    const double vh1 = -uh * w * sn + vh * cs;
    u = uh1 + (alpha + beta * tau) / c.k;
    v = vh1 + beta / c.k;
    t = te;
    emit_if_sample(te);
  }
  if (qi != times.size()) {
    throw std::invalid_argument(
        "sdof_case6_reference: times must be ascending and start at >= 0");
  }
  return out;
}

RodModel build_rod(int nx, int ny, double fex, double traction) {
  if (ny < 1 || nx != 5 * ny) {
    throw std::invalid_argument(
        "build_rod: need nx = 5*ny square elements (length 1, height 0.2)");
  }
  const double h = 1.0 / nx;
  const double E = 100.0, rho = 1.0;
  const int nnx = nx + 1, nny = ny + 1;
  const int nnode = nnx * nny;

  RodModel rod;
  rod.nx = nx;
  rod.ny = ny;
  rod.elem_size = h;
  rod.ndof_unconstrained = 2 * nnode;
  rod.free_map.assign(2 * nnode, -1);
  int nfree = 0;
  for (int node = 0; node < nnode; ++node) {
    const int i = node % nnx;
    if (i != 0) rod.free_map[2 * node] = nfree++;  // axial fixed on left edge
    rod.free_map[2 * node + 1] = nfree++;
  }

  // Element matrices for one square bilinear quad, 2x2 Gauss, plane stress
  // with zero Poisson ratio: D = diag(E, E, E/2).
  Eigen::Matrix<double, 8, 8> Ke = Eigen::Matrix<double, 8, 8>::Zero();
  Eigen::Matrix<double, 8, 8> Me = Eigen::Matrix<double, 8, 8>::Zero();
  const double gp = 1.0 / std::sqrt(3.0);
  const double xi_n[4] = {-1.0, 1.0, 1.0, -1.0};
  const double eta_n[4] = {-1.0, -1.0, 1.0, 1.0};
  Eigen::Matrix3d D = Eigen::Matrix3d::Zero();
  D(0, 0) = E;
  D(1, 1) = E;
  D(2, 2) = 0.5 * E;
  for (int gx = 0; gx < 2; ++gx) {
    for (int gy = 0; gy < 2; ++gy) {
      const double xi = gp * (gx == 0 ? -1 : 1);
      const double eta = gp * (gy == 0 ? -1 : 1);
      double N[4], dNdx[4], dNdy[4];
      for (int a = 0; a < 4; ++a) {
        N[a] = 0.25 * (1 + xi_n[a] * xi) * (1 + eta_n[a] * eta);
        dNdx[a] = 0.25 * xi_n[a] * (1 + eta_n[a] * eta) * (2.0 / h);
        dNdy[a] = 0.25 * eta_n[a] * (1 + xi_n[a] * xi) * (2.0 / h);
      }
      const double dJ = h * h / 4.0;  // square element Jacobian
      Eigen::Matrix<double, 3, 8> B = Eigen::Matrix<double, 3, 8>::Zero();
      for (int a = 0; a < 4; ++a) {
        B(0, 2 * a) = dNdx[a];
        B(1, 2 * a + 1) = dNdy[a];
        B(2, 2 * a) = dNdy[a];
        B(2, 2 * a + 1) = dNdx[a];
      }
      Ke += B.transpose() * D * B * dJ;
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          const double mab = rho * N[a] * N[b] * dJ;
          Me(2 * a, 2 * b) += mab;
          Me(2 * a + 1, 2 * b + 1) += mab;
        }
      }
    }
  }

  std::vector<TripletT<double>> kt, mt;
  kt.reserve(static_cast<size_t>(nx) * ny * 64);
  mt.reserve(static_cast<size_t>(nx) * ny * 64);
  for (int ej = 0; ej < ny; ++ej) {
    for (int ei = 0; ei < nx; ++ei) {
      const int nd[4] = {ej * nnx + ei, ej * nnx + ei + 1,
                         (ej + 1) * nnx + ei + 1, (ej + 1) * nnx + ei};
      for (int a = 0; a < 4; ++a) {
        for (int da = 0; da < 2; ++da) {
          const int ga = rod.free_map[2 * nd[a] + da];
          if (ga < 0) continue;
          for (int b = 0; b < 4; ++b) {
            for (int db = 0; db < 2; ++db) {
              const int gb = rod.free_map[2 * nd[b] + db];
              if (gb < 0) continue;
              const double kv = Ke(2 * a + da, 2 * b + db);
              const double mv = Me(2 * a + da, 2 * b + db);
              if (kv != 0.0) kt.push_back({ga, gb, kv});
              if (mv != 0.0) mt.push_back({ga, gb, mv});
            }
          }
        }
      }
    }
  }

  SecondOrderSystem sys;
  sys.K = SparseRealMatrix::from_triplets(nfree, nfree, std::move(kt));
  sys.M = SparseRealMatrix::from_triplets(nfree, nfree, std::move(mt));
  sys.C = SparseRealMatrix::zero(nfree, nfree);
  sys.u0.assign(nfree, 0.0);
  sys.v0.assign(nfree, 0.0);

  // Consistent loads of a uniform axial traction on the right edge: each
  // boundary segment of length h contributes traction*h/2 to its two nodes.
  std::vector<double> spatial(nfree, 0.0);
  for (int j = 0; j < ny; ++j) {
    const int na = j * nnx + nx, nb = (j + 1) * nnx + nx;
    spatial[rod.free_map[2 * na]] += 0.5 * traction * h;
    spatial[rod.free_map[2 * nb]] += 0.5 * traction * h;
  }
  sys.force_spatial = std::move(spatial);
  sys.force_signal = [fex](double t) { return sine_burst(t, fex, 1.0); };
  sys.name = "rod_" + std::to_string(nx) + "x" + std::to_string(ny);
  sys.validate();
  rod.system = std::move(sys);

  rod.obs_node = (ny / 2) * nnx + nx / 2;
  rod.obs_dof = rod.free_map[2 * rod.obs_node];
  return rod;
}

double cfl_number(const RodModel& rod, double dt) {
  const double cl = 10.0;  // sqrt(E/rho) with zero Poisson ratio
  return cl * dt / rod.elem_size;
}

std::vector<double> axial_frequencies(const RodModel& rod, int count) {
  // Project K and M onto y-uniform axial patterns: column i of the basis
  // moves every node of mesh column i by one unit in x. The projected pair
  // is the consistent-mass bar problem the rod's axial response satisfies.
  const int nnx = rod.nx + 1, nny = rod.ny + 1;
  const int n = rod.system.ndof();
  Eigen::MatrixXd Bs = Eigen::MatrixXd::Zero(n, rod.nx);
  for (int i = 1; i < nnx; ++i) {
    for (int j = 0; j < nny; ++j) {
      const int fd = rod.free_map[2 * (j * nnx + i)];
      Bs(fd, i - 1) = 1.0;
    }
  }
  auto dense = [&](const SparseRealMatrix& m) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
      for (int p = m.row_ptr()[r]; p < m.row_ptr()[r + 1]; ++p) {
        out(r, m.col_idx()[p]) += m.values()[p];
      }
    }
    return out;
  };
  const Eigen::MatrixXd Kp = Bs.transpose() * dense(rod.system.K) * Bs;
  const Eigen::MatrixXd Mp = Bs.transpose() * dense(rod.system.M) * Bs;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(Kp, Mp);
  std::vector<double> f;
  for (int i = 0; i < count && i < es.eigenvalues().size(); ++i) {
    f.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i))) / (2.0 * kPi));
  }
  return f;
}

std::vector<double> axial_frequencies_analytic(int count) {
  std::vector<double> f(count);
  for (int k = 1; k <= count; ++k) f[k - 1] = (2.0 * k - 1.0) * 10.0 / 4.0;
  return f;
}

}  // namespace padeint
