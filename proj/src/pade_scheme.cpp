#include "padeint/pade_scheme.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace padeint {

namespace {

Rational::Int factorial128(int n) {
  Rational::Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_order(int M) {
  if (M < 1 || M > 16)
    throw std::invalid_argument(
        "order parameter must be in [1, 16]; exact 128-bit coefficient "
        "arithmetic overflows beyond 16");
}

// Denominator coefficients as doubles, q[m] = (-1)^m p[m].
std::vector<double> denominator_coeffs(int M) {
  auto p = pade_coefficients(M);
  std::vector<double> q(M + 1);
  for (int m = 0; m <= M; ++m)
    q[m] = ((m % 2 == 0) ? 1.0 : -1.0) * p[m].to_double();
  return q;
}

std::vector<std::complex<double>> companion_roots(int M) {
  auto q = denominator_coeffs(M);
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(M, M);
  for (int i = 1; i < M; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < M; ++i) C(i, M - 1) = -q[i] / q[M];
  Eigen::EigenSolver<Eigen::MatrixXd> es(C);
  std::vector<std::complex<double>> roots(M);
  for (int i = 0; i < M; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

}  // namespace

std::vector<Rational> pade_coefficients(int M) {
  check_order(M);
  std::vector<Rational> p(M + 1);
  for (int m = 0; m <= M; ++m) {
    // (2M-m)! / (M-m)! as a rising product, then the exact division by m!.
    Rational::Int num = 1;
    for (Rational::Int i = M - m + 1; i <= 2 * M - m; ++i) num *= i;
    p[m] = Rational(num, factorial128(m));
    if (!p[m].is_integer())
      throw NumericalError("coefficient table lost integrality");
  }
  return p;
}

std::vector<std::complex<double>> pade_denominator_roots(int M) {
  check_order(M);
  using C = std::complex<double>;
  std::vector<C> roots;
  switch (M) {
    case 1:
      roots = {C(2.0, 0.0)};
      break;
    case 2:
      roots = {C(3.0, std::sqrt(3.0)), C(3.0, -std::sqrt(3.0))};
      break;
    case 3:
      roots = {C(4.644370709252171, 0.0),
               C(3.677814645373910, 3.508761919567443),
               C(3.677814645373910, -3.508761919567443)};
      break;
    case 4:
      roots = {C(4.207578794359259, 5.314836083713504),
               C(4.207578794359259, -5.314836083713504),
               C(5.792421205640749, 1.734468257869007),
               C(5.792421205640749, -1.734468257869007)};
      break;
    default:
      roots = companion_roots(M);
      break;
  }

  // Residual check against the exact coefficients guards both the tabulated
  // values and the eigensolver path.
  auto q = denominator_coeffs(M);
  double norm1 = 0.0;
  for (double c : q) norm1 += std::abs(c);
  for (const auto& r : roots) {
    C v = 0.0;
    for (int m = M; m >= 0; --m) v = v * r + q[m];
    if (std::abs(v) / norm1 > 1e-10)
      throw NumericalError("denominator root residual out of tolerance");
    if (r.real() <= 0.0)
      throw NumericalError("denominator root with non-positive real part");
  }
  return roots;
}

std::vector<RationalPoly> ck_polynomials(int M, int pf) {
  check_order(M);
  if (pf < 0 || pf > 8)
    throw std::invalid_argument("force interpolation degree must be in [0, 8]");
  auto p = pade_coefficients(M);

  // P - (-1)^k Q keeps alternate powers only: odd powers (doubled) when k is
  // even, even powers (doubled) when k is odd.
  auto parity_diff = [&](int k) {
    RationalPoly d(M + 1, Rational(0));
    for (int m = 0; m <= M; ++m) {
      bool keep = (k % 2 == 0) ? (m % 2 == 1) : (m % 2 == 0);
      if (keep) d[m] = Rational(2) * p[m];
    }
    return d;
  };

  auto divide_by_A = [](const RationalPoly& poly) {
    if (!poly.empty() && !poly[0].is_zero())
      throw NumericalError("load polynomial division by A is not exact");
    RationalPoly out(poly.size() > 1 ? poly.size() - 1 : 1, Rational(0));
    for (size_t j = 1; j < poly.size(); ++j) out[j - 1] = poly[j];
    return out;
  };

  std::vector<RationalPoly> ck;
  ck.push_back(divide_by_A(parity_diff(0)));
  Rational half_pow(1);
  for (int k = 1; k <= pf; ++k) {
    half_pow = half_pow * Rational(-1, 2);
    RationalPoly acc = parity_diff(k);
    for (auto& c : acc) c = c * half_pow;
    const RationalPoly& prev = ck.back();
    if (acc.size() < prev.size()) acc.resize(prev.size(), Rational(0));
    for (size_t j = 0; j < prev.size(); ++j)
      acc[j] = acc[j] + Rational(k) * prev[j];
    ck.push_back(divide_by_A(acc));
  }
  for (const auto& c : ck)
    if (static_cast<int>(c.size()) > M + 1)
      throw NumericalError("load polynomial degree exceeds bound");
  return ck;
}

RationalPoly phat_polynomial(int M) {
  check_order(M);
  auto p = pade_coefficients(M);
  // P + Q doubles even powers, P - Q doubles odd powers; either way the A^M
  // term cancels, which is exactly why the split is worth doing.
  RationalPoly out(M, Rational(0));
  for (int m = 0; m < M; ++m) {
    bool keep = (M % 2 == 1) ? (m % 2 == 0) : (m % 2 == 1);
    if (keep) out[m] = Rational(2) * p[m];
  }
  return out;
}

PadeScheme make_scheme(int M, int pf) {
  PadeScheme s;
  s.order = M;
  s.pf = pf < 0 ? M : pf;
  s.p = pade_coefficients(M);
  s.roots = pade_denominator_roots(M);
  s.ck = ck_polynomials(M, s.pf);
  s.phat = phat_polynomial(M);

  for (const auto& r : s.roots) {
    if (std::abs(r.imag()) < 1e-9 * std::abs(r))
      s.real_roots.push_back(r.real());
    else if (r.imag() > 0.0)
      s.pair_roots.push_back(r);
  }
  std::sort(s.real_roots.begin(), s.real_roots.end());
  std::sort(s.pair_roots.begin(), s.pair_roots.end(),
            [](const auto& a, const auto& b) { return a.imag() < b.imag(); });

  size_t expected_real = M % 2, expected_pairs = M / 2;
  if (s.real_roots.size() != expected_real ||
      s.pair_roots.size() != expected_pairs)
    throw NumericalError(
        "denominator root structure violates the odd/even pattern");
  return s;
}

double evaluate_poly(const RationalPoly& poly, double x) {
  double v = 0.0;
  for (size_t j = poly.size(); j-- > 0;) v = v * x + poly[j].to_double();
  return v;
}

std::complex<double> evaluate_poly(const RationalPoly& poly,
                                   std::complex<double> x) {
  std::complex<double> v = 0.0;
  for (size_t j = poly.size(); j-- > 0;) v = v * x + poly[j].to_double();
  return v;
}

std::complex<double> evaluate_numerator(const std::vector<Rational>& p,
                                        std::complex<double> x) {
  std::complex<double> v = 0.0;
  for (size_t m = p.size(); m-- > 0;) v = v * x + p[m].to_double();
  return v;
}

std::complex<double> evaluate_denominator(const std::vector<Rational>& p,
                                          std::complex<double> x) {
  std::complex<double> v = 0.0;
  for (size_t m = p.size(); m-- > 0;) {
    double c = ((m % 2 == 0) ? 1.0 : -1.0) * p[m].to_double();
    v = v * x + c;
  }
  return v;
}

}  // namespace padeint
