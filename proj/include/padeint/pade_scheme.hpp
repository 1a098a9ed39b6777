#pragma once

#include <complex>
#include <vector>

#include "padeint/rational.hpp"

namespace padeint {

// Raised for internal algebraic consistency failures (inexact polynomial
// division, root residuals out of tolerance). Distinct from argument errors.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Polynomial in the system matrix, stored as coefficients by power:
// poly[j] multiplies A^j.
using RationalPoly = std::vector<Rational>;

// Everything the stepper needs about the order-2M rational approximant:
// numerator coefficients, denominator roots grouped for the block solves,
// the load-term polynomials C_k and the combined update polynomial.
struct PadeScheme {
  int order = 1;  // M; accuracy order is 2M
  int pf = 1;     // force interpolation degree
  std::vector<Rational> p;                          // numerator, p[m] * x^m
  std::vector<std::complex<double>> roots;          // all denominator roots
  std::vector<double> real_roots;                   // solve order: first
  std::vector<std::complex<double>> pair_roots;     // Im > 0, ascending Im
  std::vector<RationalPoly> ck;                     // ck[k], k = 0..pf
  RationalPoly phat;                                // P+Q (M odd) or P-Q (M even)
};

// Numerator coefficients of the diagonal approximant, exact integers:
// p[m] = (2M-m)! / (m! (M-m)!). The denominator is q[m] = (-1)^m p[m].
// Valid for 1 <= M <= 16; beyond that the integers overflow 128 bits.
std::vector<Rational> pade_coefficients(int M);

// Roots of the denominator polynomial. Tabulated closed-to-16-digit values
// for M <= 4; companion-matrix eigenvalues above that, residual-checked.
// All roots have positive real part (the approximant inherits stability).
std::vector<std::complex<double>> pade_denominator_roots(int M);

// Load polynomials C_k, k = 0..pf, from the recurrence
//   C_0 = A^{-1}(P - Q),  C_k = A^{-1}(k C_{k-1} + (-1/2)^k (P - (-1)^k Q)).
// Every division by A must be exact (zero constant term) or the tables are
// inconsistent; that raises NumericalError.
std::vector<RationalPoly> ck_polynomials(int M, int pf);

// P + Q for odd M, P - Q for even M; the top power cancels so deg <= M-1.
// Splitting the update this way halves the per-step matrix products.
RationalPoly phat_polynomial(int M);

PadeScheme make_scheme(int M, int pf = -1);  // pf < 0 selects pf = M

// Helpers shared by tests and the CLI.
double evaluate_poly(const RationalPoly& poly, double x);
std::complex<double> evaluate_poly(const RationalPoly& poly, std::complex<double> x);
std::complex<double> evaluate_numerator(const std::vector<Rational>& p, std::complex<double> x);
std::complex<double> evaluate_denominator(const std::vector<Rational>& p, std::complex<double> x);

}  // namespace padeint
