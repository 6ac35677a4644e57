#pragma once

#include <complex>

#include "pqosc/params.hpp"

namespace pqosc {

// Deformed number [x] = (base^x - 1)/(base - 1); the base -> 1 limit is x.
// [x] in base p^2 is the same function with base = p*p.
double q_bracket(double x, double base);
Rational q_bracket_exact(long n, const Rational& base);  // n >= 0

// [n]! = [n][n-1]...[1] with [0]! = 1.
double q_bracket_factorial(long n, double base);
Rational q_bracket_factorial_exact(long n, const Rational& base);

// Shifted factorial (a;p)_n over the full integer index range:
//   n >= 0:  prod_{k=0}^{n-1} (1 - a p^k)
//   n <  0:  1 / prod_{k=1}^{-n} (1 - a p^{-k})
// This is the unique extension for which (a;p)_{n+1} = (a;p)_n (1 - a p^n)
// holds at every integer n. A vanishing factor in the negative-index
// denominator raises pole_error carrying the offending k.
double q_pochhammer(double a, double p, long n);
Rational q_pochhammer_exact(const Rational& a, const Rational& p, long n);

// e_p(x) = sum_{n>=0} x^n/[n]!. For 0 < p < 1 the brackets tend to 1/(1-p),
// so the series converges only on |x| < 1/(1-p); outside that disc the call
// raises domain_error. For p >= 1 the series is entire.
struct DeformedExpResult {
  std::complex<double> value;
  double tail_bound = 0.0;  // certified bound on the dropped tail
  int terms = 0;            // number of summed terms
};
DeformedExpResult deformed_exp(std::complex<double> x, double p, double tail_tolerance = 1e-15);
double deformed_exp_real(double x, double p, double tail_tolerance = 1e-15);

// Bilateral series psi01(a; p, x) = sum_{n in Z} (-1)^n p^{n(n-1)/2} x^n / (a;p)_n,
// 0 < p < 1. The positive tail decays like p^{n(n-1)/2}; the negative tail has
// term ratio -> |a/x|, so the sum only converges when |x| > |a| (and x != 0).
// The window expands until both boundary terms fall below term_tolerance
// relative to the accumulated sum, with tail decay asserted before stopping.
struct Psi01Result {
  double value = 0.0;
  int window_lo = 0;
  int window_hi = 0;
  double boundary_term = 0.0;
};
double bilateral_psi01(double a, double p, double x, double term_tolerance = 1e-15,
                       Psi01Result* info = nullptr);

// R(i,j): 1 when i > j, else 0.
inline int step_indicator(long i, long j) { return i > j ? 1 : 0; }

}  // namespace pqosc
