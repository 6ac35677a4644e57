#include "pqosc/qnumbers.hpp"

#include <cmath>
#include <limits>

namespace pqosc {

double q_bracket(double x, double base) {
  if (!(base > 0)) throw argument_error("q_bracket: base must be positive");
  if (base == 1.0) return x;
  return std::expm1(x * std::log(base)) / (base - 1.0);
}

Rational q_bracket_exact(long n, const Rational& base) {
  if (n < 0) throw argument_error("q_bracket_exact: negative argument");
  // 1 + base + ... + base^{n-1}; also correct at base = 1.
  Rational acc(0), pk(1);
  for (long k = 0; k < n; ++k) {
    acc += pk;
    pk *= base;
  }
  return acc;
}

double q_bracket_factorial(long n, double base) {
  if (n < 0) throw argument_error("q_bracket_factorial: negative argument");
  double acc = 1.0;
  for (long k = 1; k <= n; ++k) acc *= q_bracket(static_cast<double>(k), base);
  return acc;
}

Rational q_bracket_factorial_exact(long n, const Rational& base) {
  if (n < 0) throw argument_error("q_bracket_factorial_exact: negative argument");
  Rational acc(1);
  for (long k = 1; k <= n; ++k) acc *= q_bracket_exact(k, base);
  return acc;
}

double q_pochhammer(double a, double p, long n) {
  if (!(p > 0)) throw argument_error("q_pochhammer: base must be positive");
  if (n >= 0) {
    double acc = 1.0, pk = 1.0;
    for (long k = 0; k < n; ++k) {
      acc *= 1.0 - a * pk;
      pk *= p;
    }
    return acc;
  }
  double acc = 1.0, pk = 1.0 / p;
  for (long k = 1; k <= -n; ++k) {
    double factor = 1.0 - a * pk;
    if (factor == 0.0)
      throw pole_error("q_pochhammer: factor 1 - a p^{-k} vanishes at k = " + std::to_string(k), k);
    acc *= factor;
    pk /= p;
  }
  return 1.0 / acc;
}

Rational q_pochhammer_exact(const Rational& a, const Rational& p, long n) {
  if (p <= 0) throw argument_error("q_pochhammer_exact: base must be positive");
  if (n >= 0) {
    Rational acc(1), pk(1);
    for (long k = 0; k < n; ++k) {
      acc *= Rational(1) - a * pk;
      pk *= p;
    }
    return acc;
  }
  Rational acc(1), pk = Rational(1) / p;
  for (long k = 1; k <= -n; ++k) {
    Rational factor = Rational(1) - a * pk;
    if (factor == 0)
      throw pole_error("q_pochhammer_exact: factor 1 - a p^{-k} vanishes at k = " + std::to_string(k),
                       k);
    acc *= factor;
    pk /= p;
  }
  return Rational(1) / acc;
}

DeformedExpResult deformed_exp(std::complex<double> x, double p, double tail_tolerance) {
  if (!(p > 0)) throw argument_error("deformed_exp: p must be positive");
  if (!(tail_tolerance > 0)) throw argument_error("deformed_exp: tolerance must be positive");
  const double ax = std::abs(x);
  if (p < 1.0) {
    const double radius = 1.0 / (1.0 - p);
    if (!(ax < radius))
      throw domain_error("deformed_exp: |x| outside the convergence disc |x| < 1/(1-p)");
  }

  std::complex<double> sum = 1.0;
  std::complex<double> term = 1.0;
  int n = 0;
  for (;;) {
    ++n;
    term *= x / q_bracket(static_cast<double>(n), p);
    sum += term;
    // The brackets increase with n, so once |x|/[n+1] < 1 every later term
    // ratio is below it and the tail is geometrically bounded.
    const double ratio = ax / q_bracket(static_cast<double>(n + 1), p);
    if (ratio < 1.0) {
      const double bound = std::abs(term) * ratio / (1.0 - ratio);
      if (std::abs(term) <= tail_tolerance * std::abs(sum) &&
          bound <= tail_tolerance * std::abs(sum)) {
        return {sum, bound, n + 1};
      }
    }
    if (n > 100000) throw domain_error("deformed_exp: series failed to converge");
  }
}

double deformed_exp_real(double x, double p, double tail_tolerance) {
  return deformed_exp(std::complex<double>(x, 0.0), p, tail_tolerance).value.real();
}

double bilateral_psi01(double a, double p, double x, double term_tolerance, Psi01Result* info) {
  if (!(p > 0 && p < 1)) throw domain_error("bilateral_psi01: requires 0 < p < 1");
  if (x == 0.0) throw domain_error("bilateral_psi01: x = 0 is outside the domain");
  if (!(std::abs(x) > std::abs(a)))
    throw domain_error("bilateral_psi01: negative tail diverges unless |x| > |a|");
  if (!(term_tolerance > 0)) throw argument_error("bilateral_psi01: tolerance must be positive");

  // Terms are generated by the exact ratios
  //   t(n+1) = t(n) * (-p^n x) / (1 - a p^n)
  //   t(n-1) = t(n) * -(1 - a p^{n-1}) / (p^{n-1} x)
  // starting from t(0) = 1.
  double sum = 1.0;
  double up = 1.0, down = 1.0;
  int hi = 0, lo = 0;
  double p_hi = 1.0;       // p^hi
  double p_lo_m1 = 1.0 / p;  // p^{lo-1}

  const int max_window = 100000;
  for (;;) {
    bool up_ok = false, down_ok = false;

    const double up_denom = 1.0 - a * p_hi;
    if (up_denom == 0.0)
      throw pole_error("bilateral_psi01: shifted-factorial pole at n = " + std::to_string(hi + 1),
                       hi + 1);
    const double up_ratio = std::abs(p_hi * x / up_denom);
    if (up_ratio < 1.0 && std::abs(up) <= term_tolerance * std::abs(sum)) up_ok = true;

    const double down_ratio = std::abs((1.0 - a * p_lo_m1) / (p_lo_m1 * x));
    if (down_ratio < 1.0 && std::abs(down) <= term_tolerance * std::abs(sum)) down_ok = true;

    if (up_ok && down_ok) break;

    if (!up_ok) {
      up *= -p_hi * x / up_denom;
      sum += up;
      ++hi;
      p_hi *= p;
    }
    if (!down_ok) {
      down *= -(1.0 - a * p_lo_m1) / (p_lo_m1 * x);
      sum += down;
      --lo;
      p_lo_m1 /= p;
    }
    if (hi - lo > max_window)
      throw domain_error("bilateral_psi01: window expansion failed to converge");
  }

  if (info) {
    info->value = sum;
    info->window_lo = lo;
    info->window_hi = hi;
    info->boundary_term = std::max(std::abs(up), std::abs(down));
  }
  return sum;
}

}  // namespace pqosc
