#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "pqosc/rational.hpp"

namespace pqosc {

struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A vanishing factor inside a shifted-factorial denominator.
struct pole_error : domain_error {
  long index;
  pole_error(const std::string& what, long k) : domain_error(what), index(k) {}
};

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integer power of the unimodular phase q = exp(i*theta). Composition adds
// exponents exactly; the complex value is only formed on request.
struct QPhase {
  long exponent = 0;
  friend QPhase operator*(QPhase a, QPhase b) { return {a.exponent + b.exponent}; }
  std::complex<double> realize(double theta) const {
    return std::polar(1.0, static_cast<double>(exponent) * theta);
  }
};

// The deformation pair: a positive real scale p and a unimodular phase
// q = exp(i*theta). q is stored as the angle only; all algebraic bookkeeping
// tracks integer powers of q. p may additionally carry an exact rational
// value, which the exact-arithmetic code paths require.
struct DeformationParams {
  double p = 1.0;
  double theta = 0.0;
  double tolerance = 1e-12;
  bool classical_limit = false;  // p = q = 1 limit mode
  std::optional<Rational> p_exact;

  static DeformationParams make(double p, double theta, double tolerance = 1e-12);
  static DeformationParams exact(const Rational& p, double theta, double tolerance = 1e-12);
  // Parses the decimal (or a/b) text into an exact rational and keeps the
  // double realization alongside.
  static DeformationParams from_text(const std::string& p_text, double theta,
                                     double tolerance = 1e-12);
  static DeformationParams classical(double tolerance = 1e-12);

  std::complex<double> q_power(long k) const { return QPhase{k}.realize(theta); }
  bool has_exact_p() const { return p_exact.has_value(); }
  const Rational& p_rational() const;

  double nu() const;        // 1/(1-p); undefined at p = 1
  Rational nu_exact() const;

  void validate() const;
};

}  // namespace pqosc
