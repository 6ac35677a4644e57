#include "pqosc/params.hpp"

namespace pqosc {

void DeformationParams::validate() const {
  if (!(p > 0)) throw argument_error("deformation parameter p must be positive");
  if (!(tolerance > 0)) throw argument_error("tolerance must be positive");
  if (classical_limit) {
    if (p != 1.0 || theta != 0.0)
      throw argument_error("classical-limit mode fixes p = 1 and theta = 0");
  } else if (p == 1.0) {
    throw argument_error("p = 1 requires classical-limit mode");
  }
  if (p_exact && to_double(*p_exact) != p)
    throw argument_error("exact rational p disagrees with its double realization");
}

DeformationParams DeformationParams::make(double p, double theta, double tolerance) {
  DeformationParams d{p, theta, tolerance, false, std::nullopt};
  d.validate();
  return d;
}

DeformationParams DeformationParams::exact(const Rational& p, double theta, double tolerance) {
  DeformationParams d{to_double(p), theta, tolerance, false, p};
  d.validate();
  return d;
}

DeformationParams DeformationParams::from_text(const std::string& p_text, double theta,
                                               double tolerance) {
  Rational p = parse_rational(p_text);
  if (p == 1) return classical(tolerance);
  return exact(p, theta, tolerance);
}

DeformationParams DeformationParams::classical(double tolerance) {
  DeformationParams d{1.0, 0.0, tolerance, true, Rational(1)};
  d.validate();
  return d;
}

const Rational& DeformationParams::p_rational() const {
  if (!p_exact)
    throw argument_error("exact arithmetic requested but p carries no exact rational value");
  return *p_exact;
}

double DeformationParams::nu() const {
  if (p == 1.0) throw domain_error("nu = 1/(1-p) is undefined at p = 1");
  return 1.0 / (1.0 - p);
}

Rational DeformationParams::nu_exact() const {
  const Rational& pr = p_rational();
  if (pr == 1) throw domain_error("nu = 1/(1-p) is undefined at p = 1");
  return Rational(1) / (Rational(1) - pr);
}

}  // namespace pqosc
