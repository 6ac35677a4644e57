#pragma once

#include <complex>
#include <map>

#include "pqosc/params.hpp"

namespace pqosc {

// Floating-point amplitude graded by integer powers of q: sum_k c_k q^k with
// complex double c_k. The grading keeps q-phase bookkeeping exact (exponents
// are integers that add under multiplication); exp(i k theta) is formed only
// inside realize().
class PhasedComplex {
 public:
  PhasedComplex() = default;  // zero

  static PhasedComplex one() { return from(1.0); }
  static PhasedComplex from(std::complex<double> c);
  static PhasedComplex phase(long qpow);

  bool is_zero() const { return terms_.empty(); }

  PhasedComplex& operator+=(const PhasedComplex& o);
  PhasedComplex& operator-=(const PhasedComplex& o);
  PhasedComplex operator*(const PhasedComplex& o) const;

  PhasedComplex& mul_complex(std::complex<double> c);
  PhasedComplex& mul_rational(const Rational& c) { return mul_complex(to_double(c)); }
  PhasedComplex& mul_long(long c) { return mul_complex(static_cast<double>(c)); }
  PhasedComplex& mul_sqrt(double radicand);
  PhasedComplex& mul_qpow(long k);

  PhasedComplex conjugated() const;

  std::complex<double> realize(double theta) const;
  double realize_abs(double theta) const { return std::abs(realize(theta)); }

  // Lowest/highest q-exponent present; only valid on nonzero amplitudes.
  long min_qpow() const;
  long max_qpow() const;

  const std::map<long, std::complex<double>>& terms() const { return terms_; }

 private:
  void add_term(long qpow, std::complex<double> c);
  std::map<long, std::complex<double>> terms_;
};

}  // namespace pqosc
