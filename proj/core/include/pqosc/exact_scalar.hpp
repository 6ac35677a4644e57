#pragma once

#include <complex>
#include <map>

#include "pqosc/params.hpp"

namespace pqosc {

// Exact scalar of the form  sum_j  c_j * sqrt(s_j) * q^{k_j}  with rational
// c_j and s_j >= 0 and integer k_j. q stays a formal unimodular symbol:
// equality and zero tests are statements about the whole Laurent polynomial
// in q, and a complex value is only produced by realize(theta). Since
// |q| = 1, conjugation negates the exponents.
//
// The radical part of a term is kept as a multiset of rational atoms with
// integer exponents (every sqrt factor ever multiplied in). Even exponents
// fold exactly into the coefficient; the product of the odd-exponent atoms
// is a single rational whose canonical integer radicand m keys the term,
// with the coefficient normalized against sqrt(m). Along any two evaluation
// routes with equal exact factor content the odd-residual products are equal
// rationals, so matching amplitudes land in identical buckets and cancel
// exactly.
class ExactScalar {
 public:
  struct Key {
    long qpow;
    Rational radicand;  // canonical positive integer m
    friend bool operator<(const Key& a, const Key& b) {
      if (a.qpow != b.qpow) return a.qpow < b.qpow;
      return a.radicand < b.radicand;
    }
    friend bool operator==(const Key& a, const Key& b) {
      return a.qpow == b.qpow && a.radicand == b.radicand;
    }
  };

  using Atoms = std::map<Rational, long>;  // atom -> exponent, all atoms > 0

  struct Term {
    Rational coeff;  // normalized: the term's value is coeff * sqrt(m) * q^qpow
    Atoms atoms;     // radical bookkeeping for later multiplications
    friend bool operator==(const Term& a, const Term& b) { return a.coeff == b.coeff; }
  };

  ExactScalar() = default;  // zero

  static ExactScalar one() { return from_rational(Rational(1)); }
  static ExactScalar from_rational(const Rational& c);
  static ExactScalar from_long(long c) { return from_rational(Rational(c)); }
  static ExactScalar from_sqrt(const Rational& radicand);  // sqrt(radicand), radicand >= 0
  static ExactScalar phase(long qpow);

  bool is_zero() const { return terms_.empty(); }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  ExactScalar operator*(const ExactScalar& o) const;

  ExactScalar& mul_rational(const Rational& c);
  ExactScalar& mul_long(long c) { return mul_rational(Rational(c)); }
  ExactScalar& mul_sqrt(const Rational& radicand);
  ExactScalar& mul_qpow(long k);

  ExactScalar conjugated() const;

  std::complex<double> realize(double theta) const;
  double realize_abs(double theta) const { return std::abs(realize(theta)); }

  // Equal buckets with equal normalized coefficients.
  bool operator==(const ExactScalar& o) const { return terms_ == o.terms_; }

  const std::map<Key, Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

 private:
  // Adds c * sqrt(prod atoms^e) * q^qpow with c relative to the atom product.
  void add_term(long qpow, Atoms atoms, const Rational& c);
  void merge_term(const Key& key, const Term& term, int sign);
  std::map<Key, Term> terms_;
};

}  // namespace pqosc
