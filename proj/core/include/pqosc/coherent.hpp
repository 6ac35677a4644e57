#pragma once

#include <span>

#include "pqosc/fock.hpp"

namespace pqosc {

// One z or z* factor of a word.
struct ZSymbol {
  int mode = 1;
  bool star = false;
};

// Exponents of a normal-ordered monomial: all z* factors left of all z
// factors, each block with strictly decreasing mode index left-to-right.
// Laurent (negative) exponents are allowed.
struct ZMonomial {
  std::vector<int> z_pow;
  std::vector<int> zstar_pow;
  friend auto operator<=>(const ZMonomial&, const ZMonomial&) = default;
};

struct OrderedZ {
  ZMonomial mono;
  long qpow = 0;
};

// Rewrites the word into canonical order, accumulating the exact integer
// q-exponent from the exchange rules
//   z_i z_j   = q      z_j z_i    (i < j)
//   z*_i z*_j = q^{-1} z*_j z*_i  (i < j)
//   z*_i z_j  = q      z_j z*_i   (i != j),   z*_i z_i = z_i z*_i.
// Every adjacent swap contributes a fixed power of q, so the result does not
// depend on the rewrite order.
OrderedZ normal_order(std::span<const ZSymbol> word, int n_modes);

// Polynomial in the noncommuting z, z* symbols; each monomial carries a
// q-power-graded exact coefficient.
class ZPolynomial {
 public:
  ZPolynomial() = default;

  static ZPolynomial one(int n_modes);

  bool is_zero() const { return terms_.empty(); }
  void add(const ZMonomial& mono, const ExactScalar& coeff);
  ZPolynomial& operator+=(const ZPolynomial& o);
  bool operator==(const ZPolynomial& o) const { return terms_ == o.terms_; }

  // Left-multiplication by z_i; the new factor crosses the whole z* block
  // and the z_j (j > i) factors of every monomial.
  ZPolynomial left_multiply_z(int mode) const;

  ZPolynomial& mul_scalar(const ExactScalar& s);
  ZPolynomial& mul_sqrt(const Rational& radicand);
  ZPolynomial& mul_rational(const Rational& c);
  ZPolynomial& mul_qpow(long k);

  const std::map<ZMonomial, ExactScalar>& terms() const { return terms_; }

 private:
  std::map<ZMonomial, ExactScalar> terms_;
};

enum class CoherentMethod { series, exponential };

// Lowering-operator coherent state in its unnormalized series form: the
// amplitude on |n_1,...,n_n> is the ordered monomial z_n^{n_n}...z_1^{n_1}
// divided by sqrt([n_1]!...[n_n]!), with zero q-power.
struct FormalCoherentState {
  ModeConfig config;
  int total_cutoff = 0;
  std::vector<double> magnitudes;  // r_i = |z_i|^2
  std::map<Occupation, ZPolynomial> amplitudes;
};

// Builds the state either directly from the series coefficients or by
// expanding the ordered product of deformed exponentials
// e_p(z_n a†_n) ... e_p(z_1 a†_1) applied to the vacuum; the two must agree
// map-for-map below the cutoff. Requires an exact rational p.
FormalCoherentState build_coherent_state(const ModeConfig& config, std::span<const double> r,
                                         CoherentMethod method, int total_cutoff);

// 1/sqrt(prod_i e_p(r_i)).
double coherent_normalization(const FormalCoherentState& state);

// |C^2 <state|state> - 1| with the z*z contractions |z_i|^2 = r_i.
double coherent_norm_residual(const FormalCoherentState& state);

// Upper bound on the part of the norm defect owed to the cutoff: any dropped
// occupation has some mode above total_cutoff/n_modes, so the per-mode e_p
// tails union-bound the dropped weight.
double coherent_truncation_allowance(const FormalCoherentState& state);

struct CoherentEigenReport {
  int mode = 0;
  long compared = 0;             // interior occupations checked
  bool exact_match = false;      // formal equality of every compared amplitude
  double max_mismatch = 0.0;     // realized magnitude of the worst mismatch
  double boundary_residue = 0.0; // truncation residue on the cutoff shell
};

// Verifies a_i|state> = z_i|state> as exact formal amplitude maps on all
// occupations with total below the cutoff; cutoff-shell discrepancies are
// truncation residue, not failure.
CoherentEigenReport check_lowering_eigenproblem(const FormalCoherentState& state, int mode);

}  // namespace pqosc
