#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pqosc/exact_scalar.hpp"
#include "pqosc/qnumbers.hpp"

namespace pqosc {

// Length-N word over the alphabet {1,...,n}, one letter per tensor slot.
struct QWord {
  std::vector<int> letters;

  int size() const { return static_cast<int>(letters.size()); }
  // Occupation profile (n_1,...,n_alphabet); alphabet defaults to the
  // largest letter present.
  std::vector<int> profile(int alphabet = 0) const;
  friend auto operator<=>(const QWord&, const QWord&) = default;
};

// Number of ordered pairs k < l with seq_k > seq_l.
long inversion_count(std::span<const int> seq);

// +1 when i > j, 0 when equal, -1 when i < j.
inline int exchange_epsilon(int i, int j) { return step_indicator(i, j) - step_indicator(j, i); }

enum class PermSet { all_permutations, distinct_rearrangements };
enum class QPhaseSource { input_word_global, per_term_word };

// One reading of the underdetermined signature/identity pair. The
// p_exponent_scale is the exponent at which the permutation-sum identity is
// read (the signature itself always carries the plain inversion count);
// resolve_convention probes the whole space against the exchange property,
// unit norm, and the identity, and only a convention passing all three is
// accepted.
struct Convention {
  PermSet perm_set = PermSet::distinct_rearrangements;
  int p_exponent_scale = 2;
  QPhaseSource q_phase_source = QPhaseSource::input_word_global;

  std::string describe() const;
  friend bool operator==(const Convention&, const Convention&) = default;
};

// The convention the exhaustive probe singles out.
Convention resolved_convention();
std::vector<Convention> all_conventions();

// Exponents of one signature factor sgn_q = q^A p^B.
struct SignatureExponents {
  long qpow = 0;
  long ppow = 0;
};

// positions carries the permutation sequence sigma(1..N) when the convention
// enumerates permutations; it is empty for distinct rearrangements, where the
// p-statistic is the inversion count of the rearranged word itself.
SignatureExponents signature(const QWord& term_word, std::span<const int> positions,
                             const QWord& input, const Convention& convention);

// Amplitude on one rearranged word: an integer-multiplicity sum of exact
// q^A p^B factors. Float realization happens only at comparison time.
struct QSymAmp {
  std::map<std::pair<long, long>, long long> terms;  // (qpow, ppow) -> multiplicity

  void add(long qpow, long ppow, long long mult = 1);
  QSymAmp shifted_q(long dq) const;
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const QSymAmp&, const QSymAmp&) = default;

  ExactScalar to_exact(const Rational& p) const;
  std::complex<double> realize(double p, double theta) const;
};

struct QSymState {
  std::map<QWord, QSymAmp> amplitudes;
  Rational prefactor_radicand;  // prod_k [n_k]_{p^2}! / [N]_{p^2}!
  QWord input;
  Convention convention;
};

// Signature-weighted sum over the convention's permutation set, scaled by
// sqrt(prod [n_k]_{p^2}! / [N]_{p^2}!). Requires an exact rational p for the
// prefactor.
QSymState build_qsym_state(const QWord& input, const DeformationParams& params,
                           const Convention& convention = resolved_convention());

// Exact unit-norm test (rational p) and the realized |norm - 1| residual.
bool qsym_norm_is_one(const QSymState& state, const DeformationParams& params);
double qsym_norm_residual(const QSymState& state, const DeformationParams& params);

struct ExchangeReport {
  int position = 0;
  int phase_exponent = 0;  // epsilon(i_k, i_{k+1})
  bool exact = false;      // amplitude maps match with the q^epsilon shift
  double residual = 0.0;
};

// Adjacent-swap phase law: build(..., i_k, i_{k+1}, ...) equals
// q^{epsilon(i_k, i_{k+1})} build(..., i_{k+1}, i_k, ...) as exact maps.
ExchangeReport exchange_check(const QWord& word, int k, const DeformationParams& params,
                              const Convention& convention = resolved_convention());

// Transition operator P_{k,k+1}: the state built from the adjacent-swapped
// input word; applying it twice returns the original state exactly.
QSymState transition_apply(int k, const QSymState& state, const DeformationParams& params);

struct IdentityReport {
  std::vector<int> profile;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string note;
};

// Permutation-sum identity at the convention's exponent scale:
// sum over the permutation set of p^{scale * inversions} against
// [N]_{p^2}! / prod_k [n_k]_{p^2}!, exact for rational p.
IdentityReport multinomial_identity_check(std::span<const int> profile,
                                          const DeformationParams& params,
                                          const Convention& convention);

struct ConventionVerdict {
  Convention convention;
  bool satisfies = false;
  std::string counterexample;  // first failure, empty when satisfied
};

struct ResolveReport {
  std::vector<ConventionVerdict> verdicts;
  std::optional<Convention> resolved;
  long words_probed = 0;
};

// Exhaustive probe of the full convention space over all words with
// N <= n_max letters from {1..alphabet_max}, against (a) the exchange
// property, (b) unit norm, (c) the identity at the convention's scale, for
// every parameter set in the grid. No satisfying convention is a hard
// failure for the caller to surface.
ResolveReport resolve_convention(int n_max, int alphabet_max,
                                 std::span<const DeformationParams> grid);

}  // namespace pqosc
