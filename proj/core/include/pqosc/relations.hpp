#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqosc/fock.hpp"

namespace pqosc {

// Word letter over the generator set {a_i, a†_i, N_i, H_i, E_ij}. E tokens
// expand to the bilinear a†_i a_j.
struct GeneratorToken {
  enum class Kind { A, Adag, Num, Ham, E };
  Kind kind = Kind::A;
  int i = 0;
  int j = 0;  // E only

  static GeneratorToken a(int i) { return {Kind::A, i, 0}; }
  static GeneratorToken adag(int i) { return {Kind::Adag, i, 0}; }
  static GeneratorToken num(int i) { return {Kind::Num, i, 0}; }
  static GeneratorToken ham(int i) { return {Kind::Ham, i, 0}; }
  static GeneratorToken e(int i, int j) { return {Kind::E, i, j}; }

  int creation_depth() const { return kind == Kind::Adag || kind == Kind::E ? 1 : 0; }
};

// Scalar relation coefficient value * q^qpow with exact rational value and
// formal integer q-power.
struct RelationCoeff {
  Rational value{1};
  long qpow = 0;
};

struct RelationTerm {
  RelationCoeff coeff;
  std::vector<GeneratorToken> word;  // written order; the rightmost token acts first
};

// Formal linear combination of generator words. Evaluated on a basis state,
// sum_t coeff_t * word_t - constant * Id must vanish; its norm is the
// relation residual on that state.
struct RelationExpr {
  std::string label;
  std::string ref;  // anchor into docs/relations.md
  std::vector<RelationTerm> terms;
  RelationCoeff constant{Rational(0), 0};

  int creation_depth() const;
};

struct VerificationReport {
  std::string label;
  std::string ref;
  double p = 1.0;
  double theta = 0.0;
  int n_modes = 0;
  std::vector<int> cutoff;
  bool exact_mode = false;
  long domain_size = 0;
  double max_residual = 0.0;
  bool exact_zero = false;  // exact mode: residual vanished formally on every state
  bool pass = false;        // max_residual <= tolerance
  bool skipped = false;
  std::string note;
};

// Applies the word right-to-left through the mode operations; the overflow
// flag propagates.
template <class M>
FockVector<M> evaluate_word(std::span<const GeneratorToken> word, const FockVector<M>& state,
                            const ModeConfig& config) {
  FockVector<M> v = state;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (it->kind) {
      case GeneratorToken::Kind::A:
        v = apply_annihilation(it->i, v, config);
        break;
      case GeneratorToken::Kind::Adag:
        v = apply_creation(it->i, v, config);
        break;
      case GeneratorToken::Kind::Num:
        v = apply_number(it->i, v, config);
        break;
      case GeneratorToken::Kind::Ham:
        v = apply_subhamiltonian(it->i, v, config);
        break;
      case GeneratorToken::Kind::E:
        v = apply_annihilation(it->j, v, config);
        v = apply_creation(it->i, v, config);
        break;
    }
    if (v.is_zero() && !v.overflow) break;
  }
  return v;
}

template <class M>
FockVector<M> evaluate_relation(const RelationExpr& rel, const FockVector<M>& state,
                                const ModeConfig& config) {
  FockVector<M> acc;
  for (const RelationTerm& term : rel.terms) {
    FockVector<M> v = evaluate_word<M>(term.word, state, config);
    acc.overflow = acc.overflow || v.overflow;
    for (auto& [occ, amp] : v.amplitudes) {
      typename M::Amp a = amp;
      a.mul_rational(term.coeff.value);
      a.mul_qpow(term.coeff.qpow);
      acc.add(occ, std::move(a));
    }
  }
  if (rel.constant.value != 0) {
    for (const auto& [occ, amp] : state.amplitudes) {
      typename M::Amp a = amp;
      a.mul_rational(-rel.constant.value);
      a.mul_qpow(rel.constant.qpow);
      acc.add(occ, std::move(a));
    }
  }
  return acc;
}

// Evaluates the relation on every interior basis state (margin = creation
// depth, so the evaluation tree never crosses a cutoff) and reports the
// maximum residual norm. total_sector restricts the domain to states with
// that total occupation.
VerificationReport check_relation(const RelationExpr& rel, const ModeConfig& config, bool exact,
                                  double tolerance, std::optional<int> total_sector = std::nullopt);

// Adjoint test <op u, w> = <u, opdag w> over all interior basis pairs.
VerificationReport adjoint_report(const std::string& label, const std::string& ref,
                                  std::span<const GeneratorToken> op,
                                  std::span<const GeneratorToken> opdag, const ModeConfig& config,
                                  bool exact, double tolerance);

// Eigenvalues of H_i computed as [n] - nu against the closed form -p^n/(1-p).
VerificationReport subham_eigenvalue_report(int mode, const ModeConfig& config, bool exact,
                                            double tolerance);

// Ladder-series reconstruction of N_i against its diagonal action, over the
// whole in-cutoff basis.
VerificationReport number_series_report(int mode, const ModeConfig& config, bool exact,
                                        double tolerance);

enum class SuiteId { oscillator, conjugates, subhamiltonian, gl, hermiticity, number_series, classical };

std::optional<SuiteId> parse_suite(std::string_view name);
std::string_view suite_name(SuiteId id);
std::vector<std::string> all_suite_names();

// The RelationExpr instances a suite verifies (empty for suites made of
// dedicated checks, e.g. hermiticity).
std::vector<RelationExpr> suite_relations(SuiteId id, const ModeConfig& config);

std::vector<VerificationReport> run_suite(SuiteId id, const ModeConfig& config, bool exact,
                                          double tolerance);

}  // namespace pqosc
