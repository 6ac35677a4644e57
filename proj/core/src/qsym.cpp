#include "pqosc/qsym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace pqosc {

std::vector<int> QWord::profile(int alphabet) const {
  int n = alphabet;
  for (int l : letters) n = std::max(n, l);
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (int l : letters) {
    if (l < 1) throw argument_error("word letters must be >= 1");
    ++counts[static_cast<std::size_t>(l - 1)];
  }
  return counts;
}

long inversion_count(std::span<const int> seq) {
  long count = 0;
  for (std::size_t k = 0; k < seq.size(); ++k)
    for (std::size_t l = k + 1; l < seq.size(); ++l) count += step_indicator(seq[k], seq[l]);
  return count;
}

std::string Convention::describe() const {
  std::string out = perm_set == PermSet::all_permutations ? "all-permutations"
                                                          : "distinct-rearrangements";
  out += "/scale-" + std::to_string(p_exponent_scale);
  out += q_phase_source == QPhaseSource::input_word_global ? "/input-word-phase"
                                                           : "/per-term-phase";
  return out;
}

Convention resolved_convention() {
  return {PermSet::distinct_rearrangements, 2, QPhaseSource::input_word_global};
}

std::vector<Convention> all_conventions() {
  std::vector<Convention> out;
  for (PermSet ps : {PermSet::all_permutations, PermSet::distinct_rearrangements})
    for (int scale : {1, 2})
      for (QPhaseSource qs : {QPhaseSource::input_word_global, QPhaseSource::per_term_word})
        out.push_back({ps, scale, qs});
  return out;
}

SignatureExponents signature(const QWord& term_word, std::span<const int> positions,
                             const QWord& input, const Convention& convention) {
  SignatureExponents s;
  s.qpow = convention.q_phase_source == QPhaseSource::input_word_global
               ? inversion_count(input.letters)
               : inversion_count(term_word.letters);
  s.ppow = positions.empty() ? inversion_count(term_word.letters) : inversion_count(positions);
  return s;
}

void QSymAmp::add(long qpow, long ppow, long long mult) {
  if (mult == 0) return;
  auto key = std::make_pair(qpow, ppow);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms.erase(it);
  }
}

QSymAmp QSymAmp::shifted_q(long dq) const {
  QSymAmp out;
  for (const auto& [key, mult] : terms) out.terms.emplace(std::make_pair(key.first + dq, key.second), mult);
  return out;
}

ExactScalar QSymAmp::to_exact(const Rational& p) const {
  ExactScalar acc;
  for (const auto& [key, mult] : terms) {
    ExactScalar term = ExactScalar::phase(key.first);
    term.mul_rational(rational_pow(p, key.second) * Rational(mult));
    acc += term;
  }
  return acc;
}

std::complex<double> QSymAmp::realize(double p, double theta) const {
  std::complex<double> acc = 0.0;
  for (const auto& [key, mult] : terms)
    acc += static_cast<double>(mult) * std::pow(p, static_cast<double>(key.second)) *
           QPhase{key.first}.realize(theta);
  return acc;
}

QSymState build_qsym_state(const QWord& input, const DeformationParams& params,
                           const Convention& convention) {
  if (input.letters.empty()) throw argument_error("build_qsym_state: empty word");
  const Rational& p = params.p_rational();
  const Rational p_sq = p * p;

  QSymState state;
  state.input = input;
  state.convention = convention;

  const int N = input.size();
  Rational numerator(1);
  for (int nk : input.profile()) numerator *= q_bracket_factorial_exact(nk, p_sq);
  state.prefactor_radicand = numerator / q_bracket_factorial_exact(N, p_sq);

  if (convention.perm_set == PermSet::distinct_rearrangements) {
    QWord word = input;
    std::sort(word.letters.begin(), word.letters.end());
    do {
      SignatureExponents s = signature(word, {}, input, convention);
      state.amplitudes[word].add(s.qpow, s.ppow);
    } while (std::next_permutation(word.letters.begin(), word.letters.end()));
  } else {
    std::vector<int> sigma(static_cast<std::size_t>(N));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      QWord word;
      word.letters.reserve(static_cast<std::size_t>(N));
      for (int pos : sigma)
        word.letters.push_back(input.letters[static_cast<std::size_t>(pos - 1)]);
      SignatureExponents s = signature(word, sigma, input, convention);
      state.amplitudes[word].add(s.qpow, s.ppow);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return state;
}

namespace {

// norm^2 = prefactor^2 * sum_w amp_w conj(amp_w), exact with the q-powers
// kept formal.
ExactScalar norm_squared_exact(const QSymState& state, const Rational& p) {
  ExactScalar acc;
  for (const auto& [word, amp] : state.amplitudes) {
    ExactScalar a = amp.to_exact(p);
    acc += a * a.conjugated();
  }
  acc.mul_rational(state.prefactor_radicand);
  return acc;
}

}  // namespace

bool qsym_norm_is_one(const QSymState& state, const DeformationParams& params) {
  ExactScalar n2 = norm_squared_exact(state, params.p_rational());
  return (n2 - ExactScalar::one()).is_zero();
}

double qsym_norm_residual(const QSymState& state, const DeformationParams& params) {
  if (params.has_exact_p()) {
    ExactScalar n2 = norm_squared_exact(state, params.p_rational());
    ExactScalar diff = n2 - ExactScalar::one();
    if (diff.is_zero()) return 0.0;
    return std::abs(std::sqrt(std::abs(n2.realize(params.theta))) - 1.0);
  }
  double acc = 0.0;
  for (const auto& [word, amp] : state.amplitudes) {
    double m = std::abs(amp.realize(params.p, params.theta));
    acc += m * m;
  }
  acc *= to_double(state.prefactor_radicand);
  return std::abs(std::sqrt(acc) - 1.0);
}

ExchangeReport exchange_check(const QWord& word, int k, const DeformationParams& params,
                              const Convention& convention) {
  const int N = word.size();
  if (k < 1 || k >= N) throw argument_error("exchange_check: position out of range");
  QWord swapped = word;
  std::swap(swapped.letters[static_cast<std::size_t>(k - 1)],
            swapped.letters[static_cast<std::size_t>(k)]);

  QSymState lhs = build_qsym_state(word, params, convention);
  QSymState rhs = build_qsym_state(swapped, params, convention);

  ExchangeReport report;
  report.position = k;
  report.phase_exponent = exchange_epsilon(word.letters[static_cast<std::size_t>(k - 1)],
                                           word.letters[static_cast<std::size_t>(k)]);

  bool equal = lhs.prefactor_radicand == rhs.prefactor_radicand &&
               lhs.amplitudes.size() == rhs.amplitudes.size();
  double residual = 0.0;
  if (equal) {
    for (const auto& [w, amp] : lhs.amplitudes) {
      auto it = rhs.amplitudes.find(w);
      if (it == rhs.amplitudes.end() || !(amp == it->second.shifted_q(report.phase_exponent))) {
        equal = false;
        break;
      }
    }
  }
  if (!equal) {
    // Realized distance for the report.
    const double pref = std::sqrt(to_double(lhs.prefactor_radicand));
    for (const auto& [w, amp] : lhs.amplitudes) {
      std::complex<double> l = amp.realize(params.p, params.theta) * pref;
      std::complex<double> r = 0.0;
      if (auto it = rhs.amplitudes.find(w); it != rhs.amplitudes.end())
        r = it->second.realize(params.p, params.theta) *
            std::sqrt(to_double(rhs.prefactor_radicand)) *
            QPhase{report.phase_exponent}.realize(params.theta);
      residual = std::max(residual, std::abs(l - r));
    }
  }
  report.exact = equal;
  report.residual = residual;
  return report;
}

QSymState transition_apply(int k, const QSymState& state, const DeformationParams& params) {
  const int N = state.input.size();
  if (k < 1 || k >= N) throw argument_error("transition_apply: position out of range");
  QWord swapped = state.input;
  std::swap(swapped.letters[static_cast<std::size_t>(k - 1)],
            swapped.letters[static_cast<std::size_t>(k)]);
  return build_qsym_state(swapped, params, state.convention);
}

IdentityReport multinomial_identity_check(std::span<const int> profile,
                                          const DeformationParams& params,
                                          const Convention& convention) {
  IdentityReport report;
  report.profile.assign(profile.begin(), profile.end());

  QWord sorted;
  for (std::size_t letter = 0; letter < profile.size(); ++letter) {
    if (profile[letter] < 0) throw argument_error("identity: negative profile entry");
    for (int c = 0; c < profile[letter]; ++c) sorted.letters.push_back(static_cast<int>(letter + 1));
  }
  const int N = sorted.size();
  if (N == 0) throw argument_error("identity: empty profile");

  const Rational& p = params.p_rational();
  const Rational p_sq = p * p;
  const long scale = convention.p_exponent_scale;

  Rational lhs(0);
  if (convention.perm_set == PermSet::distinct_rearrangements) {
    QWord word = sorted;
    do {
      lhs += rational_pow(p, scale * inversion_count(word.letters));
    } while (std::next_permutation(word.letters.begin(), word.letters.end()));
  } else {
    std::vector<int> sigma(static_cast<std::size_t>(N));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      lhs += rational_pow(p, scale * inversion_count(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  Rational rhs = q_bracket_factorial_exact(N, p_sq);
  for (int nk : profile) rhs /= q_bracket_factorial_exact(nk, p_sq);

  report.lhs = to_double(lhs);
  report.rhs = to_double(rhs);
  report.pass = lhs == rhs;
  if (!report.pass) {
    std::ostringstream os;
    os << "sum " << lhs << " != " << rhs << " at p = " << p;
    report.note = os.str();
  }
  return report;
}

namespace {

std::vector<QWord> all_words(int n_max, int alphabet) {
  std::vector<QWord> out;
  for (int N = 1; N <= n_max; ++N) {
    std::vector<int> letters(static_cast<std::size_t>(N), 1);
    for (;;) {
      out.push_back(QWord{letters});
      int i = N - 1;
      while (i >= 0) {
        if (letters[static_cast<std::size_t>(i)] < alphabet) {
          ++letters[static_cast<std::size_t>(i)];
          break;
        }
        letters[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
    }
  }
  return out;
}

void enumerate_profiles(int parts, int total, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int head = 0; head <= total; ++head) {
    current.push_back(head);
    enumerate_profiles(parts - 1, total - head, current, out);
    current.pop_back();
  }
}

std::string word_string(const QWord& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.letters[i]);
  }
  return s + ")";
}

}  // namespace

ResolveReport resolve_convention(int n_max, int alphabet_max,
                                 std::span<const DeformationParams> grid) {
  if (n_max < 2 || alphabet_max < 2)
    throw argument_error("resolve_convention: probe bounds too small to discriminate");
  ResolveReport report;
  const std::vector<QWord> words = all_words(n_max, alphabet_max);
  report.words_probed = static_cast<long>(words.size());

  std::vector<std::vector<int>> profiles;
  for (int N = 1; N <= n_max; ++N) {
    std::vector<int> current;
    enumerate_profiles(alphabet_max, N, current, profiles);
  }

  for (const Convention& conv : all_conventions()) {
    // The three requirements are probed independently so the evidence for a
    // rejected convention names a counterexample of every failing kind.
    std::string exchange_fail, norm_fail, identity_fail;
    for (const DeformationParams& params : grid) {
      // (a) exchange property on every adjacent position of every word
      for (const QWord& w : words) {
        if (!exchange_fail.empty()) break;
        for (int k = 1; k < w.size(); ++k) {
          ExchangeReport ex = exchange_check(w, k, params, conv);
          if (!ex.exact) {
            exchange_fail = "exchange fails on word " + word_string(w) + " at position " +
                            std::to_string(k) + " (p = " + std::to_string(params.p) + ")";
            break;
          }
        }
      }
      // (b) unit norm of every built state
      if (norm_fail.empty()) {
        for (const QWord& w : words) {
          QSymState state = build_qsym_state(w, params, conv);
          ExactScalar n2 = norm_squared_exact(state, params.p_rational());
          if (!((n2 - ExactScalar::one()).is_zero())) {
            norm_fail = "norm != 1 on word " + word_string(w) +
                        " (p = " + std::to_string(params.p) + ")";
            break;
          }
        }
      }
      // (c) the permutation-sum identity at the convention's scale
      if (identity_fail.empty()) {
        for (const std::vector<int>& profile : profiles) {
          IdentityReport id = multinomial_identity_check(profile, params, conv);
          if (!id.pass) {
            identity_fail = "identity fails on profile " + word_string(QWord{profile}) + ": " +
                            id.note;
            break;
          }
        }
      }
    }
    ConventionVerdict verdict{conv, true, ""};
    for (const std::string* fail : {&exchange_fail, &norm_fail, &identity_fail}) {
      if (fail->empty()) continue;
      verdict.satisfies = false;
      if (!verdict.counterexample.empty()) verdict.counterexample += "; ";
      verdict.counterexample += *fail;
    }
    if (verdict.satisfies && !report.resolved) report.resolved = conv;
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace pqosc
