#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <type_traits>
#include <vector>

#include "pqosc/amplitude.hpp"
#include "pqosc/exact_scalar.hpp"
#include "pqosc/qnumbers.hpp"

namespace pqosc {

// Occupation vector (n_1, ..., n_n); the map ordering gives canonical
// lexicographic iteration, so reports are deterministic.
struct Occupation {
  std::vector<int> n;

  int total() const {
    int t = 0;
    for (int v : n) t += v;
    return t;
  }
  friend auto operator<=>(const Occupation&, const Occupation&) = default;
};

// Signs of the q-exponents in the two ladder lines. The defaults realize the
// representation; flipping either sign is a diagnostic mutation that must
// break at least one verified relation.
struct LadderPhases {
  int annihilation_sign = +1;
  int creation_sign = -1;
};

struct ModeConfig {
  int n_modes = 1;
  std::vector<int> cutoff;  // per-mode maximum occupation
  DeformationParams params;
  LadderPhases phases;

  void validate() const {
    if (n_modes < 1) throw argument_error("ModeConfig: n_modes must be >= 1");
    if (static_cast<int>(cutoff.size()) != n_modes)
      throw argument_error("ModeConfig: one cutoff per mode required");
    for (int c : cutoff)
      if (c < 1) throw argument_error("ModeConfig: every cutoff must be >= 1");
    params.validate();
  }

  static ModeConfig uniform(int n_modes, int cutoff, DeformationParams params) {
    ModeConfig c{n_modes, std::vector<int>(static_cast<std::size_t>(n_modes), cutoff),
                 std::move(params), {}};
    c.validate();
    return c;
  }
};

// Arithmetic mode for double-precision amplitudes with formally graded
// q-powers.
struct NumericMode {
  using Amp = PhasedComplex;
  using Scalar = double;

  static Amp unit() { return PhasedComplex::one(); }
  static Scalar bracket(long n, const DeformationParams& d) {
    if (d.classical_limit) return static_cast<double>(n);
    return q_bracket(static_cast<double>(n), d.p);
  }
  static Scalar sub_eigenvalue(long n, const DeformationParams& d) {
    return bracket(n, d) - d.nu();
  }
  // Coefficient (1-p)^k / (1-p^k) of the ladder expansion of the number
  // operator; its p -> 1 limit is 1 for k = 1 and 0 beyond.
  static Scalar ladder_series_coeff(long k, const DeformationParams& d) {
    if (d.classical_limit) return k == 1 ? 1.0 : 0.0;
    return std::pow(1.0 - d.p, static_cast<double>(k)) /
           (1.0 - std::pow(d.p, static_cast<double>(k)));
  }
  static Scalar from_rational(const Rational& r) { return to_double(r); }
};

// Arithmetic mode in which an amplitude is an exact sum of
// rational * sqrt(rational) * q^integer terms; requires params.p_exact.
struct ExactMode {
  using Amp = ExactScalar;
  using Scalar = Rational;

  static Amp unit() { return ExactScalar::one(); }
  static Scalar bracket(long n, const DeformationParams& d) {
    return q_bracket_exact(n, d.p_rational());
  }
  static Scalar sub_eigenvalue(long n, const DeformationParams& d) {
    return bracket(n, d) - d.nu_exact();
  }
  static Scalar ladder_series_coeff(long k, const DeformationParams& d) {
    const Rational& p = d.p_rational();
    if (p == 1) return k == 1 ? Rational(1) : Rational(0);
    return rational_pow(Rational(1) - p, k) / (Rational(1) - rational_pow(p, k));
  }
  static Scalar from_rational(const Rational& r) { return r; }
};

// Sparse vector over the truncated Fock basis. Amplitudes of magnitude
// exactly zero are pruned on write; overflow is sticky and marks that a
// creation crossed a cutoff somewhere in the evaluation tree.
template <class M>
struct FockVector {
  using Amp = typename M::Amp;

  std::map<Occupation, Amp> amplitudes;
  bool overflow = false;

  void add(const Occupation& occ, Amp a) {
    if (a.is_zero()) return;
    auto it = amplitudes.find(occ);
    if (it == amplitudes.end()) {
      amplitudes.emplace(occ, std::move(a));
    } else {
      it->second += a;
      if (it->second.is_zero()) amplitudes.erase(it);
    }
  }

  bool is_zero() const { return amplitudes.empty(); }

  double norm(const DeformationParams& d) const {
    double acc = 0.0;
    for (const auto& [occ, amp] : amplitudes) {
      double m = amp.realize_abs(d.theta);
      acc += m * m;
    }
    return std::sqrt(acc);
  }

};

template <class M>
FockVector<M> vacuum(const ModeConfig& config) {
  FockVector<M> v;
  v.add(Occupation{std::vector<int>(static_cast<std::size_t>(config.n_modes), 0)}, M::unit());
  return v;
}

namespace detail {

// Exponent of the q-phase attached to a ladder action on mode i (1-based):
// sum of the occupations of the higher modes.
inline long phase_sum_above(const Occupation& occ, int mode) {
  long s = 0;
  for (std::size_t k = static_cast<std::size_t>(mode); k < occ.n.size(); ++k) s += occ.n[k];
  return s;
}

inline void require_mode(int mode, const ModeConfig& config) {
  if (mode < 1 || mode > config.n_modes)
    throw argument_error("mode index out of range: " + std::to_string(mode));
}

}  // namespace detail

// a_i: removes one quantum from mode i with coefficient sqrt([n_i]) and phase
// q^{+sum_{k>i} n_k}. Components with n_i = 0 are annihilated.
template <class M>
FockVector<M> apply_annihilation(int mode, const FockVector<M>& v, const ModeConfig& config) {
  detail::require_mode(mode, config);
  FockVector<M> out;
  out.overflow = v.overflow;
  for (const auto& [occ, amp] : v.amplitudes) {
    const int n = occ.n[static_cast<std::size_t>(mode - 1)];
    if (n == 0) continue;
    Occupation target = occ;
    --target.n[static_cast<std::size_t>(mode - 1)];
    typename M::Amp a = amp;
    a.mul_sqrt(M::bracket(n, config.params));
    QPhase phase{config.phases.annihilation_sign * detail::phase_sum_above(occ, mode)};
    a.mul_qpow(phase.exponent);
    out.add(target, std::move(a));
  }
  return out;
}

// a†_i: adds one quantum to mode i with coefficient sqrt([n_i + 1]) and phase
// q^{-sum_{k>i} n_k}. Components that would cross the cutoff are dropped and
// the overflow flag is set.
template <class M>
FockVector<M> apply_creation(int mode, const FockVector<M>& v, const ModeConfig& config) {
  detail::require_mode(mode, config);
  FockVector<M> out;
  out.overflow = v.overflow;
  for (const auto& [occ, amp] : v.amplitudes) {
    const int n = occ.n[static_cast<std::size_t>(mode - 1)];
    if (n + 1 > config.cutoff[static_cast<std::size_t>(mode - 1)]) {
      out.overflow = true;
      continue;
    }
    Occupation target = occ;
    ++target.n[static_cast<std::size_t>(mode - 1)];
    typename M::Amp a = amp;
    a.mul_sqrt(M::bracket(n + 1, config.params));
    QPhase phase{config.phases.creation_sign * detail::phase_sum_above(occ, mode)};
    a.mul_qpow(phase.exponent);
    out.add(target, std::move(a));
  }
  return out;
}

// N_i: diagonal multiplication by the occupation of mode i.
template <class M>
FockVector<M> apply_number(int mode, const FockVector<M>& v, const ModeConfig& config) {
  detail::require_mode(mode, config);
  FockVector<M> out;
  out.overflow = v.overflow;
  for (const auto& [occ, amp] : v.amplitudes) {
    const int n = occ.n[static_cast<std::size_t>(mode - 1)];
    if (n == 0) continue;
    typename M::Amp a = amp;
    a.mul_long(n);
    out.add(occ, std::move(a));
  }
  return out;
}

// H_i = a†_i a_i - nu: diagonal with eigenvalue [n_i] - nu = -p^{n_i}/(1-p).
template <class M>
FockVector<M> apply_subhamiltonian(int mode, const FockVector<M>& v, const ModeConfig& config) {
  detail::require_mode(mode, config);
  if (config.params.p == 1.0)
    throw domain_error("subhamiltonian is undefined at p = 1 (nu diverges)");
  FockVector<M> out;
  out.overflow = v.overflow;
  for (const auto& [occ, amp] : v.amplitudes) {
    const int n = occ.n[static_cast<std::size_t>(mode - 1)];
    typename M::Amp a = amp;
    auto eig = M::sub_eigenvalue(n, config.params);
    if constexpr (std::is_same_v<typename M::Scalar, Rational>) {
      a.mul_rational(eig);
    } else {
      a.mul_complex(eig);
    }
    out.add(occ, std::move(a));
  }
  return out;
}

// Unit basis ket built literally as the normalized creation-operator string
// (a†_n)^{n_n} ... (a†_1)^{n_1} |0> / sqrt([n_n]! ... [n_1]!); the fill order
// leaves no residual q-phase.
template <class M>
FockVector<M> basis_state(const Occupation& occ, const ModeConfig& config) {
  if (static_cast<int>(occ.n.size()) != config.n_modes)
    throw argument_error("basis_state: occupation length mismatch");
  for (int i = 0; i < config.n_modes; ++i) {
    if (occ.n[static_cast<std::size_t>(i)] < 0 ||
        occ.n[static_cast<std::size_t>(i)] > config.cutoff[static_cast<std::size_t>(i)])
      throw argument_error("basis_state: occupation outside the cutoff");
  }
  FockVector<M> v = vacuum<M>(config);
  for (int mode = 1; mode <= config.n_modes; ++mode)
    for (int k = 0; k < occ.n[static_cast<std::size_t>(mode - 1)]; ++k)
      v = apply_creation(mode, v, config);
  // Divide by sqrt(prod [n_k]!) to normalize.
  if constexpr (std::is_same_v<M, ExactMode>) {
    Rational prod(1);
    for (int i = 0; i < config.n_modes; ++i)
      prod *= q_bracket_factorial_exact(occ.n[static_cast<std::size_t>(i)],
                                        config.params.p_rational());
    FockVector<M> out;
    out.overflow = v.overflow;
    for (auto& [o, amp] : v.amplitudes) {
      ExactScalar a = amp;
      a.mul_sqrt(Rational(1) / prod);
      out.add(o, std::move(a));
    }
    return out;
  } else {
    double prod = 1.0;
    for (int i = 0; i < config.n_modes; ++i)
      prod *= q_bracket_factorial(occ.n[static_cast<std::size_t>(i)],
                                  config.params.classical_limit ? 1.0 : config.params.p);
    FockVector<M> out;
    out.overflow = v.overflow;
    for (auto& [o, amp] : v.amplitudes) {
      PhasedComplex a = amp;
      a.mul_sqrt(1.0 / prod);
      out.add(o, std::move(a));
    }
    return out;
  }
}

// N_i rebuilt from the terminating ladder series
// sum_k (1-p)^k/(1-p^k) (a†_i)^k a_i^k; reproduces apply_number on every
// basis component.
template <class M>
FockVector<M> number_from_ladder(int mode, const FockVector<M>& v, const ModeConfig& config) {
  detail::require_mode(mode, config);
  int max_n = 0;
  for (const auto& [occ, amp] : v.amplitudes)
    max_n = std::max(max_n, occ.n[static_cast<std::size_t>(mode - 1)]);

  FockVector<M> out;
  out.overflow = v.overflow;
  FockVector<M> lowered = v;  // a_i^k v, built incrementally
  for (long k = 1; k <= max_n; ++k) {
    lowered = apply_annihilation(mode, lowered, config);
    if (lowered.is_zero()) break;
    FockVector<M> term = lowered;
    for (long j = 0; j < k; ++j) term = apply_creation(mode, term, config);
    auto coeff = M::ladder_series_coeff(k, config.params);
    for (auto& [occ, amp] : term.amplitudes) {
      typename M::Amp a = amp;
      if constexpr (std::is_same_v<typename M::Scalar, Rational>) {
        a.mul_rational(coeff);
      } else {
        a.mul_complex(coeff);
      }
      out.add(occ, std::move(a));
    }
    out.overflow = out.overflow || term.overflow;
  }
  return out;
}

// <v|w>: conjugate-linear in the first argument.
template <class M>
typename M::Amp inner_product(const FockVector<M>& v, const FockVector<M>& w) {
  typename M::Amp acc;
  for (const auto& [occ, amp] : v.amplitudes) {
    auto it = w.amplitudes.find(occ);
    if (it == w.amplitudes.end()) continue;
    acc += amp.conjugated() * it->second;
  }
  return acc;
}

// All occupations within the cutoffs, in lexicographic order.
std::vector<Occupation> enumerate_occupations(const ModeConfig& config);

// Occupations with n_i + margin <= cutoff_i for every mode.
std::vector<Occupation> interior_occupations(const ModeConfig& config, int margin);

}  // namespace pqosc
