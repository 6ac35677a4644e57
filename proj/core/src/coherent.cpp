#include "pqosc/coherent.hpp"

#include <cmath>

namespace pqosc {

namespace {

// Swap phase for the adjacent pair (x, y) -> (y, x), or no swap when the pair
// is already canonical. Returns {swap_needed, qpow_delta}.
std::pair<bool, long> swap_rule(const ZSymbol& x, const ZSymbol& y) {
  if (x.star && y.star) {
    if (x.mode < y.mode) return {true, -1};  // z*_i z*_j = q^{-1} z*_j z*_i
    return {false, 0};
  }
  if (!x.star && !y.star) {
    if (x.mode < y.mode) return {true, +1};  // z_i z_j = q z_j z_i
    return {false, 0};
  }
  if (!x.star && y.star) {
    // z before z*: always out of order; z_j z*_i = q^{-1} z*_i z_j unless i = j.
    return {true, x.mode == y.mode ? 0 : -1};
  }
  return {false, 0};  // z* before z is canonical
}

}  // namespace

OrderedZ normal_order(std::span<const ZSymbol> word, int n_modes) {
  std::vector<ZSymbol> w(word.begin(), word.end());
  for (const ZSymbol& s : w)
    if (s.mode < 1 || s.mode > n_modes)
      throw argument_error("normal_order: mode index out of range");

  long qpow = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      auto [swap, delta] = swap_rule(w[k], w[k + 1]);
      if (swap) {
        std::swap(w[k], w[k + 1]);
        qpow += delta;
        changed = true;
      }
    }
  }

  ZMonomial mono{std::vector<int>(static_cast<std::size_t>(n_modes), 0),
                 std::vector<int>(static_cast<std::size_t>(n_modes), 0)};
  for (const ZSymbol& s : w) {
    if (s.star)
      ++mono.zstar_pow[static_cast<std::size_t>(s.mode - 1)];
    else
      ++mono.z_pow[static_cast<std::size_t>(s.mode - 1)];
  }
  return {std::move(mono), qpow};
}

ZPolynomial ZPolynomial::one(int n_modes) {
  ZPolynomial p;
  p.add(ZMonomial{std::vector<int>(static_cast<std::size_t>(n_modes), 0),
                  std::vector<int>(static_cast<std::size_t>(n_modes), 0)},
        ExactScalar::one());
  return p;
}

void ZPolynomial::add(const ZMonomial& mono, const ExactScalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& o) {
  for (const auto& [mono, coeff] : o.terms_) add(mono, coeff);
  return *this;
}

ZPolynomial ZPolynomial::left_multiply_z(int mode) const {
  ZPolynomial out;
  for (const auto& [mono, coeff] : terms_) {
    long qshift = 0;
    for (std::size_t j = static_cast<std::size_t>(mode); j < mono.z_pow.size(); ++j)
      qshift += mono.z_pow[j];  // crossing z_j with j > i
    for (std::size_t j = 0; j < mono.zstar_pow.size(); ++j)
      if (j != static_cast<std::size_t>(mode - 1)) qshift -= mono.zstar_pow[j];  // crossing z*_j
    ZMonomial m = mono;
    ++m.z_pow[static_cast<std::size_t>(mode - 1)];
    ExactScalar c = coeff;
    c.mul_qpow(qshift);
    out.add(m, c);
  }
  return out;
}

ZPolynomial& ZPolynomial::mul_scalar(const ExactScalar& s) {
  std::map<ZMonomial, ExactScalar> old;
  old.swap(terms_);
  for (const auto& [mono, coeff] : old) add(mono, coeff * s);
  return *this;
}

ZPolynomial& ZPolynomial::mul_sqrt(const Rational& radicand) {
  std::map<ZMonomial, ExactScalar> old;
  old.swap(terms_);
  for (auto& [mono, coeff] : old) {
    ExactScalar c = coeff;
    c.mul_sqrt(radicand);
    add(mono, c);
  }
  return *this;
}

ZPolynomial& ZPolynomial::mul_rational(const Rational& c) {
  std::map<ZMonomial, ExactScalar> old;
  old.swap(terms_);
  for (auto& [mono, coeff] : old) {
    ExactScalar s = coeff;
    s.mul_rational(c);
    add(mono, s);
  }
  return *this;
}

ZPolynomial& ZPolynomial::mul_qpow(long k) {
  if (k == 0) return *this;
  for (auto& [mono, coeff] : terms_) coeff.mul_qpow(k);
  return *this;
}

namespace {

void validate_coherent_inputs(const ModeConfig& config, std::span<const double> r,
                              int total_cutoff) {
  config.validate();
  if (static_cast<int>(r.size()) != config.n_modes)
    throw argument_error("coherent state: one magnitude |z_i|^2 per mode required");
  if (total_cutoff < 0) throw argument_error("coherent state: cutoff must be non-negative");
  const double p = config.params.p;
  if (p < 1.0) {
    const double radius = 1.0 / (1.0 - p);
    for (double ri : r)
      if (!(ri < radius))
        throw domain_error("coherent state: |z_i|^2 outside the e_p convergence disc");
  }
  for (double ri : r)
    if (ri < 0) throw argument_error("coherent state: magnitudes must be non-negative");
}

std::vector<Occupation> occupations_below_total(const ModeConfig& config, int total_cutoff) {
  std::vector<Occupation> out;
  for (const Occupation& occ : enumerate_occupations(config))
    if (occ.total() <= total_cutoff) out.push_back(occ);
  return out;
}

ZMonomial pure_z_monomial(const Occupation& occ) {
  return ZMonomial{occ.n, std::vector<int>(occ.n.size(), 0)};
}

}  // namespace

FormalCoherentState build_coherent_state(const ModeConfig& config, std::span<const double> r,
                                         CoherentMethod method, int total_cutoff) {
  validate_coherent_inputs(config, r, total_cutoff);
  const Rational& p = config.params.p_rational();

  FormalCoherentState state{config, total_cutoff, {r.begin(), r.end()}, {}};

  if (method == CoherentMethod::series) {
    int max_cutoff = 0;
    for (int c : config.cutoff) max_cutoff = std::max(max_cutoff, c);
    std::vector<Rational> factorial(static_cast<std::size_t>(max_cutoff) + 1, Rational(1));
    for (int k = 1; k <= max_cutoff; ++k)
      factorial[static_cast<std::size_t>(k)] =
          factorial[static_cast<std::size_t>(k - 1)] * q_bracket_exact(k, p);
    for (const Occupation& occ : occupations_below_total(config, total_cutoff)) {
      Rational prod(1);
      for (int ni : occ.n) prod *= factorial[static_cast<std::size_t>(ni)];
      ZPolynomial poly;
      ExactScalar coeff = ExactScalar::from_sqrt(Rational(1) / prod);
      poly.add(pure_z_monomial(occ), coeff);
      state.amplitudes.emplace(occ, std::move(poly));
    }
    return state;
  }

  // Expand e_p(z_n a†_n) ... e_p(z_1 a†_1)|0...0> term by term: the rightmost
  // factor acts first, and z symbols commute with every mode operator.
  std::map<Occupation, ZPolynomial> current;
  current.emplace(Occupation{std::vector<int>(static_cast<std::size_t>(config.n_modes), 0)},
                  ZPolynomial::one(config.n_modes));
  for (int mode = 1; mode <= config.n_modes; ++mode) {
    std::map<Occupation, ZPolynomial> next;
    for (const auto& [occ, poly] : current) {
      const int base = occ.n[static_cast<std::size_t>(mode - 1)];
      ZPolynomial powered = poly;  // z_i^k (a†_i)^k poly / [k]!
      Rational factorial(1);
      for (int k = 0;; ++k) {
        Occupation target = occ;
        target.n[static_cast<std::size_t>(mode - 1)] = base + k;
        if (base + k > config.cutoff[static_cast<std::size_t>(mode - 1)] ||
            target.total() > total_cutoff)
          break;
        if (k > 0) {
          // One more creation: coefficient sqrt([base + k]) and phase
          // q^{-sum_{j>mode} n_j}; one more z_i from the left; one more [k]
          // in the factorial.
          long phase = 0;
          for (std::size_t j = static_cast<std::size_t>(mode); j < occ.n.size(); ++j)
            phase += occ.n[j];
          powered = powered.left_multiply_z(mode);
          powered.mul_sqrt(q_bracket_exact(base + k, p));
          powered.mul_qpow(config.phases.creation_sign * phase);
          factorial *= q_bracket_exact(k, p);
        }
        ZPolynomial term = powered;
        term.mul_rational(Rational(1) / factorial);
        auto [it, inserted] = next.try_emplace(target, term);
        if (!inserted) it->second += term;
      }
    }
    current.swap(next);
  }
  state.amplitudes = std::move(current);
  return state;
}

double coherent_normalization(const FormalCoherentState& state) {
  double prod = 1.0;
  for (double r : state.magnitudes) prod *= deformed_exp_real(r, state.config.params.p);
  return 1.0 / std::sqrt(prod);
}

double coherent_norm_residual(const FormalCoherentState& state) {
  const double theta = state.config.params.theta;
  double norm_sq = 0.0;
  for (const auto& [occ, poly] : state.amplitudes) {
    for (const auto& [mono, coeff] : poly.terms()) {
      double weight = 1.0;
      for (std::size_t i = 0; i < mono.z_pow.size(); ++i)
        weight *= std::pow(state.magnitudes[i], mono.z_pow[i] + mono.zstar_pow[i]);
      double mag = std::abs(coeff.realize(theta));
      norm_sq += mag * mag * weight;
    }
  }
  const double c = coherent_normalization(state);
  return std::abs(c * c * norm_sq - 1.0);
}

double coherent_truncation_allowance(const FormalCoherentState& state) {
  const double p = state.config.params.classical_limit ? 1.0 : state.config.params.p;
  const int n_modes = state.config.n_modes;
  const int start = state.total_cutoff / n_modes + 1;
  double allowance = 0.0;
  for (int i = 0; i < n_modes; ++i) {
    const double r = state.magnitudes[static_cast<std::size_t>(i)];
    // tail sum_{n >= start} r^n/[n]! of the per-mode magnitude series
    double term = 1.0, tail = 0.0;
    for (int n = 1; n < start + 4000; ++n) {
      term *= r / q_bracket(static_cast<double>(n), p);
      if (n >= start) {
        tail += term;
        if (term < 1e-300 || term < 1e-18 * tail) break;
      }
    }
    allowance += tail / deformed_exp_real(r, p);
  }
  return allowance;
}

CoherentEigenReport check_lowering_eigenproblem(const FormalCoherentState& state, int mode) {
  const ModeConfig& config = state.config;
  if (mode < 1 || mode > config.n_modes) throw argument_error("eigenproblem: bad mode index");
  const Rational& p = config.params.p_rational();

  // a_i |state>: each component with n_i >= 1 moves down one step.
  std::map<Occupation, ZPolynomial> lowered;
  for (const auto& [occ, poly] : state.amplitudes) {
    const int n = occ.n[static_cast<std::size_t>(mode - 1)];
    if (n == 0) continue;
    Occupation target = occ;
    --target.n[static_cast<std::size_t>(mode - 1)];
    long phase = 0;
    for (std::size_t j = static_cast<std::size_t>(mode); j < occ.n.size(); ++j) phase += occ.n[j];
    ZPolynomial contrib = poly;
    contrib.mul_sqrt(q_bracket_exact(n, p));
    contrib.mul_qpow(config.phases.annihilation_sign * phase);
    auto [it, inserted] = lowered.try_emplace(target, contrib);
    if (!inserted) it->second += contrib;
  }

  // z_i |state>: formal left multiplication amplitude by amplitude.
  std::map<Occupation, ZPolynomial> multiplied;
  for (const auto& [occ, poly] : state.amplitudes)
    multiplied.emplace(occ, poly.left_multiply_z(mode));

  CoherentEigenReport report;
  report.mode = mode;
  const double theta = config.params.theta;

  auto realized_magnitude = [&](const ZPolynomial& poly) {
    double acc = 0.0;
    for (const auto& [mono, coeff] : poly.terms()) {
      double weight = 1.0;
      for (std::size_t i = 0; i < mono.z_pow.size(); ++i)
        weight *= std::pow(state.magnitudes[i], 0.5 * (mono.z_pow[i] + mono.zstar_pow[i]));
      acc += std::abs(coeff.realize(theta)) * weight;
    }
    return acc;
  };

  bool all_equal = true;
  double max_mismatch = 0.0, boundary = 0.0;
  for (const auto& [occ, rhs] : multiplied) {
    const bool comparable =
        occ.total() + 1 <= state.total_cutoff &&
        occ.n[static_cast<std::size_t>(mode - 1)] + 1 <=
            config.cutoff[static_cast<std::size_t>(mode - 1)];
    if (!comparable) {
      boundary = std::max(boundary, realized_magnitude(rhs));
      continue;
    }
    ++report.compared;
    auto it = lowered.find(occ);
    if (it == lowered.end() || !(it->second == rhs)) {
      all_equal = false;
      ZPolynomial diff = rhs;
      if (it != lowered.end())
        for (const auto& [mono, coeff] : it->second.terms()) {
          ExactScalar neg = coeff;
          neg.mul_long(-1);
          diff.add(mono, neg);
        }
      max_mismatch = std::max(max_mismatch, realized_magnitude(diff));
    }
  }
  report.exact_match = all_equal;
  report.max_mismatch = max_mismatch;
  report.boundary_residue = boundary;
  return report;
}

}  // namespace pqosc
