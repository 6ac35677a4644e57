#include "pqosc/lattice.hpp"

#include <cmath>

namespace pqosc {

void PositiveEnergyConfig::validate() const {
  params.validate();
  if (!(params.p > 0 && params.p < 1))
    throw domain_error("positive-energy representation requires 0 < p < 1");
  if (lambdas.empty()) throw argument_error("at least one lambda required");
  if (lambdas_exact.size() != lambdas.size())
    throw argument_error("exact lambdas must match the double lambdas");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0) || lambdas_exact[i] <= 0)
      throw argument_error("every lambda must be positive");
    if (to_double(lambdas_exact[i]) != lambdas[i])
      throw argument_error("exact lambda disagrees with its double realization");
  }
  if (window_lo >= window_hi) throw argument_error("empty lattice window");
}

PositiveEnergyConfig PositiveEnergyConfig::make(DeformationParams params,
                                                std::vector<Rational> lambdas,
                                                int window_halfwidth) {
  PositiveEnergyConfig c;
  c.params = std::move(params);
  for (const Rational& l : lambdas) c.lambdas.push_back(to_double(l));
  c.lambdas_exact = std::move(lambdas);
  c.window_lo = -window_halfwidth;
  c.window_hi = window_halfwidth;
  c.validate();
  return c;
}

double LatticeVector::norm(double theta) const {
  double acc = 0.0;
  for (const auto& [label, amp] : amplitudes) {
    double m = amp.realize_abs(theta);
    acc += m * m;
  }
  return std::sqrt(acc);
}

namespace {

long phase_sum_above(const LatticeLabel& label, int mode) {
  long s = 0;
  for (std::size_t k = static_cast<std::size_t>(mode); k < label.m.size(); ++k) s += label.m[k];
  return s;
}

}  // namespace

double lattice_energy(const PositiveEnergyConfig& config, int mode, int m) {
  return config.lambdas[static_cast<std::size_t>(mode - 1)] *
         std::pow(config.params.p, static_cast<double>(m));
}

LatticeVector apply_positive_ladder(PositiveLadder kind, int mode, const LatticeVector& v,
                                    const PositiveEnergyConfig& config) {
  if (mode < 1 || mode > config.n_modes()) throw argument_error("lattice: bad mode index");
  const double p = config.params.p;
  const double nu = config.nu();
  const double lambda = config.lambdas[static_cast<std::size_t>(mode - 1)];

  LatticeVector out;
  out.window_clipped = v.window_clipped;
  for (const auto& [label, amp] : v.amplitudes) {
    const int m = label.m[static_cast<std::size_t>(mode - 1)];
    switch (kind) {
      case PositiveLadder::hamiltonian: {
        PhasedComplex a = amp;
        a.mul_complex(lambda * std::pow(p, m));
        out.add(label, std::move(a));
        break;
      }
      case PositiveLadder::creation: {
        if (m + 1 > config.window_hi) {
          out.window_clipped = true;
          break;
        }
        LatticeLabel target = label;
        ++target.m[static_cast<std::size_t>(mode - 1)];
        PhasedComplex a = amp;
        a.mul_sqrt(lambda * std::pow(p, m + 1) + nu);
        a.mul_qpow(-phase_sum_above(label, mode));
        out.add(target, std::move(a));
        break;
      }
      case PositiveLadder::annihilation: {
        if (m - 1 < config.window_lo) {
          out.window_clipped = true;
          break;
        }
        LatticeLabel target = label;
        --target.m[static_cast<std::size_t>(mode - 1)];
        PhasedComplex a = amp;
        a.mul_sqrt(lambda * std::pow(p, m) + nu);
        a.mul_qpow(phase_sum_above(label, mode));
        out.add(target, std::move(a));
        break;
      }
    }
  }
  return out;
}

const Rational& PositiveFamily::coeff_sq_at(int mode, int n) const {
  return coeff_sq[static_cast<std::size_t>(mode - 1)]
                 [static_cast<std::size_t>(n - config.window_lo)];
}

PositiveFamily build_positive_coherent(const PositiveEnergyConfig& config) {
  config.validate();
  const Rational& p = config.params.p_rational();
  const Rational nu = config.nu_exact();

  PositiveFamily family{config, {}};
  for (int mode = 1; mode <= config.n_modes(); ++mode) {
    const Rational& lambda = config.lambdas_exact[static_cast<std::size_t>(mode - 1)];
    const Rational a = -nu / lambda;
    std::vector<Rational> column;
    column.reserve(static_cast<std::size_t>(config.window_hi - config.window_lo + 1));
    for (int n = config.window_lo; n <= config.window_hi; ++n) {
      // p^{n(n-1)/2} lambda^{-n} / (a;p)_n; n(n-1) is always even.
      long half = static_cast<long>(n) * (n - 1) / 2;
      Rational c2 = rational_pow(p, half) * rational_pow(lambda, -n) /
                    q_pochhammer_exact(a, p, n);
      if (c2 <= 0)
        throw config_error("positive family: non-positive squared coefficient (convention bug)");
      column.push_back(std::move(c2));
    }
    family.coeff_sq.push_back(std::move(column));
  }
  return family;
}

int suggest_window(const DeformationParams& params, std::span<const double> lambdas,
                   std::span<const double> r, double threshold) {
  if (!(params.p > 0 && params.p < 1)) throw domain_error("suggest_window: requires 0 < p < 1");
  if (lambdas.size() != r.size()) throw argument_error("suggest_window: size mismatch");
  if (!(threshold > 0)) throw argument_error("suggest_window: threshold must be positive");
  const double p = params.p;
  const double nu = 1.0 / (1.0 - p);
  int window = 1;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const double lambda = lambdas[i];
    const double a = -nu / lambda;
    const double rl = r[i] / lambda;
    if (!(r[i] > nu))
      throw domain_error("suggest_window: requires r > nu for a two-sided decaying series");
    // magnitude-squared term ratios of c(n)^2 r^n from the shifted-factorial
    // recursion; both directions decay eventually (up superfast, down like
    // nu/r).
    double term = 1.0, sum = 1.0, pn = 1.0;
    int hi = 0;
    while (term > threshold * sum || hi < 1) {
      term *= pn * rl / (1.0 - a * pn);
      pn *= p;
      sum += term;
      if (++hi > 100000) throw domain_error("suggest_window: upper tail failed to decay");
    }
    term = 1.0;
    double pm = 1.0 / p;  // p^{n-1} at n = 0
    int lo = 0;
    while (term > threshold * sum || lo > -1) {
      term *= (1.0 - a * pm) / (pm * rl);
      pm /= p;
      sum += term;
      if (--lo < -100000) throw domain_error("suggest_window: lower tail failed to decay");
    }
    window = std::max({window, hi, -lo});
  }
  return window;
}

double positive_normalization(const PositiveEnergyConfig& config, std::span<const double> r) {
  config.validate();
  if (static_cast<int>(r.size()) != config.n_modes())
    throw argument_error("positive_normalization: one |z_k|^2 per mode required");
  const double nu = config.nu();
  double c_inv_sq = 1.0;
  for (int mode = 1; mode <= config.n_modes(); ++mode) {
    const double lambda = config.lambdas[static_cast<std::size_t>(mode - 1)];
    const double rk = r[static_cast<std::size_t>(mode - 1)];
    if (!(rk > 0)) throw argument_error("positive_normalization: magnitudes must be positive");
    double psi = bilateral_psi01(-nu / lambda, config.params.p, -rk / lambda);
    if (!(psi > 0))
      throw config_error("positive_normalization: psi01 factor is not positive (convention bug)");
    c_inv_sq *= psi;
  }
  return 1.0 / std::sqrt(c_inv_sq);
}

double direct_magnitude_sum(const PositiveFamily& family, std::span<const double> r) {
  const PositiveEnergyConfig& config = family.config;
  if (static_cast<int>(r.size()) != config.n_modes())
    throw argument_error("direct_magnitude_sum: one |z_k|^2 per mode required");
  double prod = 1.0;
  for (int mode = 1; mode <= config.n_modes(); ++mode) {
    double acc = 0.0;
    for (int n = config.window_lo; n <= config.window_hi; ++n)
      acc += to_double(family.coeff_sq_at(mode, n)) *
             std::pow(r[static_cast<std::size_t>(mode - 1)], static_cast<double>(n));
    prod *= acc;
  }
  return prod;
}

LatticeEigenReport check_raising_eigenproblem(const PositiveFamily& family, int mode,
                                              std::span<const double> r) {
  const PositiveEnergyConfig& config = family.config;
  if (mode < 1 || mode > config.n_modes()) throw argument_error("eigenproblem: bad mode index");
  const Rational& p = config.params.p_rational();
  const Rational nu = config.nu_exact();
  const Rational& lambda = config.lambdas_exact[static_cast<std::size_t>(mode - 1)];
  const int lo = config.window_lo, hi = config.window_hi;
  const int n_modes = config.n_modes();

  LatticeEigenReport report;
  report.mode = mode;

  // Box sweep over all series indices; both routes produce the monomial
  // z^{n + e_i} on the ket with series index n, so the comparison reduces to
  // the mode-i coefficient relation and the two q-exponent computations.
  std::vector<int> n(static_cast<std::size_t>(n_modes), lo);
  bool all_equal = true;
  for (;;) {
    const int ni = n[static_cast<std::size_t>(mode - 1)];
    if (ni + 1 <= hi) {
      // Raising route: source index n + e_i, lattice label m = -(n + e_i);
      // coefficient sqrt(lambda p^{m_i + 1} + nu) with m_i + 1 = -n_i, and
      // creation phase exponent -sum_{k>i} m_k.
      Rational lhs_sq = (lambda * rational_pow(p, -ni) + nu) * family.coeff_sq_at(mode, ni + 1);
      long m_sum_above = 0;
      for (std::size_t k = static_cast<std::size_t>(mode); k < n.size(); ++k) m_sum_above += -n[k];
      long lhs_qpow = -m_sum_above;

      // Multiplication route: z_i crosses z_k^{n_k} for k > i (no phase when
      // the z parameters are taken commuting).
      const Rational& rhs_sq = family.coeff_sq_at(mode, ni);
      long rhs_qpow = 0;
      if (config.z_exchange)
        for (std::size_t k = static_cast<std::size_t>(mode); k < n.size(); ++k) rhs_qpow += n[k];

      ++report.compared;
      if (lhs_sq != rhs_sq || lhs_qpow != rhs_qpow) all_equal = false;
    }

    int i = n_modes - 1;
    while (i >= 0) {
      if (n[static_cast<std::size_t>(i)] < hi) {
        ++n[static_cast<std::size_t>(i)];
        break;
      }
      n[static_cast<std::size_t>(i)] = lo;
      --i;
    }
    if (i < 0) break;
  }
  report.exact_match = all_equal;

  // Window-edge residue: the multiplication route keeps a component at
  // n_i = hi that the raising route cannot reach, and the raising route
  // produces one at n_i = lo - 1 outside the family. Both are tail terms of
  // the magnitude series.
  const double rd = r[static_cast<std::size_t>(mode - 1)];
  auto mode_magnitude = [&](int m, int nn) {
    return std::sqrt(to_double(family.coeff_sq_at(m, nn)) *
                     std::pow(r[static_cast<std::size_t>(m - 1)], static_cast<double>(nn)));
  };
  double other = 1.0;
  for (int k = 1; k <= n_modes; ++k) {
    if (k == mode) continue;
    double best = 0.0;
    for (int nn = lo; nn <= hi; ++nn) best = std::max(best, mode_magnitude(k, nn));
    other *= best;
  }
  const double upper = mode_magnitude(mode, hi) * std::sqrt(rd);
  const double lower_sq = to_double((lambda * rational_pow(p, -(lo - 1)) + nu) *
                                    family.coeff_sq_at(mode, lo)) *
                          std::pow(rd, static_cast<double>(lo - 1)) * rd;
  report.boundary_residue = other * std::max(upper, std::sqrt(lower_sq));
  return report;
}

}  // namespace pqosc
