#pragma once

#include <map>
#include <span>
#include <vector>

#include "pqosc/amplitude.hpp"
#include "pqosc/qnumbers.hpp"

namespace pqosc {

// Positive-energy representation data: 0 < p < 1, one positive lambda per
// mode, nu = 1/(1-p), and a shared symmetric lattice window. On the lattice
// basis |lambda_1 p^{m_1}, ...> the subhamiltonians are diagonal with the
// strictly positive eigenvalues lambda_i p^{m_i}, and a†_i lowers the energy.
struct PositiveEnergyConfig {
  DeformationParams params;
  std::vector<double> lambdas;
  std::vector<Rational> lambdas_exact;
  int window_lo = -10;
  int window_hi = 10;
  // Whether the eigenvalue parameters z_k of this family obey the same
  // exchange relations as the lowering-eigenstate ones (the multimode phase
  // bookkeeping needs this; switching it off makes the eigenproblem check
  // fail on more than one mode, which is the point of keeping it a knob).
  bool z_exchange = true;

  int n_modes() const { return static_cast<int>(lambdas.size()); }
  double nu() const { return params.nu(); }
  Rational nu_exact() const { return params.nu_exact(); }
  void validate() const;

  static PositiveEnergyConfig make(DeformationParams params, std::vector<Rational> lambdas,
                                   int window_halfwidth);
};

struct LatticeLabel {
  std::vector<int> m;
  friend auto operator<=>(const LatticeLabel&, const LatticeLabel&) = default;
};

struct LatticeVector {
  std::map<LatticeLabel, PhasedComplex> amplitudes;
  bool window_clipped = false;

  void add(const LatticeLabel& label, PhasedComplex a) {
    if (a.is_zero()) return;
    auto it = amplitudes.find(label);
    if (it == amplitudes.end()) {
      amplitudes.emplace(label, std::move(a));
    } else {
      it->second += a;
      if (it->second.is_zero()) amplitudes.erase(it);
    }
  }
  bool is_zero() const { return amplitudes.empty(); }
  double norm(double theta) const;
};

enum class PositiveLadder { creation, annihilation, hamiltonian };

// Creation maps m_i -> m_i + 1 with coefficient sqrt(lambda_i p^{m_i+1} + nu)
// and phase q^{-sum_{k>i} m_k}; annihilation maps m_i -> m_i - 1 with
// coefficient sqrt(lambda_i p^{m_i} + nu) and phase q^{+sum_{k>i} m_k};
// the hamiltonian is diagonal with eigenvalue lambda_i p^{m_i}. Components
// leaving the window are dropped and flagged.
LatticeVector apply_positive_ladder(PositiveLadder kind, int mode, const LatticeVector& v,
                                    const PositiveEnergyConfig& config);

double lattice_energy(const PositiveEnergyConfig& config, int mode, int m);

// Raising-eigenstate family over the bilateral window. The basis label of the
// series index n = (n_1,...,n_n) is m = -n, the attached ordered Laurent
// monomial is z_n^{n_n}...z_1^{n_1} with q-power zero, and the scalar
// coefficient is the positive square root of
//   c_i(n)^2 = p^{n(n-1)/2} lambda_i^{-n} / (-nu/lambda_i; p)_n
// per mode, all exact rationals.
struct PositiveFamily {
  PositiveEnergyConfig config;
  std::vector<std::vector<Rational>> coeff_sq;  // [mode][n - window_lo]

  const Rational& coeff_sq_at(int mode, int n) const;
};

PositiveFamily build_positive_coherent(const PositiveEnergyConfig& config);

// Smallest symmetric half-width for which both boundary terms of every
// mode's magnitude series c(n)^2 r^n fall below the threshold relative to
// the series sum. Requires r_k > nu (both tails must decay).
int suggest_window(const DeformationParams& params, std::span<const double> lambdas,
                   std::span<const double> r, double threshold = 1e-14);

// Normalization constant C from C^{-2} = prod_k psi01(-nu/lambda_k; p,
// -r_k/lambda_k); every factor is checked positive (a failure would signal a
// broken shifted-factorial convention). Requires r_k > nu for convergence.
double positive_normalization(const PositiveEnergyConfig& config, std::span<const double> r);

// Direct coefficient-magnitude-squared sum of the built family (the per-mode
// windowed sums multiplied), the independent route to C^{-2}.
double direct_magnitude_sum(const PositiveFamily& family, std::span<const double> r);

struct LatticeEigenReport {
  int mode = 0;
  long compared = 0;
  bool exact_match = false;
  double boundary_residue = 0.0;
};

// Verifies a†_i|family> = z_i|family> label by label over the window box:
// the mode-i coefficient relation, the q-exponents of both routes, and the
// monomial exponents must agree exactly; window-edge components are reported
// as boundary residue.
LatticeEigenReport check_raising_eigenproblem(const PositiveFamily& family, int mode,
                                              std::span<const double> r);

}  // namespace pqosc
