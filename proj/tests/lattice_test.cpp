#include <doctest.h>

#include <cmath>

#include "pqosc/lattice.hpp"

using namespace pqosc;

namespace {

PositiveEnergyConfig make_config(const char* p, double theta, std::vector<const char*> lambdas,
                                 int window) {
  std::vector<Rational> ls;
  for (const char* l : lambdas) ls.push_back(parse_rational(l));
  return PositiveEnergyConfig::make(DeformationParams::from_text(p, theta), std::move(ls), window);
}

LatticeVector unit(const LatticeLabel& label) {
  LatticeVector v;
  v.add(label, PhasedComplex::one());
  return v;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("configuration guards") {
    CHECK_THROWS_AS(make_config("3/2", 0.0, {"1"}, 10), pqosc::domain_error);
    CHECK_THROWS_AS(make_config("1/2", 0.0, {"-1"}, 10), argument_error);
  }

  TEST_CASE("ladder coefficients and phases") {
    auto config = make_config("1/2", 0.3, {"1", "2"}, 10);
    CHECK(config.nu() == doctest::Approx(2.0));

    // creation on m = 0: sqrt(lambda p + nu) = sqrt(2.5)
    auto raised = apply_positive_ladder(PositiveLadder::creation, 1, unit(LatticeLabel{{0, 0}}),
                                        config);
    const PhasedComplex& amp = raised.amplitudes.at(LatticeLabel{{1, 0}});
    CHECK(std::abs(amp.realize(config.params.theta)) == doctest::Approx(std::sqrt(2.5)));

    // hamiltonian eigenvalue lambda p^m
    auto ham = apply_positive_ladder(PositiveLadder::hamiltonian, 2, unit(LatticeLabel{{0, 3}}),
                                     config);
    CHECK(ham.amplitudes.at(LatticeLabel{{0, 3}}).realize(0.3).real() ==
          doctest::Approx(2.0 * std::pow(0.5, 3)));

    // phases pick up the exact exponent sum of the higher modes
    auto cross = apply_positive_ladder(PositiveLadder::creation, 1, unit(LatticeLabel{{0, 3}}),
                                       config);
    CHECK(cross.amplitudes.at(LatticeLabel{{1, 3}}).min_qpow() == -3);
    auto lowered = apply_positive_ladder(PositiveLadder::annihilation, 1,
                                         unit(LatticeLabel{{0, -4}}), config);
    CHECK(lowered.amplitudes.at(LatticeLabel{{-1, -4}}).min_qpow() == -4);
  }

  TEST_CASE("round trips and the single-mode p-commutator") {
    auto config = make_config("1/2", 0.2, {"1"}, 12);
    const double nu = config.nu();
    for (int m : {-3, 0, 5}) {
      // a† a multiplies by lambda p^m + nu (H + nu route)
      auto v = unit(LatticeLabel{{m}});
      auto down_up = apply_positive_ladder(
          PositiveLadder::creation, 1,
          apply_positive_ladder(PositiveLadder::annihilation, 1, v, config), config);
      double expected = 1.0 * std::pow(0.5, m) + nu;
      CHECK(down_up.amplitudes.at(LatticeLabel{{m}}).realize(0.2).real() ==
            doctest::Approx(expected).epsilon(1e-14));

      // (a a† - p a† a) v = v
      auto up_down = apply_positive_ladder(
          PositiveLadder::annihilation, 1,
          apply_positive_ladder(PositiveLadder::creation, 1, v, config), config);
      double commutator = up_down.amplitudes.at(LatticeLabel{{m}}).realize(0.2).real() -
                          0.5 * down_up.amplitudes.at(LatticeLabel{{m}}).realize(0.2).real();
      CHECK(commutator == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  TEST_CASE("creation lowers the energy; window exits are clipped") {
    auto config = make_config("1/2", 0.0, {"1"}, 4);
    for (int m = -4; m <= 4; ++m) CHECK(lattice_energy(config, 1, m) > 0.0);
    CHECK(lattice_energy(config, 1, 1) < lattice_energy(config, 1, 0));

    auto clipped = apply_positive_ladder(PositiveLadder::creation, 1, unit(LatticeLabel{{4}}),
                                         config);
    CHECK(clipped.is_zero());
    CHECK(clipped.window_clipped);
  }

  TEST_CASE("family coefficients") {
    auto config = make_config("1/2", 0.0, {"1"}, 10);
    auto family = build_positive_coherent(config);

    SUBCASE("n = 0 coefficient is 1") { CHECK(family.coeff_sq_at(1, 0) == 1); }

    SUBCASE("n = 1 squared magnitude is 1/(lambda (1 + nu/lambda))") {
      // lambda = 1, nu = 2: c(1)^2 = 1/3
      CHECK(family.coeff_sq_at(1, 1) == Rational(1, 3));
    }

    SUBCASE("bilateral recursion of the squared coefficients") {
      const Rational p = config.params.p_rational();
      const Rational nu = config.nu_exact();
      for (int n = -9; n <= 9; ++n) {
        // c(n)^2 = (lambda p^{-n} + nu) c(n+1)^2, the content of the
        // raising eigenproblem
        CHECK(family.coeff_sq_at(1, n) ==
              (rational_pow(p, -n) + nu) * family.coeff_sq_at(1, n + 1));
      }
    }
  }

  TEST_CASE("normalization against the direct magnitude sum") {
    auto config = make_config("1/2", 0.0, {"1/2", "1", "2"}, 40);
    auto family = build_positive_coherent(config);
    std::vector<double> r{8.0, 8.0, 8.0};

    double c = positive_normalization(config, r);
    double direct = direct_magnitude_sum(family, r);
    CHECK(1.0 / (c * c) == doctest::Approx(direct).epsilon(1e-8));

    SUBCASE("single-mode window sum matches psi01 directly") {
      auto single = make_config("1/2", 0.0, {"1"}, 40);
      auto fam = build_positive_coherent(single);
      std::vector<double> rr{5.0};
      double sum = direct_magnitude_sum(fam, rr);
      double psi = bilateral_psi01(-2.0, 0.5, -5.0);
      CHECK(sum == doctest::Approx(psi).epsilon(1e-8));
    }

    SUBCASE("the constant factorizes over modes") {
      auto m1 = make_config("1/2", 0.0, {"1/2"}, 40);
      auto m2 = make_config("1/2", 0.0, {"1"}, 40);
      auto m3 = make_config("1/2", 0.0, {"2"}, 40);
      std::vector<double> rr{8.0};
      double product = positive_normalization(m1, rr) * positive_normalization(m2, rr) *
                       positive_normalization(m3, rr);
      CHECK(c == doctest::Approx(product).epsilon(1e-12));
    }
  }

  TEST_CASE("raising eigenproblem is exact on the window interior") {
    auto config = make_config("1/2", 0.4, {"1/2", "1", "2"}, 8);
    auto family = build_positive_coherent(config);
    std::vector<double> r{8.0, 8.0, 8.0};
    for (int mode : {1, 2, 3}) {
      auto report = check_raising_eigenproblem(family, mode, r);
      CHECK(report.exact_match);
      CHECK(report.compared > 0);
    }

    SUBCASE("commuting z parameters break the multimode phases") {
      auto mutated = config;
      mutated.z_exchange = false;
      auto fam = build_positive_coherent(mutated);
      CHECK(!check_raising_eigenproblem(fam, 1, r).exact_match);
      // the highest mode never crosses another z factor, so it still matches
      CHECK(check_raising_eigenproblem(fam, 3, r).exact_match);
    }
  }

  TEST_CASE("boundary residue halves (at least) per window step") {
    std::vector<double> r{8.0};  // nu/r = 1/4, so the magnitude ratio is 1/2
    double previous = 0.0;
    for (int w : {6, 7, 8, 9, 10}) {
      auto config = make_config("1/2", 0.0, {"1"}, w);
      auto family = build_positive_coherent(config);
      double residue = check_raising_eigenproblem(family, 1, r).boundary_residue;
      if (previous > 0.0) CHECK(residue <= 0.55 * previous);
      previous = residue;
    }
  }

  TEST_CASE("window suggestion controls both tails") {
    auto params = DeformationParams::from_text("1/2", 0.0);
    std::vector<double> lambdas{1.0};
    std::vector<double> r{8.0};
    int w14 = suggest_window(params, lambdas, r);
    int w6 = suggest_window(params, lambdas, r, 1e-6);
    CHECK(w6 < w14);  // looser threshold, smaller window

    // the boundary residue of the eigenproblem at the suggested window is of
    // the order of the threshold
    auto config = PositiveEnergyConfig::make(params, {parse_rational("1")}, w14);
    auto family = build_positive_coherent(config);
    CHECK(check_raising_eigenproblem(family, 1, r).boundary_residue < 1e-5);

    std::vector<double> small_r{0.5};  // below nu: no two-sided decay
    CHECK_THROWS_AS(suggest_window(params, lambdas, small_r), pqosc::domain_error);
  }

  TEST_CASE("normalization rejects divergent magnitudes") {
    auto config = make_config("1/2", 0.0, {"1"}, 10);
    std::vector<double> r{0.3};  // r < nu: the bilateral series diverges
    CHECK_THROWS_AS(positive_normalization(config, r), pqosc::domain_error);
  }
}
