#include <doctest.h>

#include <cmath>
#include <random>

#include "pqosc/fock.hpp"

using namespace pqosc;

namespace {

ModeConfig cfg(int modes, int cutoff, const char* p, double theta) {
  return ModeConfig::uniform(modes, cutoff, DeformationParams::from_text(p, theta));
}

// Deterministic sparse vector away from the cutoff.
FockVector<NumericMode> random_vector(const ModeConfig& config, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  FockVector<NumericMode> v;
  for (const Occupation& occ : interior_occupations(config, 1)) {
    if (rng() % 3 == 0) continue;
    v.add(occ, PhasedComplex::from({coeff(rng), coeff(rng)}));
  }
  return v;
}

}  // namespace

TEST_SUITE("fock") {
  TEST_CASE("vacuum and its annihilation") {
    ModeConfig config = cfg(2, 4, "0.7", 0.4);
    auto vac = vacuum<NumericMode>(config);
    CHECK(vac.amplitudes.size() == 1);
    CHECK(vac.amplitudes.begin()->first.n == std::vector<int>{0, 0});
    CHECK(apply_annihilation(1, vac, config).is_zero());
    CHECK(apply_annihilation(2, vac, config).is_zero());
    CHECK(apply_number(1, vac, config).is_zero());
    CHECK(apply_number(2, vac, config).is_zero());
  }

  TEST_CASE("single-mode ladder examples") {
    ModeConfig config = cfg(1, 6, "2", 0.0);
    auto vac = vacuum<NumericMode>(config);

    // a|1> = |0>, [1] = 1
    auto one = apply_creation(1, vac, config);
    auto back = apply_annihilation(1, one, config);
    CHECK(back.amplitudes.at(Occupation{{0}}).realize(0.0).real() == doctest::Approx(1.0));

    // (a†)^2|0> = sqrt([2]!)|2> = sqrt(3)|2>
    auto two = apply_creation(1, one, config);
    CHECK(two.amplitudes.at(Occupation{{2}}).realize(0.0).real() ==
          doctest::Approx(std::sqrt(3.0)));

    // basis_state(2) agrees with (a†)^2|0>/sqrt(3)
    auto basis = basis_state<NumericMode>(Occupation{{2}}, config);
    CHECK(basis.amplitudes.at(Occupation{{2}}).realize(0.0).real() == doctest::Approx(1.0));
  }

  TEST_CASE("two-mode phases carry exact integer q-exponents") {
    ModeConfig config = cfg(2, 5, "0.7", 0.31);

    // a_1|1,2> = q^2 sqrt([1]) |0,2>
    auto ket = basis_state<NumericMode>(Occupation{{1, 2}}, config);
    auto lowered = apply_annihilation(1, ket, config);
    const PhasedComplex& amp = lowered.amplitudes.at(Occupation{{0, 2}});
    REQUIRE(amp.terms().size() == 1);
    CHECK(amp.min_qpow() == 2);
    CHECK(std::abs(amp.realize(config.params.theta)) == doctest::Approx(1.0));

    // a†_1|0,1> = q^{-1}|1,1>
    auto ket01 = basis_state<NumericMode>(Occupation{{0, 1}}, config);
    auto raised = apply_creation(1, ket01, config);
    const PhasedComplex& amp2 = raised.amplitudes.at(Occupation{{1, 1}});
    REQUIRE(amp2.terms().size() == 1);
    CHECK(amp2.min_qpow() == -1);
  }

  TEST_CASE("creation past the cutoff drops the component and flags overflow") {
    ModeConfig config = cfg(1, 2, "0.7", 0.0);
    auto top = basis_state<NumericMode>(Occupation{{2}}, config);
    auto past = apply_creation(1, top, config);
    CHECK(past.is_zero());
    CHECK(past.overflow);
  }

  TEST_CASE("basis states are orthonormal") {
    ModeConfig config = cfg(2, 3, "0.7", 0.31);
    auto b12 = basis_state<NumericMode>(Occupation{{1, 2}}, config);
    auto b21 = basis_state<NumericMode>(Occupation{{2, 1}}, config);
    CHECK(inner_product(b12, b12).realize(config.params.theta).real() == doctest::Approx(1.0));
    CHECK(inner_product(b12, b21).is_zero());
    CHECK_THROWS_AS(basis_state<NumericMode>(Occupation{{4, 0}}, config), argument_error);
  }

  TEST_CASE("basis construction path agrees with the direct ket, exact mode") {
    ModeConfig config = cfg(2, 4, "7/10", 0.31);
    for (int n1 : {0, 1, 2}) {
      for (int n2 : {0, 1, 2, 3}) {
        auto built = basis_state<ExactMode>(Occupation{{n1, n2}}, config);
        REQUIRE(built.amplitudes.size() == 1);
        const ExactScalar& amp = built.amplitudes.at(Occupation{{n1, n2}});
        CHECK(amp == ExactScalar::one());  // unit coefficient, zero q-power
      }
    }
  }

  TEST_CASE("number operator and subhamiltonian eigenvalues") {
    ModeConfig config = cfg(2, 5, "1/2", 0.0);
    auto ket = basis_state<NumericMode>(Occupation{{2, 0}}, config);
    auto n1 = apply_number(1, ket, config);
    CHECK(n1.amplitudes.at(Occupation{{2, 0}}).realize(0.0).real() == doctest::Approx(2.0));

    // p = 1/2: nu = 2, H on n = 0 has eigenvalue -2
    auto vac = vacuum<NumericMode>(config);
    auto h = apply_subhamiltonian(1, vac, config);
    CHECK(h.amplitudes.at(Occupation{{0, 0}}).realize(0.0).real() == doctest::Approx(-2.0));
    CHECK(config.params.nu() == doctest::Approx(2.0));

    // [n] - nu = -p^n/(1-p) across the cutoff
    for (int n = 0; n <= 5; ++n) {
      double lhs = NumericMode::sub_eigenvalue(n, config.params);
      double rhs = -std::pow(0.5, n) / 0.5;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
    }
  }

  TEST_CASE("p = 1 requires the classical limit flag") {
    CHECK_THROWS_AS(DeformationParams::make(1.0, 0.0), argument_error);
    auto classical = DeformationParams::classical();
    CHECK(classical.p == 1.0);
    ModeConfig config = ModeConfig::uniform(1, 4, classical);
    CHECK_THROWS_AS(apply_subhamiltonian(1, vacuum<NumericMode>(config), config),
                    pqosc::domain_error);
  }

  TEST_CASE("coefficient recursion |f(n+1)|^2 - p |f(n)|^2 = 1") {
    // |f_i|^2 = [n_i], so this is the bracket recursion on the ladder
    // coefficients; checked exactly and in floats.
    ModeConfig config = cfg(1, 8, "7/10", 0.0);
    const Rational p = config.params.p_rational();
    for (long n = 0; n < 8; ++n) {
      Rational f_sq = q_bracket_exact(n, p);
      Rational f1_sq = q_bracket_exact(n + 1, p);
      CHECK(f1_sq - p * f_sq == 1);
      CHECK(q_bracket(n + 1.0, 0.7) - 0.7 * q_bracket(double(n), 0.7) ==
            doctest::Approx(1.0).epsilon(1e-13));
    }
  }

  TEST_CASE("a†a acts diagonally with eigenvalue [n_i]") {
    ModeConfig config = cfg(2, 4, "7/10", 0.31);
    for (const Occupation& occ : interior_occupations(config, 1)) {
      auto ket = basis_state<ExactMode>(occ, config);
      auto out = apply_annihilation(1, ket, config);
      out = apply_creation(1, out, config);
      if (occ.n[0] == 0) {
        CHECK(out.is_zero());
      } else {
        ExactScalar expected = ExactScalar::from_rational(
            q_bracket_exact(occ.n[0], config.params.p_rational()));
        CHECK(out.amplitudes.at(occ) == expected);
      }
    }
  }

  TEST_CASE("adjointness <a† v, w> = <v, a w> on the interior") {
    ModeConfig config = cfg(2, 5, "0.7", 0.57);
    auto v = random_vector(config, 11);
    auto w = random_vector(config, 23);
    for (int mode : {1, 2}) {
      auto lhs = inner_product(apply_creation(mode, v, config), w);
      auto rhs = inner_product(v, apply_annihilation(mode, w, config));
      lhs -= rhs;
      CHECK(lhs.realize_abs(config.params.theta) < 1e-12);
    }
  }

  TEST_CASE("number from ladder series reproduces the diagonal action") {
    SUBCASE("single mode, p = 1/2, |3>") {
      ModeConfig config = cfg(1, 6, "1/2", 0.0);
      auto ket = basis_state<NumericMode>(Occupation{{3}}, config);
      auto series = number_from_ladder(1, ket, config);
      CHECK(series.amplitudes.at(Occupation{{3}}).realize(0.0).real() ==
            doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("vacuum gives the zero vector") {
      ModeConfig config = cfg(2, 4, "0.7", 0.2);
      CHECK(number_from_ladder(1, vacuum<NumericMode>(config), config).is_zero());
    }
    SUBCASE("exact equality over the whole basis, both modes") {
      ModeConfig config = cfg(2, 4, "7/10", 0.31);
      for (const Occupation& occ : enumerate_occupations(config)) {
        auto ket = basis_state<ExactMode>(occ, config);
        for (int mode : {1, 2}) {
          auto series = number_from_ladder(mode, ket, config);
          auto direct = apply_number(mode, ket, config);
          for (auto& [o, amp] : direct.amplitudes) {
            ExactScalar neg = amp;
            neg.mul_long(-1);
            series.add(o, std::move(neg));
          }
          CHECK(series.is_zero());
        }
      }
    }
    SUBCASE("classical limit keeps only the k = 1 term") {
      auto params = DeformationParams::classical();
      CHECK(NumericMode::ladder_series_coeff(1, params) == doctest::Approx(1.0));
      CHECK(NumericMode::ladder_series_coeff(2, params) == doctest::Approx(0.0));
      ModeConfig config = ModeConfig::uniform(1, 5, params);
      auto ket = basis_state<NumericMode>(Occupation{{4}}, config);
      auto series = number_from_ladder(1, ket, config);
      CHECK(series.amplitudes.at(Occupation{{4}}).realize(0.0).real() ==
            doctest::Approx(4.0).epsilon(1e-12));
    }
  }
}
