#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cspec/wkb.hpp"
#include "oracle_utils.hpp"

using namespace cspec;

namespace {
constexpr double kPi = std::numbers::pi;

SectorPair sextic_pair(const std::string& label) {
  for (const SectorPair& p : enumerate_sector_pairs(pure_monomial(6, {1.0, 0.0}))) {
    if (pair_label(p) == label) return p;
  }
  throw std::logic_error("pair not found");
}
}  // namespace

TEST_CASE("harmonic quantization integral is exact") {
  const PotentialSpec h = deformed_monomial(0.0, false);
  for (int n : {0, 1, 5, 10}) {
    const double e = 2.0 * n + 1.0;
    const Complex value = quantization_integral(
        h, {e, 0.0}, {{-std::sqrt(e), 0.0}, {std::sqrt(e), 0.0}});
    CHECK(std::abs(value - Complex{(n + 0.5) * kPi, 0.0}) < 1e-8);
  }
}

TEST_CASE("quantization endpoints must be turning points") {
  CHECK_THROWS_AS(quantization_integral(deformed_monomial(0.0, false),
                                        {1.0, 0.0}, {{-2.0, 0.0}, {2.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("reversed pair order yields the same normalized action") {
  const PotentialSpec c = deformed_monomial(1.0, false);
  const Complex e{1.2, 0.1};
  const auto tps = turning_points(c, e);
  REQUIRE(tps.size() == 3);
  const Complex fwd = quantization_integral(c, e, {tps[0], tps[1]});
  const Complex rev = quantization_integral(c, e, {tps[1], tps[0]});
  CHECK(std::abs(fwd - rev) < 1e-10 * std::max(1.0, std::abs(fwd)));
}

TEST_CASE("sextic actions at the table energies") {
  const PotentialSpec s6 = pure_monomial(6, {1.0, 0.0});

  // At the ground state the leading-order action overshoots pi/2 by 27%;
  // the frozen value is from an independent multiprecision quadrature.
  const double e0 = 1.1448;
  const double r0 = std::pow(e0, 1.0 / 6.0);
  const Complex v0 = quantization_integral(s6, {e0, 0.0}, {{-r0, 0.0}, {r0, 0.0}});
  CHECK(std::abs(v0.real() - 1.9933308654842056) < 1e-7);
  CHECK(std::abs(v0.imag()) < 1e-10);

  // By n = 3 the half-integer quantum holds to well under 5%.
  const double e3 = 14.935;
  const double r3 = std::pow(e3, 1.0 / 6.0);
  const Complex v3 = quantization_integral(s6, {e3, 0.0}, {{-r3, 0.0}, {r3, 0.0}});
  CHECK(std::abs(v3.real() - 3.5 * kPi) < 0.05 * 3.5 * kPi);
}

TEST_CASE("quantization_result reports the effective index") {
  const PotentialSpec h = deformed_monomial(0.0, false);
  const double e = 11.0;
  const auto result = quantization_result(
      h, {e, 0.0}, {{-std::sqrt(e), 0.0}, {std::sqrt(e), 0.0}});
  CHECK(std::abs(result.n_effective - 5.0) < 1e-8);
  REQUIRE(!result.path.empty());
  for (const Complex& endpoint : {result.path.front(), result.path.back()}) {
    CHECK(std::abs(eval_potential(h, endpoint) - Complex{e, 0.0}) <=
          1e-8 * std::max(1.0, e));
  }
}

TEST_CASE("turning point selection follows the sector centers") {
  const PotentialSpec c = deformed_monomial(1.0, false);
  const auto pair = pt_sector_pair(c);
  const auto tps = turning_point_pair_for(c, pair, {1.0, 0.0});
  CHECK(std::arg(tps.second) * 180.0 / kPi == doctest::Approx(-30.0));
  CHECK(std::arg(tps.first) * 180.0 / kPi == doctest::Approx(-150.0));
}

TEST_CASE("wkb energy estimates") {
  SUBCASE("harmonic levels are exact") {
    const PotentialSpec h = deformed_monomial(0.0, false);
    const auto pair = pt_sector_pair(h);
    CHECK(std::abs(wkb_energy_estimate(h, pair, 5) - Complex{11.0, 0.0}) < 1e-6);
    CHECK(std::abs(wkb_energy_estimate(h, pair, 0) - Complex{1.0, 0.0}) < 1e-6);
  }
  SUBCASE("negative index is rejected") {
    const PotentialSpec h = deformed_monomial(0.0, false);
    CHECK_THROWS_AS(wkb_energy_estimate(h, pt_sector_pair(h), -1),
                    std::invalid_argument);
  }
  SUBCASE("vertical sextic pair gives negated Hermitian estimates") {
    const PotentialSpec s6 = pure_monomial(6, {1.0, 0.0});
    const Complex cg = wkb_energy_estimate(s6, sextic_pair("CG"), 3);
    const Complex ae = wkb_energy_estimate(s6, sextic_pair("AE"), 3);
    CHECK(std::abs(cg + ae) < 1e-6 * std::abs(ae));
  }
}

TEST_CASE("estimates scale as (n+1/2)^{2N/(N+2)} at high n") {
  const PotentialSpec s6 = pure_monomial(6, {1.0, 0.0});
  const PotentialSpec quartic = pure_monomial(4, {1.0, 0.0});
  SectorPair quartic_real_pair;
  bool found = false;
  for (const SectorPair& p : enumerate_sector_pairs(quartic)) {
    if (pair_label(p) == "AD") {  // contains the positive and negative axes
      quartic_real_pair = p;
      found = true;
    }
  }
  REQUIRE(found);

  struct Case {
    PotentialSpec spec;
    SectorPair pair;
    int degree;
  };
  for (const Case& c : {Case{s6, sextic_pair("AE"), 6},
                        Case{quartic, quartic_real_pair, 4}}) {
    const double e40 = wkb_energy_estimate(c.spec, c.pair, 40).real();
    const double e80 = wkb_energy_estimate(c.spec, c.pair, 80).real();
    const double power = 2.0 * c.degree / (c.degree + 2.0);
    const double want = std::pow(80.5 / 40.5, power);
    CHECK(std::abs(e80 / e40 - want) < 0.02 * want);
    // doubling-in-n limit ratio
    CHECK(std::abs(e80 / e40 - std::pow(2.0, power)) <
          0.02 * std::pow(2.0, power));
  }
}

TEST_CASE("leading-order ratio of sextic families is 2^{3/2}") {
  // With both actions scaling as E^{2/3} and in exact ratio 2, the WKB
  // estimate gives the limit at every index; the approach from shooting
  // values is covered in the spectral suite.
  const double limit = std::pow(2.0, 1.5);
  CHECK(std::abs(pt_hermitian_ratio(20) - limit) < 0.01 * limit);
  CHECK(std::abs(pt_hermitian_ratio(0) - limit) < 1e-6 * limit);
}
