/*
 * Copyright 2026 The iocg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "doctest.h"

#include "iocg/census.hpp"
#include "iocg/transfer.hpp"
#include "support/oracles.hpp"

using namespace iocg;

namespace {

const GraphSpec kCycle4(4, {{1, Sign::plus}});
const GraphSpec kExample8(8, {{1, Sign::plus}, {2, Sign::minus}});
const Spectrum kSpectrum4{4, {0, -2, 0, 2}};
const Spectrum kSpectrum8{8, {0, 2, -4, -2, 0, 2, 4, -2}};

std::vector<std::optional<int>> all_of(std::size_t n, int v) { return std::vector<std::optional<int>>(n, v); }

}  // namespace

TEST_CASE("RationalTime") {
  CHECK(RationalTime(2, 8) == RationalTime(1, 4));
  CHECK(RationalTime(9, 8) == RationalTime(1, 8));
  CHECK(RationalTime(-1, 4) == RationalTime(3, 4));
  CHECK(RationalTime(4, 4) == RationalTime(0, 1));
  CHECK(RationalTime(1, 8) < RationalTime(1, 4));
  CHECK_THROWS_AS(RationalTime(1, 0), std::invalid_argument);
}

TEST_CASE("has_pst") {
  CHECK(has_pst(GraphSpec(8, {{2, Sign::minus}})));
  CHECK_FALSE(has_pst(GraphSpec(8, {{1, Sign::plus}})));
  CHECK(has_pst(GraphSpec(12, {{3, Sign::plus}})));
  CHECK_FALSE(has_pst(GraphSpec(8)));
  CHECK_FALSE(has_pst(GraphSpec(6)));
  CHECK_FALSE(has_pst(GraphSpec(12, {{3, Sign::plus}, {1, Sign::minus}})));  // D_2 = {1, 3}
}

TEST_CASE("has_mst") {
  CHECK(has_mst(kExample8));
  CHECK_FALSE(has_mst(GraphSpec(8, {{2, Sign::plus}})));
  CHECK_FALSE(has_mst(kCycle4));
  CHECK_FALSE(has_mst(GraphSpec(4, {{1, Sign::minus}})));
}

TEST_CASE("has_ust") {
  CHECK_FALSE(has_ust(kExample8));
  CHECK_FALSE(has_ust(kCycle4));
  CHECK_FALSE(has_ust(GraphSpec(8)));
  CHECK_THROWS_AS(has_ust(GraphSpec(1)), std::invalid_argument);
  for (Int n : {4, 8, 16, 24, 32}) {
    for (const auto& spec : all_specs(n)) REQUIRE_FALSE(has_ust(spec));
  }
}

TEST_CASE("valuation_profile") {
  CHECK(valuation_profile(kSpectrum4, 1).values == all_of(4, 1));
  CHECK(valuation_profile(kSpectrum8, 1).values == all_of(8, 1));
  CHECK(valuation_profile(kSpectrum8, 2).values == all_of(8, 2));
  CHECK(valuation_profile(kSpectrum8, 1).is_constant(1));
  CHECK(valuation_profile(kSpectrum8, 2).constant_value() == 2);

  const Spectrum zeros{8, std::vector<Int>(8, 0)};
  const auto p = valuation_profile(zeros, 1);
  CHECK_FALSE(p.values.front().has_value());
  CHECK_FALSE(p.constant_value().has_value());
  CHECK_FALSE(p.is_constant(0));

  CHECK_THROWS_AS(valuation_profile(kSpectrum8, 3), std::invalid_argument);
}

TEST_CASE("pst_pair_offsets") {
  CHECK(pst_pair_offsets(kExample8) == std::vector<Int>{2, 4, 6});
  CHECK(pst_pair_offsets(GraphSpec(8, {{2, Sign::plus}})) == std::vector<Int>{4});
  CHECK(pst_pair_offsets(GraphSpec(8)).empty());
}

TEST_CASE("solve_transfer_time") {
  CHECK(solve_transfer_time(kSpectrum4, 2, 0) == RationalTime(1, 4));
  CHECK(solve_transfer_time(kSpectrum8, 2, 0) == RationalTime(3, 8));
  CHECK(solve_transfer_time(kSpectrum8, 4, 0) == RationalTime(1, 4));
  // Frozen from the exact-fraction oracle: offset 6 is earliest at 1/8.
  CHECK(solve_transfer_time(kSpectrum8, 6, 0) == RationalTime(1, 8));
  CHECK_FALSE(solve_transfer_time(eigenvalues_closed(GraphSpec(8, {{1, Sign::plus}})), 4, 0));
  CHECK_FALSE(solve_transfer_time(Spectrum{8, std::vector<Int>(8, 0)}, 4, 0));
  CHECK_THROWS_AS(solve_transfer_time(kSpectrum8, 3, 3), std::invalid_argument);
}

TEST_CASE("solver agrees with a numeric scan of the dense evolution") {
  for (Int n : {4, 8, 12}) {
    for (const auto& spec : all_specs(n)) {
      const auto spectrum = eigenvalues_closed(spec);
      const oracle::DenseEvolution evo(build_symbol(spec));
      for (Int offset = 1; offset < n; ++offset) {
        const auto exact = solve_transfer_time(spectrum, offset, 0);
        const auto scanned = oracle::numeric_transfer_scan(evo, offset, 0, 4 * n);
        REQUIRE(exact.has_value() == scanned.has_value());
        if (exact) {
          REQUIRE(exact->p() == scanned->first);
          REQUIRE(exact->q() == scanned->second);
        }
      }
    }
  }
}

TEST_CASE("k_step_condition") {
  CHECK(k_step_condition(kSpectrum8, 2, 0, RationalTime(1, 8), 2));
  CHECK_FALSE(k_step_condition(kSpectrum8, 2, 0, RationalTime(1, 8), 1));
  CHECK(k_step_condition(kSpectrum8, 3, 3, RationalTime(0, 1), 5));
  CHECK_THROWS_AS(k_step_condition(kSpectrum8, 2, 0, RationalTime(1, 8), 0), std::invalid_argument);

  SUBCASE("solver output satisfies every k-step condition") {
    for (Int n : {8, 16, 24}) {
      for (const auto& spec : all_specs(n)) {
        const auto spectrum = eigenvalues_closed(spec);
        for (Int offset : {n / 4, n / 2, 3 * n / 4}) {
          const auto t = solve_transfer_time(spectrum, offset, 0);
          if (!t) continue;
          for (Int k = 1; k <= n; ++k) REQUIRE(k_step_condition(spectrum, offset, 0, *t, k));
        }
      }
    }
  }
}

TEST_CASE("certify") {
  auto c = certify(kCycle4, 2, 0);
  REQUIRE(c);
  CHECK(c->time == RationalTime(1, 4));
  CHECK(std::abs(c->phase - std::complex<double>(1.0, 0.0)) < 1e-12);
  CHECK(c->fidelity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c->criterion == Criterion::exact_search);

  c = certify(kExample8, 4, 0);
  REQUIRE(c);
  CHECK(c->time == RationalTime(1, 4));
  CHECK(std::abs(c->phase - std::complex<double>(1.0, 0.0)) < 1e-12);

  CHECK_FALSE(certify(GraphSpec(8, {{1, Sign::plus}}), 4, 0));
}

TEST_CASE("certificates by divisor criterion and by valuation") {
  const auto by_divisor = certify_by_divisor_criterion(kExample8, 3);
  REQUIRE(by_divisor);
  CHECK(by_divisor->a == 7);
  CHECK(by_divisor->b == 3);
  CHECK(by_divisor->criterion == Criterion::divisor_criterion);
  CHECK(by_divisor->fidelity >= 1.0 - 1e-9);

  const auto by_valuation = certify_by_valuation(kSpectrum4, 0);
  REQUIRE(by_valuation);
  CHECK(by_valuation->time == RationalTime(1, 4));
  CHECK(by_valuation->criterion == Criterion::valuation_test);

  CHECK_FALSE(certify_by_divisor_criterion(GraphSpec(8, {{1, Sign::plus}}), 0));
  CHECK_FALSE(certify_by_valuation(Spectrum{8, std::vector<Int>(8, 0)}, 0));
}

TEST_CASE("translation invariance and quarter offsets") {
  for (Int n : {8, 16}) {
    for (const auto& spec : all_specs(n)) {
      const auto base = certify(spec, n / 4, 0);
      const auto mirror = certify(spec, 3 * n / 4, 0);
      REQUIRE(base.has_value() == mirror.has_value());
      for (Int shift = 1; shift < n; ++shift) {
        const auto moved = certify(spec, (n / 4 + shift) % n, shift);
        REQUIRE(moved.has_value() == base.has_value());
        if (!base) continue;
        REQUIRE(moved->time == base->time);
        REQUIRE(std::abs(moved->phase - base->phase) < 1e-9);
        REQUIRE(std::abs(moved->fidelity - base->fidelity) < 1e-9);
      }
    }
  }
}

TEST_CASE("transfer only at quarter offsets") {
  for (Int n : {8, 16}) {
    for (const auto& spec : all_specs(n)) {
      const auto spectrum = eigenvalues_closed(spec);
      for (Int offset = 1; offset < n; ++offset) {
        if (offset % (n / 4) == 0) continue;
        REQUIRE_FALSE(solve_transfer_time(spectrum, offset, 0));
      }
    }
  }
}

TEST_CASE("PST and MST criteria agree with valuation tests and certificates") {
  for (Int n : {4, 8, 12, 16, 20, 24, 32}) {
    for (const auto& spec : all_specs(n)) {
      const auto spectrum = eigenvalues_closed(spec);
      const auto k1 = valuation_profile(spectrum, 1);
      const auto k2 = valuation_profile(spectrum, 2);
      const bool pst = has_pst(spec);
      REQUIRE(pst == k1.constant_value().has_value());
      REQUIRE(pst == certify(spec, n / 2, 0).has_value());
      if (pst) REQUIRE(k1.is_constant(1));
      if (n % 8 != 0) continue;
      const bool mst = has_mst(spec);
      REQUIRE(mst == (k1.is_constant(1) && k2.is_constant(2)));
      bool all_offsets = true;
      for (Int o : {n / 4, n / 2, 3 * n / 4}) all_offsets = all_offsets && certify(spec, o, 0).has_value();
      REQUIRE(mst == all_offsets);
    }
  }
}
