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
#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "iocg/circulant.hpp"
#include "iocg/spectrum.hpp"

namespace iocg {

/// Fidelity threshold used when issuing certificates.
inline constexpr double kDefaultFidelityTolerance = 1e-9;

/// t = 2 pi p / q, reduced, with 0 <= p < q (one period of U).
class RationalTime {
 public:
  RationalTime() = default;
  /// Reduces p/q modulo 1 and to lowest terms. Throws for q < 1.
  RationalTime(Int p, Int q);

  Int p() const noexcept { return p_; }
  Int q() const noexcept { return q_; }
  double fraction() const noexcept { return static_cast<double>(p_) / static_cast<double>(q_); }
  double radians() const noexcept;

  bool operator==(const RationalTime&) const = default;
  /// Orders by value of p/q.
  bool operator<(const RationalTime& other) const noexcept { return p_ * other.q_ < other.p_ * q_; }

 private:
  Int p_ = 0;
  Int q_ = 1;
};

enum class Criterion { divisor_criterion, valuation_test, exact_search };

std::string_view to_string(Criterion c) noexcept;

/// A verified claim |U(t)_{ab}| = 1 with U(t)_{ab} = phase.
struct TransferCertificate {
  Int a = 0;
  Int b = 0;
  RationalTime time;
  std::complex<double> phase;
  double fidelity = 0.0;
  Criterion criterion = Criterion::exact_search;
};

/// v2(mu_{j+k} - mu_j) for j = 0 .. n-1 (indices mod n); std::nullopt marks
/// a zero difference (infinite valuation).
struct ValuationProfile {
  int step = 1;
  std::vector<std::optional<int>> values;

  /// Every entry is finite and equal to m.
  bool is_constant(int m) const;
  /// The common finite value, if there is one.
  std::optional<int> constant_value() const;
};

/// n = 0 (mod 4) and D_2 = {n/4}.
bool has_pst(const GraphSpec& spec);

/// n = 0 (mod 8), D_2 = {n/4} and D_3 = {n/8}.
bool has_mst(const GraphSpec& spec);

/// PST between every pair of vertices. Requires n >= 2; never holds for
/// these graphs, since transfer only occurs at offsets n/4, n/2, 3n/4.
bool has_ust(const GraphSpec& spec);

ValuationProfile valuation_profile(const Spectrum& spectrum, int k);

/// Offsets o such that PST holds between b + o and b for every b:
/// {n/4, n/2, 3n/4} under MST, {n/2} under PST only, otherwise empty.
std::vector<Int> pst_pair_offsets(const GraphSpec& spec);

/// Earliest t' = p/q in (0, 1) such that t' (mu_{j+1} - mu_j) + (a - b)/n is
/// an integer for every j, searching reduced fractions with q <= 4n in exact
/// integer arithmetic. Requires a != b.
std::optional<RationalTime> solve_transfer_time(const Spectrum& spectrum, Int a, Int b);

/// t' (mu_{j+k} - mu_j) + k (a - b)/n is an integer for every j.
bool k_step_condition(const Spectrum& spectrum, Int a, Int b, const RationalTime& t, Int k);

/// Solves for the transfer time from the exact spectrum, then evaluates
/// U(t)_{ab}. Returns std::nullopt when no time exists; throws
/// std::logic_error if a solved time has fidelity below 1 - tolerance.
std::optional<TransferCertificate> certify(const GraphSpec& spec, Int a, Int b,
                                           double tolerance = kDefaultFidelityTolerance);

/// Certificate for b + n/2 -> b at t' = 1/4, issued only when has_pst holds.
std::optional<TransferCertificate> certify_by_divisor_criterion(const GraphSpec& spec, Int b,
                                                                double tolerance = kDefaultFidelityTolerance);

/// Certificate for b + n/2 -> b at t' = 1/2^{m+1}, issued only when the
/// one-step valuation profile is constant at m.
std::optional<TransferCertificate> certify_by_valuation(const Spectrum& spectrum, Int b,
                                                        double tolerance = kDefaultFidelityTolerance);

}  // namespace iocg
