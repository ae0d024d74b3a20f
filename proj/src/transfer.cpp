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
#include "iocg/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace iocg {

namespace {

Int mod(Int x, Int n) { return ((x % n) + n) % n; }

void require_vertex(const Spectrum& s, Int v, const char* what) {
  if (v < 0 || v >= s.n) {
    throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(s.n) + ")");
  }
}

// Distinct k-step differences mu_{j+k} - mu_j. A zero difference is kept:
// it forces k(a - b) = 0 (mod n).
std::vector<Int> step_differences(const Spectrum& s, Int k) {
  std::vector<Int> out;
  for (Int j = 0; j < s.n; ++j) out.push_back(s[j + k] - s[j]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// p/q * delta + c/n in Z  <=>  p*delta*n + c*q = 0 (mod q*n).
bool congruence_holds(std::span<const Int> deltas, Int p, Int q, Int c, Int n) {
  const detail::Wide modulus = static_cast<detail::Wide>(q) * n;
  for (Int delta : deltas) {
    const detail::Wide value = static_cast<detail::Wide>(p) * delta * n + static_cast<detail::Wide>(c) * q;
    if (value % modulus != 0) return false;
  }
  return true;
}

TransferCertificate evaluate(const Spectrum& spectrum, Int a, Int b, RationalTime time, Criterion criterion,
                             double tolerance) {
  const auto value = transition_entry(spectrum, a, b, time.radians());
  const double fidelity = std::abs(value);
  if (fidelity < 1.0 - tolerance) {
    std::ostringstream msg;
    msg << "certificate for (" << a << ", " << b << ") at t' = " << time.p() << "/" << time.q() << " via "
        << to_string(criterion) << " has fidelity " << fidelity;
    throw std::logic_error(msg.str());
  }
  return TransferCertificate{a, b, time, value, fidelity, criterion};
}

}  // namespace

RationalTime::RationalTime(Int p, Int q) {
  if (q < 1) throw std::invalid_argument("RationalTime: denominator must be positive");
  p = mod(p, q);
  const Int g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

double RationalTime::radians() const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(p_) / static_cast<double>(q_);
}

std::string_view to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::divisor_criterion:
      return "divisor-criterion";
    case Criterion::valuation_test:
      return "valuation-test";
    case Criterion::exact_search:
      return "exact-search";
  }
  return "unknown";
}

bool ValuationProfile::is_constant(int m) const {
  return !values.empty() && std::all_of(values.begin(), values.end(), [m](const auto& v) { return v && *v == m; });
}

std::optional<int> ValuationProfile::constant_value() const {
  if (values.empty() || !values.front()) return std::nullopt;
  const int m = *values.front();
  if (!is_constant(m)) return std::nullopt;
  return m;
}

bool has_pst(const GraphSpec& spec) {
  const Int n = spec.order();
  if (n % 4 != 0 || spec.empty()) return false;
  return d_partition(spec).level_is(2, n / 4);
}

bool has_mst(const GraphSpec& spec) {
  const Int n = spec.order();
  if (n % 8 != 0 || !has_pst(spec)) return false;
  return d_partition(spec).level_is(3, n / 8);
}

bool has_ust(const GraphSpec& spec) {
  const Int n = spec.order();
  if (n < 2) throw std::invalid_argument("has_ust: needs at least two vertices");
  // UST needs a transfer at every nonzero offset.
  return static_cast<Int>(pst_pair_offsets(spec).size()) == n - 1;
}

ValuationProfile valuation_profile(const Spectrum& spectrum, int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("valuation_profile: step must be 1 or 2");
  ValuationProfile out{k, {}};
  out.values.reserve(static_cast<std::size_t>(spectrum.n));
  for (Int j = 0; j < spectrum.n; ++j) {
    const Int diff = spectrum[j + k] - spectrum[j];
    if (diff == 0) {
      out.values.emplace_back(std::nullopt);
    } else {
      out.values.emplace_back(two_adic_valuation(diff < 0 ? -diff : diff));
    }
  }
  return out;
}

std::vector<Int> pst_pair_offsets(const GraphSpec& spec) {
  const Int n = spec.order();
  if (has_mst(spec)) return {n / 4, n / 2, 3 * n / 4};
  if (has_pst(spec)) return {n / 2};
  return {};
}

std::optional<RationalTime> solve_transfer_time(const Spectrum& spectrum, Int a, Int b) {
  require_vertex(spectrum, a, "solve_transfer_time");
  require_vertex(spectrum, b, "solve_transfer_time");
  if (a == b) throw std::invalid_argument("solve_transfer_time: vertices must be distinct");

  const Int n = spectrum.n;
  const Int c = mod(a - b, n);
  const auto deltas = step_differences(spectrum, 1);
  if (std::find(deltas.begin(), deltas.end(), 0) != deltas.end()) return std::nullopt;  // c/n is never an integer

  std::optional<RationalTime> best;
  for (Int q = 2; q <= 4 * n; ++q) {
    for (Int p = 1; p < q; ++p) {
      if (best && p * best->q() >= best->p() * q) break;  // no earlier time for this q
      if (std::gcd(p, q) != 1) continue;
      if (congruence_holds(deltas, p, q, c, n)) {
        best = RationalTime(p, q);
        break;
      }
    }
  }
  return best;
}

bool k_step_condition(const Spectrum& spectrum, Int a, Int b, const RationalTime& t, Int k) {
  require_vertex(spectrum, a, "k_step_condition");
  require_vertex(spectrum, b, "k_step_condition");
  if (k < 1 || k > spectrum.n) throw std::invalid_argument("k_step_condition: k must lie in [1, n]");
  const Int n = spectrum.n;
  const auto deltas = step_differences(spectrum, k);
  const Int c = mod(k * (a - b), n);
  return congruence_holds(deltas, t.p(), t.q(), c, n);
}

std::optional<TransferCertificate> certify(const GraphSpec& spec, Int a, Int b, double tolerance) {
  const Spectrum spectrum = eigenvalues_closed(spec);
  const auto time = solve_transfer_time(spectrum, a, b);
  if (!time) return std::nullopt;
  return evaluate(spectrum, a, b, *time, Criterion::exact_search, tolerance);
}

std::optional<TransferCertificate> certify_by_divisor_criterion(const GraphSpec& spec, Int b, double tolerance) {
  if (!has_pst(spec)) return std::nullopt;
  const Spectrum spectrum = eigenvalues_closed(spec);
  require_vertex(spectrum, b, "certify_by_divisor_criterion");
  // D_2 = {n/4} forces every one-step difference to have valuation 1.
  return evaluate(spectrum, mod(b + spec.order() / 2, spec.order()), b, RationalTime(1, 4),
                  Criterion::divisor_criterion, tolerance);
}

std::optional<TransferCertificate> certify_by_valuation(const Spectrum& spectrum, Int b, double tolerance) {
  require_vertex(spectrum, b, "certify_by_valuation");
  if (spectrum.n % 2 != 0) return std::nullopt;
  const auto m = valuation_profile(spectrum, 1).constant_value();
  if (!m) return std::nullopt;
  if (*m > 60) throw std::overflow_error("certify_by_valuation: valuation too large");
  return evaluate(spectrum, mod(b + spectrum.n / 2, spectrum.n), b, RationalTime(1, Int{1} << (*m + 1)),
                  Criterion::valuation_test, tolerance);
}

}  // namespace iocg
