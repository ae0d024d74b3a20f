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

#include <cstdint>
#include <vector>

namespace iocg {

using Int = std::int64_t;

/// Orientation choice for a residue class: +1 selects k = 1 (mod 4),
/// -1 selects k = 3 (mod 4).
enum class Sign : int { minus = -1, plus = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign negate(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// Residue representative r in {1, 3} associated with a sign.
constexpr int residue_of(Sign s) noexcept { return s == Sign::plus ? 1 : 3; }

/// Exponent of 2 in n. Odd inputs give 0; n <= 0 throws std::invalid_argument.
int two_adic_valuation(Int n);

/// All positive divisors of n in increasing order.
std::vector<Int> divisors(Int n);

/// tau(n), the number of positive divisors.
Int divisor_count(Int n);

Int euler_phi(Int n);

/// Moebius function mu(n) for n >= 1.
int mobius(Int n);

Int gcd(Int a, Int b);

/// A set of residues modulo `modulus`, kept sorted and duplicate free.
struct ResidueClass {
  Int modulus = 1;
  std::vector<Int> elements;

  bool contains(Int k) const;
  std::size_t size() const noexcept { return elements.size(); }
  bool empty() const noexcept { return elements.empty(); }
  bool operator==(const ResidueClass&) const = default;
};

/// {k : 1 <= k <= n-1, gcd(k, n) = d}. Requires d | n.
ResidueClass gn_set(Int n, Int d);

/// {d*k : k = r (mod 4), gcd(d*k, n) = d}, i.e. d * G_{n/d}^r(1).
/// Requires 4 | n, d | n/4 and r in {1, 3}.
ResidueClass gnr_set(Int n, Int d, int r);

/// Ramanujan's sum c_n(q), exact (Hoelder's identity).
Int ramanujan_sum(Int n, Int q);

/// Ramanujan's sum by the defining cosine sum over the units mod n.
/// Floating point; kept as an independent reference.
double ramanujan_sum_cosine(Int n, Int q);

/// Ramanujan's sine sum s_n^sign(q) = -sum_{a in G_n^r(1)} 2 sin(2 pi a q / n),
/// evaluated numerically and rounded. Throws std::logic_error if the raw sum
/// is not within 1e-6 of an integer.
Int sine_sum_direct(Int n, Int q, Sign sign);

/// s_n(q) = s_n^{+1}(q) from the closed form in terms of c_m, n = 2^t m.
Int sine_sum_closed(Int n, Int q);

namespace detail {

/// 128-bit intermediate for products of two Int values.
__extension__ using Wide = __int128;

/// Rounds x to the nearest integer; throws std::logic_error naming `what`
/// when |x - round(x)| >= tolerance.
Int round_integral(double x, double tolerance, const char* what);

}  // namespace detail

}  // namespace iocg
