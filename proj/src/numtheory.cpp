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
#include "iocg/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace iocg {

namespace {

void require_positive(Int n, const char* what) {
  if (n <= 0) {
    throw std::invalid_argument(std::string(what) + ": expected a positive integer, got " +
                                std::to_string(n));
  }
}

// Prime factorization by trial division, (prime, exponent) pairs.
std::vector<std::pair<Int, int>> factorize(Int n) {
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

namespace detail {

Int round_integral(double x, double tolerance, const char* what) {
  const double r = std::round(x);
  if (!(std::abs(x - r) < tolerance)) {
    std::ostringstream msg;
    msg << what << ": value " << x << " is not integral within " << tolerance;
    throw std::logic_error(msg.str());
  }
  return static_cast<Int>(r);
}

}  // namespace detail

int two_adic_valuation(Int n) {
  require_positive(n, "two_adic_valuation");
  int alpha = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++alpha;
  }
  return alpha;
}

std::vector<Int> divisors(Int n) {
  require_positive(n, "divisors");
  std::vector<Int> low, high;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Int divisor_count(Int n) {
  require_positive(n, "divisor_count");
  Int tau = 1;
  for (auto [p, e] : factorize(n)) tau *= e + 1;
  return tau;
}

Int euler_phi(Int n) {
  require_positive(n, "euler_phi");
  Int phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int mobius(Int n) {
  require_positive(n, "mobius");
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

bool ResidueClass::contains(Int k) const {
  return std::binary_search(elements.begin(), elements.end(), k);
}

ResidueClass gn_set(Int n, Int d) {
  require_positive(n, "gn_set");
  if (d <= 0 || n % d != 0) {
    throw std::invalid_argument("gn_set: " + std::to_string(d) + " does not divide " +
                                std::to_string(n));
  }
  ResidueClass out{n, {}};
  for (Int k = 1; k < n; ++k) {
    if (std::gcd(k, n) == d) out.elements.push_back(k);
  }
  return out;
}

ResidueClass gnr_set(Int n, Int d, int r) {
  require_positive(n, "gnr_set");
  if (r != 1 && r != 3) {
    throw std::invalid_argument("gnr_set: residue must be 1 or 3, got " + std::to_string(r));
  }
  if (n % 4 != 0 || d <= 0 || (n / 4) % d != 0) {
    throw std::invalid_argument("gnr_set: " + std::to_string(d) + " does not divide n/4 for n = " +
                                std::to_string(n));
  }
  const Int m = n / d;
  ResidueClass out{n, {}};
  for (Int k = 1; k <= m; ++k) {
    if (k % 4 == r && std::gcd(k, m) == 1) out.elements.push_back(d * k);
  }
  return out;
}

Int ramanujan_sum(Int n, Int q) {
  require_positive(n, "ramanujan_sum");
  require_positive(q, "ramanujan_sum");
  const Int g = std::gcd(n, q);
  const Int ratio = n / g;
  return mobius(ratio) * (euler_phi(n) / euler_phi(ratio));
}

double ramanujan_sum_cosine(Int n, Int q) {
  require_positive(n, "ramanujan_sum_cosine");
  require_positive(q, "ramanujan_sum_cosine");
  double sum = 0.0;
  for (Int a = 1; a <= n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    // Reduce a*q mod n before scaling to keep the angle small.
    const Int aq = static_cast<Int>((static_cast<detail::Wide>(a) * q) % n);
    sum += std::cos(2.0 * std::numbers::pi * static_cast<double>(aq) / static_cast<double>(n));
  }
  return sum;
}

Int sine_sum_direct(Int n, Int q, Sign sign) {
  require_positive(q, "sine_sum_direct");
  if (n <= 0 || n % 4 != 0) {
    throw std::invalid_argument("sine_sum_direct: n must be a positive multiple of 4, got " +
                                std::to_string(n));
  }
  const ResidueClass cls = gnr_set(n, 1, residue_of(sign));
  double sum = 0.0;
  for (Int a : cls.elements) {
    const Int aq = static_cast<Int>((static_cast<detail::Wide>(a) * q) % n);
    sum -= 2.0 * std::sin(2.0 * std::numbers::pi * static_cast<double>(aq) / static_cast<double>(n));
  }
  return detail::round_integral(sum, 1e-6, "sine_sum_direct");
}

Int sine_sum_closed(Int n, Int q) {
  require_positive(q, "sine_sum_closed");
  if (n <= 0 || n % 4 != 0) {
    throw std::invalid_argument("sine_sum_closed: n must be a positive multiple of 4, got " +
                                std::to_string(n));
  }
  const int t = two_adic_valuation(n);
  const Int m = n >> t;
  const Int scale = Int{1} << (t - 2);
  if (q % scale != 0) return 0;
  const Int reduced = q / scale;
  if (reduced % 2 == 0) return 0;
  // (-1)^{(m-1)/2} (-1)^{(q'+1)/2} 2^{t-1} c_m(q')
  const int sign_m = ((m - 1) / 2) % 2 == 0 ? 1 : -1;
  const int sign_q = ((reduced + 1) / 2) % 2 == 0 ? 1 : -1;
  return sign_m * sign_q * (Int{1} << (t - 1)) * ramanujan_sum(m, reduced);
}

}  // namespace iocg
