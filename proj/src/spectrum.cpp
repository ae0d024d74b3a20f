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
#include "iocg/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace iocg {

std::vector<double> eigenvalues_numeric(const SymbolSet& symbol) {
  const Int n = symbol.order();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (Int j = 0; j < n; ++j) {
    double mu = 0.0;
    for (Int k : symbol.elements()) {
      const Int jk = (j * k) % n;
      mu -= 2.0 * std::sin(2.0 * std::numbers::pi * static_cast<double>(jk) / static_cast<double>(n));
    }
    out[static_cast<std::size_t>(j)] = mu;
  }
  return out;
}

Spectrum eigenvalues_direct(const SymbolSet& symbol, double tolerance) {
  const auto raw = eigenvalues_numeric(symbol);
  Spectrum out{symbol.order(), {}};
  out.values.reserve(raw.size());
  for (double mu : raw) out.values.push_back(detail::round_integral(mu, tolerance, "eigenvalues_direct"));
  return out;
}

Spectrum eigenvalues_closed(const GraphSpec& spec) {
  const Int n = spec.order();
  Spectrum out{n, std::vector<Int>(static_cast<std::size_t>(n), 0)};
  if (spec.empty()) return out;

  const DivisorPartition partition = d_partition(spec);
  const int top = two_adic_valuation(n);
  for (Int j = 1; j < n; ++j) {
    const int level = two_adic_valuation(j) + 2;
    if (level > top) continue;
    const Int reduced = j >> (level - 2);  // odd by construction
    Int mu = 0;
    for (Int d : partition.level(level)) {
      const Int m = (n / d) >> level;
      const int sign_m = ((m - 1) / 2) % 2 == 0 ? 1 : -1;
      const int sign_j = ((reduced + 1) / 2) % 2 == 0 ? 1 : -1;
      mu += to_int(*spec.sign_of(d)) * sign_m * sign_j * (Int{1} << (level - 1)) * ramanujan_sum(m, reduced);
    }
    out.values[static_cast<std::size_t>(j)] = mu;
  }
  return out;
}

std::complex<double> transition_entry(const Spectrum& spectrum, Int a, Int b, double t) {
  const Int n = spectrum.n;
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw std::out_of_range("transition_entry: vertex outside [0, n)");
  }
  const Int offset = ((a - b) % n + n) % n;
  std::complex<double> sum{0.0, 0.0};
  for (Int r = 0; r < n; ++r) {
    // Reduce the Fourier phase exactly before scaling.
    const Int phase = (r * offset) % n;
    const double angle = static_cast<double>(spectrum.values[static_cast<std::size_t>(r)]) * t +
                         2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(n);
    sum += std::polar(1.0, angle);
  }
  return sum / static_cast<double>(n);
}

}  // namespace iocg
