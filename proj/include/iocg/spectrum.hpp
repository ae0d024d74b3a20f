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
#include <vector>

#include "iocg/circulant.hpp"

namespace iocg {

/// Integer Hermitian eigenvalues mu_0 .. mu_{n-1}, indexed by Fourier index j.
struct Spectrum {
  Int n = 1;
  std::vector<Int> values;

  Int operator[](Int j) const { return values[static_cast<std::size_t>(((j % n) + n) % n)]; }
  bool operator==(const Spectrum&) const = default;
};

/// Raw eigenvalues -sum_{k in C} 2 sin(2 pi j k / n) in double precision.
/// Valid for any oriented symbol, integral or not.
std::vector<double> eigenvalues_numeric(const SymbolSet& symbol);

/// Rounds eigenvalues_numeric; throws std::logic_error if any value is
/// farther than `tolerance` from an integer.
Spectrum eigenvalues_direct(const SymbolSet& symbol, double tolerance = 1e-6);

/// Exact spectrum from the divisor encoding: for j != 0 only the level
/// i = v2(j) + 2 contributes, through sigma(d) times the closed sine sum.
Spectrum eigenvalues_closed(const GraphSpec& spec);

/// U(t)_{ab} = (1/n) sum_r exp(i (mu_r t + 2 pi r (a - b) / n)).
std::complex<double> transition_entry(const Spectrum& spectrum, Int a, Int b, double t);

}  // namespace iocg
