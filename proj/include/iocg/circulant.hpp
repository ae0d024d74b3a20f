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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "iocg/numtheory.hpp"

namespace iocg {

/// Raised when a symbol set is oriented but is not the symbol of an
/// integral oriented circulant graph.
class NotIntegral : public std::domain_error {
 public:
  explicit NotIntegral(const std::string& reason) : std::domain_error("not integral: " + reason) {}
};

/**
 * An integral oriented circulant graph given by its order n, a set D of
 * divisors of n/4 and a sign for each of them.
 *
 * The symbol is the disjoint union over d in D of G_n^1(d) (sign +1) or
 * G_n^3(d) (sign -1). The empty divisor map is the empty graph and is valid
 * for every n >= 1.
 */
class GraphSpec {
 public:
  using DivisorSigns = std::map<Int, Sign>;

  /// Empty graph on one vertex.
  GraphSpec() = default;

  /// Throws std::invalid_argument unless n >= 1, and, when the map is
  /// nonempty, 4 | n and every key divides n/4.
  explicit GraphSpec(Int n, DivisorSigns divisor_signs = {});

  Int order() const noexcept { return n_; }
  const DivisorSigns& divisor_signs() const noexcept { return signs_; }
  bool empty() const noexcept { return signs_.empty(); }
  bool contains(Int d) const { return signs_.count(d) != 0; }
  std::optional<Sign> sign_of(Int d) const;

  bool operator==(const GraphSpec&) const = default;
  /// Canonical order: by n, then lexicographically by (d, sign) list.
  bool operator<(const GraphSpec& other) const;

 private:
  Int n_ = 1;
  DivisorSigns signs_;
};

/// Connection set C of an oriented circulant graph on Z_n.
/// Elements are stored sorted; C and -C are disjoint.
class SymbolSet {
 public:
  SymbolSet() = default;

  /// Throws std::invalid_argument when an element is outside [1, n-1],
  /// or when both k and n-k occur (including k = n/2). Duplicates collapse.
  SymbolSet(Int n, std::vector<Int> elements);

  Int order() const noexcept { return n_; }
  const std::vector<Int>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(Int k) const;

  bool operator==(const SymbolSet&) const = default;

 private:
  Int n_ = 1;
  std::vector<Int> elements_;
};

/// D grouped by level i = v2(n/d), for i in [0, v2(n)].
struct DivisorPartition {
  Int n = 1;
  std::vector<std::vector<Int>> levels;

  /// D_i; empty for levels outside [0, v2(n)].
  std::span<const Int> level(int i) const;
  /// True iff D_i is exactly {d}.
  bool level_is(int i, Int d) const;
};

/// Arc pattern of the Hermitian adjacency matrix: +1 at (u, v) encodes
/// H[u][v] = i, -1 encodes -i.
class HermitianAdjacency {
 public:
  explicit HermitianAdjacency(const SymbolSet& symbol);

  Int order() const noexcept { return n_; }
  int arc(Int u, Int v) const { return row_[static_cast<std::size_t>(((v - u) % n_ + n_) % n_)]; }
  std::complex<double> entry(Int u, Int v) const { return {0.0, static_cast<double>(arc(u, v))}; }
  std::vector<int> row(Int u) const;

 private:
  Int n_;
  // The matrix is circulant; row 0 determines it.
  std::vector<int> row_;
};

SymbolSet build_symbol(const GraphSpec& spec);

/// Recovers (n, D, sigma) from an oriented symbol. Throws
/// std::invalid_argument for non-oriented input and NotIntegral when C is
/// not a disjoint union of classes G_n^r(d), d | n/4.
GraphSpec classify_symbol(Int n, std::span<const Int> symbol);

/// Non-throwing variant; std::nullopt on rejection, with the reason in `why`.
std::optional<GraphSpec> try_classify_symbol(Int n, std::span<const Int> symbol,
                                             std::string* why = nullptr);

HermitianAdjacency hermitian_adjacency(const SymbolSet& symbol);

DivisorPartition d_partition(const GraphSpec& spec);

}  // namespace iocg
