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
#include "iocg/circulant.hpp"

#include <algorithm>
#include <numeric>

namespace iocg {

GraphSpec::GraphSpec(Int n, DivisorSigns divisor_signs) : n_(n), signs_(std::move(divisor_signs)) {
  if (n_ < 1) throw std::invalid_argument("GraphSpec: order must be positive, got " + std::to_string(n_));
  if (signs_.empty()) return;
  if (n_ % 4 != 0) {
    throw std::invalid_argument("GraphSpec: a nonempty divisor set requires n = 0 (mod 4), got n = " +
                                std::to_string(n_));
  }
  for (const auto& [d, sign] : signs_) {
    if (d < 1 || (n_ / 4) % d != 0) {
      throw std::invalid_argument("GraphSpec: divisor " + std::to_string(d) + " does not divide n/4 = " +
                                  std::to_string(n_ / 4));
    }
    if (sign != Sign::plus && sign != Sign::minus) {
      throw std::invalid_argument("GraphSpec: sign must be +1 or -1");
    }
  }
}

std::optional<Sign> GraphSpec::sign_of(Int d) const {
  auto it = signs_.find(d);
  if (it == signs_.end()) return std::nullopt;
  return it->second;
}

bool GraphSpec::operator<(const GraphSpec& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return std::lexicographical_compare(
      signs_.begin(), signs_.end(), other.signs_.begin(), other.signs_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return to_int(x.second) < to_int(y.second);
      });
}

SymbolSet::SymbolSet(Int n, std::vector<Int> elements) : n_(n), elements_(std::move(elements)) {
  if (n_ < 1) throw std::invalid_argument("SymbolSet: order must be positive, got " + std::to_string(n_));
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Int k : elements_) {
    if (k < 1 || k >= n_) {
      throw std::invalid_argument("SymbolSet: element " + std::to_string(k) + " outside [1, " +
                                  std::to_string(n_ - 1) + "]");
    }
    if (contains(n_ - k)) {
      throw std::invalid_argument("SymbolSet: not oriented, both " + std::to_string(k) + " and " +
                                  std::to_string(n_ - k) + " are in the symbol");
    }
  }
}

bool SymbolSet::contains(Int k) const { return std::binary_search(elements_.begin(), elements_.end(), k); }

std::span<const Int> DivisorPartition::level(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= levels.size()) return {};
  return levels[static_cast<std::size_t>(i)];
}

bool DivisorPartition::level_is(int i, Int d) const {
  auto l = level(i);
  return l.size() == 1 && l.front() == d;
}

HermitianAdjacency::HermitianAdjacency(const SymbolSet& symbol)
    : n_(symbol.order()), row_(static_cast<std::size_t>(symbol.order()), 0) {
  for (Int k : symbol.elements()) {
    row_[static_cast<std::size_t>(k)] = 1;
    row_[static_cast<std::size_t>(n_ - k)] = -1;
  }
}

std::vector<int> HermitianAdjacency::row(Int u) const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (Int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = arc(u, v);
  return out;
}

SymbolSet build_symbol(const GraphSpec& spec) {
  std::vector<Int> elements;
  for (const auto& [d, sign] : spec.divisor_signs()) {
    const ResidueClass cls = gnr_set(spec.order(), d, residue_of(sign));
    elements.insert(elements.end(), cls.elements.begin(), cls.elements.end());
  }
  return SymbolSet(spec.order(), std::move(elements));
}

namespace {

// Greedy decomposition into classes G_n^r(d); unique because the G_n(d)
// partition [1, n-1].
GraphSpec decompose(const SymbolSet& symbol) {
  const Int n = symbol.order();
  if (symbol.empty()) return GraphSpec(n);
  if (n % 4 != 0) {
    throw NotIntegral("n = " + std::to_string(n) + " is not a multiple of 4 and the symbol is nonempty");
  }
  GraphSpec::DivisorSigns signs;
  std::vector<bool> claimed(static_cast<std::size_t>(n), false);
  for (Int k : symbol.elements()) {
    if (claimed[static_cast<std::size_t>(k)]) continue;
    const Int d = std::gcd(k, n);
    const Int r = (k / d) % 4;
    if ((n / 4) % d != 0) {
      throw NotIntegral("element " + std::to_string(k) + " has gcd " + std::to_string(d) +
                        " with n, which does not divide n/4");
    }
    if (r != 1 && r != 3) {
      throw NotIntegral("element " + std::to_string(k) + " is not d*k' with k' odd");
    }
    const ResidueClass cls = gnr_set(n, d, static_cast<int>(r));
    for (Int x : cls.elements) {
      if (!symbol.contains(x)) {
        throw NotIntegral("element " + std::to_string(k) + " requires " + std::to_string(x) +
                          " (class G_" + std::to_string(n) + "^" + std::to_string(r) + "(" + std::to_string(d) +
                          "))");
      }
      claimed[static_cast<std::size_t>(x)] = true;
    }
    signs.emplace(d, r == 1 ? Sign::plus : Sign::minus);
  }
  return GraphSpec(n, std::move(signs));
}

}  // namespace

GraphSpec classify_symbol(Int n, std::span<const Int> symbol) {
  return decompose(SymbolSet(n, std::vector<Int>(symbol.begin(), symbol.end())));
}

std::optional<GraphSpec> try_classify_symbol(Int n, std::span<const Int> symbol, std::string* why) {
  try {
    return classify_symbol(n, symbol);
  } catch (const std::exception& e) {
    if (why != nullptr) *why = e.what();
    return std::nullopt;
  }
}

HermitianAdjacency hermitian_adjacency(const SymbolSet& symbol) { return HermitianAdjacency(symbol); }

DivisorPartition d_partition(const GraphSpec& spec) {
  DivisorPartition out;
  out.n = spec.order();
  out.levels.resize(static_cast<std::size_t>(two_adic_valuation(spec.order())) + 1);
  for (const auto& [d, sign] : spec.divisor_signs()) {
    out.levels[static_cast<std::size_t>(two_adic_valuation(spec.order() / d))].push_back(d);
  }
  return out;
}

}  // namespace iocg
