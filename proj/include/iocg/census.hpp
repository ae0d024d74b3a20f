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
#include <optional>
#include <string_view>
#include <vector>

#include "iocg/circulant.hpp"

namespace iocg {

enum class TransferKind { pst, mst };

std::string_view to_string(TransferKind kind) noexcept;
std::optional<TransferKind> parse_transfer_kind(std::string_view text) noexcept;

inline constexpr Int kDefaultEnumerationCap = 1024;
/// Enumeration visits 3^tau(n/4) candidates; tau(n/4) is capped here.
inline constexpr std::size_t kMaxCensusDivisors = 13;

struct CensusRecord {
  Int n = 1;
  TransferKind kind = TransferKind::pst;
  std::vector<GraphSpec> specs;
  std::uint64_t enumerated_count = 0;
  std::uint64_t formula_count = 0;
};

/// Every integral oriented circulant spec of order n: all maps from the
/// divisors of n/4 to {absent, +1, -1} when 4 | n, else the empty spec alone.
/// Sorted canonically. Throws std::invalid_argument if n exceeds `cap` or
/// tau(n/4) exceeds kMaxCensusDivisors.
std::vector<GraphSpec> all_specs(Int n, Int cap = kDefaultEnumerationCap);

/// Exhaustive census of specs with PST (or MST), with the closed-form count.
CensusRecord enumerate(Int n, TransferKind kind, Int cap = kDefaultEnumerationCap);

/// 2 * 3^(tau(n/4) - tau(n / 2^v2(n))) for 4 | n, else 0.
std::uint64_t count_pst_formula(Int n);

/// 4 * 3^(tau(n/4) - 2 tau(n / 2^v2(n))) for 8 | n, else 0.
std::uint64_t count_mst_formula(Int n);

}  // namespace iocg
