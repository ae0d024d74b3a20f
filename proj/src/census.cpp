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
#include "iocg/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "iocg/transfer.hpp"

namespace iocg {

namespace {

std::uint64_t pow3(Int exponent) {
  if (exponent < 0) throw std::logic_error("pow3: negative exponent");
  if (exponent > 40) throw std::overflow_error("3^" + std::to_string(exponent) + " does not fit in 64 bits");
  std::uint64_t out = 1;
  for (Int i = 0; i < exponent; ++i) out *= 3;
  return out;
}

Int odd_part(Int n) { return n >> two_adic_valuation(n); }

}  // namespace

std::string_view to_string(TransferKind kind) noexcept { return kind == TransferKind::pst ? "pst" : "mst"; }

std::optional<TransferKind> parse_transfer_kind(std::string_view text) noexcept {
  if (text == "pst") return TransferKind::pst;
  if (text == "mst") return TransferKind::mst;
  return std::nullopt;
}

std::vector<GraphSpec> all_specs(Int n, Int cap) {
  if (n < 1) throw std::invalid_argument("census: order must be positive, got " + std::to_string(n));
  if (n > cap) {
    throw std::invalid_argument("census: n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                std::to_string(cap));
  }
  if (n % 4 != 0) return {GraphSpec(n)};

  const auto ds = divisors(n / 4);
  if (ds.size() > kMaxCensusDivisors) {
    throw std::invalid_argument("census: n = " + std::to_string(n) + " has 3^" + std::to_string(ds.size()) +
                                " candidate specs, above the limit 3^" + std::to_string(kMaxCensusDivisors));
  }
  const std::uint64_t total = pow3(static_cast<Int>(ds.size()));

  std::vector<GraphSpec> out;
  out.reserve(static_cast<std::size_t>(total));
  // Mixed-radix counter over the ascending divisor list; digit 0 = absent.
  std::vector<int> digits(ds.size(), 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    GraphSpec::DivisorSigns signs;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (digits[i] == 1) signs.emplace(ds[i], Sign::plus);
      if (digits[i] == 2) signs.emplace(ds[i], Sign::minus);
    }
    out.emplace_back(n, std::move(signs));
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < 3) break;
      digits[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CensusRecord enumerate(Int n, TransferKind kind, Int cap) {
  CensusRecord record;
  record.n = n;
  record.kind = kind;
  for (auto& spec : all_specs(n, cap)) {
    const bool keep = kind == TransferKind::pst ? has_pst(spec) : has_mst(spec);
    if (keep) record.specs.push_back(std::move(spec));
  }
  record.enumerated_count = record.specs.size();
  record.formula_count = kind == TransferKind::pst ? count_pst_formula(n) : count_mst_formula(n);
  return record;
}

std::uint64_t count_pst_formula(Int n) {
  if (n < 1) throw std::invalid_argument("count_pst_formula: order must be positive");
  if (n % 4 != 0) return 0;
  return 2 * pow3(divisor_count(n / 4) - divisor_count(odd_part(n)));
}

std::uint64_t count_mst_formula(Int n) {
  if (n < 1) throw std::invalid_argument("count_mst_formula: order must be positive");
  if (n % 8 != 0) return 0;
  return 4 * pow3(divisor_count(n / 4) - 2 * divisor_count(odd_part(n)));
}

}  // namespace iocg
