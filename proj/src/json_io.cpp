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
#include "iocg/json_io.hpp"

#include <stdexcept>
#include <string>

namespace iocg {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("json: missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json: bad field \"") + key + "\": " + e.what());
  }
}

Sign sign_from_int(Int s) {
  if (s == 1) return Sign::plus;
  if (s == -1) return Sign::minus;
  throw std::invalid_argument("json: sign must be 1 or -1, got " + std::to_string(s));
}

}  // namespace

Json to_json(const GraphSpec& spec) {
  Json divisors = Json::array();
  for (const auto& [d, sign] : spec.divisor_signs()) divisors.push_back(Json{{"d", d}, {"sign", to_int(sign)}});
  return Json{{"n", spec.order()}, {"divisors", std::move(divisors)}};
}

Json to_json(const SymbolSet& symbol) { return Json{{"n", symbol.order()}, {"symbol", symbol.elements()}}; }

Json to_json(const Spectrum& spectrum) { return Json{{"n", spectrum.n}, {"eigenvalues", spectrum.values}}; }

Json to_json(const TransferCertificate& c) {
  return Json{{"a", c.a},
              {"b", c.b},
              {"p", c.time.p()},
              {"q", c.time.q()},
              {"t", c.time.radians()},
              {"phase_re", c.phase.real()},
              {"phase_im", c.phase.imag()},
              {"fidelity", c.fidelity},
              {"criterion", std::string(to_string(c.criterion))}};
}

Json to_json(const CensusRecord& record) {
  Json specs = Json::array();
  for (const auto& spec : record.specs) specs.push_back(to_json(spec));
  return Json{{"n", record.n},
              {"kind", std::string(to_string(record.kind))},
              {"formula_count", record.formula_count},
              {"enumerated_count", record.enumerated_count},
              {"specs", std::move(specs)}};
}

GraphSpec graph_spec_from_json(const Json& j) {
  const Int n = field<Int>(j, "n");
  GraphSpec::DivisorSigns signs;
  const Json entries = j.contains("divisors") ? j.at("divisors") : Json::array();
  if (!entries.is_array()) throw std::invalid_argument("json: \"divisors\" must be an array");
  for (const auto& entry : entries) {
    const Int d = field<Int>(entry, "d");
    if (!signs.emplace(d, sign_from_int(field<Int>(entry, "sign"))).second) {
      throw std::invalid_argument("json: divisor " + std::to_string(d) + " listed twice");
    }
  }
  return GraphSpec(n, std::move(signs));
}

SymbolSet symbol_set_from_json(const Json& j) {
  return SymbolSet(field<Int>(j, "n"), field<std::vector<Int>>(j, "symbol"));
}

Spectrum spectrum_from_json(const Json& j) {
  Spectrum out{field<Int>(j, "n"), field<std::vector<Int>>(j, "eigenvalues")};
  if (static_cast<Int>(out.values.size()) != out.n) {
    throw std::invalid_argument("json: spectrum length does not match n");
  }
  return out;
}

CensusRecord census_from_json(const Json& j) {
  CensusRecord record;
  record.n = field<Int>(j, "n");
  const auto kind = parse_transfer_kind(field<std::string>(j, "kind"));
  if (!kind) throw std::invalid_argument("json: kind must be \"pst\" or \"mst\"");
  record.kind = *kind;
  record.formula_count = field<std::uint64_t>(j, "formula_count");
  record.enumerated_count = field<std::uint64_t>(j, "enumerated_count");
  for (const auto& spec : field<Json>(j, "specs")) record.specs.push_back(graph_spec_from_json(spec));
  return record;
}

}  // namespace iocg
