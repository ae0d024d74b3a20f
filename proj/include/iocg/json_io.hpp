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

// JSON shapes shared by the CLI and downstream scripts:
//   GraphSpec   {"n": 8, "divisors": [{"d": 1, "sign": 1}, {"d": 2, "sign": -1}]}
//   SymbolSet   {"n": 8, "symbol": [1, 5, 6]}
//   Spectrum    {"n": 8, "eigenvalues": [0, 2, -4, -2, 0, 2, 4, -2]}
//   TransferCertificate {"a", "b", "p", "q", "t", "phase_re", "phase_im", "fidelity", "criterion"}
//   CensusRecord {"n", "kind", "formula_count", "enumerated_count", "specs": [GraphSpec, ...]}
// Lists are written in ascending order. Loaders validate through the
// constructors and throw std::invalid_argument on malformed input.

#include "json.hpp"

#include "iocg/census.hpp"
#include "iocg/circulant.hpp"
#include "iocg/spectrum.hpp"
#include "iocg/transfer.hpp"

namespace iocg {

using Json = nlohmann::ordered_json;

Json to_json(const GraphSpec& spec);
Json to_json(const SymbolSet& symbol);
Json to_json(const Spectrum& spectrum);
Json to_json(const TransferCertificate& certificate);
Json to_json(const CensusRecord& record);

GraphSpec graph_spec_from_json(const Json& j);
SymbolSet symbol_set_from_json(const Json& j);
Spectrum spectrum_from_json(const Json& j);
CensusRecord census_from_json(const Json& j);

}  // namespace iocg
