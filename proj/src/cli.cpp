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
#include "iocg/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "iocg/census.hpp"
#include "iocg/circulant.hpp"
#include "iocg/json_io.hpp"
#include "iocg/spectrum.hpp"
#include "iocg/transfer.hpp"

namespace iocg::cli {

namespace {

// Raised for cross-check failures; maps to kInternal.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for bad user input that is not a library precondition.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpecSource {
  Int n = 0;
  std::vector<std::string> divisors;
  std::vector<Int> symbol;
  std::string spec_file;
};

void add_spec_source(CLI::App* sub, SpecSource& src) {
  sub->add_option("--n", src.n, "Order of the graph");
  sub->add_option("--divisor", src.divisors, "Divisor with sign, d:+1 or d:-1 (repeatable)");
  sub->add_option("--symbol", src.symbol, "Raw symbol set, comma separated")->delimiter(',');
  sub->add_option("--spec-file", src.spec_file, "GraphSpec or SymbolSet JSON file");
}

std::pair<Int, Sign> parse_divisor(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--divisor expects d:+1 or d:-1, got '" + text + "'");
  const std::string d_text = text.substr(0, colon);
  const std::string s_text = text.substr(colon + 1);
  Int d = 0;
  try {
    std::size_t used = 0;
    d = std::stoll(d_text, &used);
    if (used != d_text.size()) throw std::invalid_argument(d_text);
  } catch (const std::exception&) {
    throw UsageError("--divisor: bad divisor '" + d_text + "'");
  }
  if (s_text == "+1" || s_text == "1") return {d, Sign::plus};
  if (s_text == "-1") return {d, Sign::minus};
  throw UsageError("--divisor: sign must be +1 or -1, got '" + s_text + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("cannot parse " + path + ": " + e.what());
  }
}

GraphSpec resolve_spec(const SpecSource& src) {
  if (!src.spec_file.empty()) {
    const Json j = read_json_file(src.spec_file);
    if (j.contains("symbol")) {
      const SymbolSet symbol = symbol_set_from_json(j);
      return classify_symbol(symbol.order(), symbol.elements());
    }
    return graph_spec_from_json(j);
  }
  if (src.n < 1) throw UsageError("an order --n >= 1 (or --spec-file) is required");
  if (!src.symbol.empty()) {
    if (!src.divisors.empty()) throw UsageError("--symbol and --divisor are mutually exclusive");
    return classify_symbol(src.n, src.symbol);
  }
  GraphSpec::DivisorSigns signs;
  for (const auto& text : src.divisors) {
    const auto [d, sign] = parse_divisor(text);
    if (!signs.emplace(d, sign).second) throw UsageError("divisor " + std::to_string(d) + " given twice");
  }
  return GraphSpec(src.n, std::move(signs));
}

std::string braces(std::span<const Int> xs) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? ", " : "") << xs[i];
  s << '}';
  return s.str();
}

std::string describe(const GraphSpec& spec) {
  std::ostringstream s;
  s << '{';
  bool first = true;
  for (const auto& [d, sign] : spec.divisor_signs()) {
    s << (first ? "" : ", ") << d << ':' << (sign == Sign::plus ? "+1" : "-1");
    first = false;
  }
  s << '}';
  return s.str();
}

Json partition_json(const DivisorPartition& partition) {
  Json out = Json::object();
  for (int i = 2; i < static_cast<int>(partition.levels.size()); ++i) {
    auto level = partition.level(i);
    out[std::to_string(i)] = std::vector<Int>(level.begin(), level.end());
  }
  return out;
}

Json profile_json(const ValuationProfile& profile) {
  Json out = Json::array();
  for (const auto& v : profile.values) {
    if (v) {
      out.push_back(*v);
    } else {
      out.push_back("inf");
    }
  }
  return out;
}

std::string profile_text(const ValuationProfile& profile) {
  std::ostringstream s;
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    s << (i ? " " : "");
    if (profile.values[i]) {
      s << *profile.values[i];
    } else {
      s << "inf";
    }
  }
  return s.str();
}

std::string certificate_text(const TransferCertificate& c) {
  std::ostringstream s;
  s << "a=" << c.a << " b=" << c.b << " t'=" << c.time.p() << '/' << c.time.q() << " t=" << std::setprecision(10)
    << c.time.radians() << " phase=" << c.phase.real() << (c.phase.imag() < 0 ? "" : "+") << c.phase.imag()
    << "i fidelity=" << std::setprecision(15) << c.fidelity << " [" << to_string(c.criterion) << ']';
  return s.str();
}

int cmd_inspect(const CliConfig& config, const SpecSource& src, std::ostream& out) {
  const GraphSpec spec = resolve_spec(src);
  const SymbolSet symbol = build_symbol(spec);
  const DivisorPartition partition = d_partition(spec);

  if (config.output_format == OutputFormat::json) {
    Json j = to_json(spec);
    j["symbol"] = symbol.elements();
    j["partition"] = partition_json(partition);
    j["integral"] = true;
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "n: " << spec.order() << '\n';
  out << "integral: yes" << (spec.empty() ? " (empty graph)" : "") << '\n';
  out << "divisors:\n";
  out << "  d\tsign\tlevel\n";
  for (const auto& [d, sign] : spec.divisor_signs()) {
    out << "  " << d << '\t' << (sign == Sign::plus ? "+1" : "-1") << '\t' << two_adic_valuation(spec.order() / d)
        << '\n';
  }
  out << "symbol: " << braces(symbol.elements()) << '\n';
  out << "partition:\n";
  for (int i = 2; i < static_cast<int>(partition.levels.size()); ++i) {
    out << "  D_" << i << " = " << braces(partition.level(i)) << '\n';
  }
  return kOk;
}

int cmd_spectrum(const CliConfig& config, const SpecSource& src, bool verify, std::ostream& out) {
  const GraphSpec spec = resolve_spec(src);
  const Spectrum spectrum = eigenvalues_closed(spec);
  if (verify) {
    Spectrum direct;
    try {
      direct = eigenvalues_direct(build_symbol(spec));
    } catch (const std::logic_error& e) {
      throw InternalError(std::string("direct evaluation failed: ") + e.what());
    }
    if (direct != spectrum) throw InternalError("closed-form spectrum disagrees with the direct sine sums");
  }
  if (config.output_format == OutputFormat::json) {
    Json j = to_json(spectrum);
    if (verify) j["verified"] = true;
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "j\tmu_j\n";
  for (Int j = 0; j < spectrum.n; ++j) out << j << '\t' << spectrum[j] << '\n';
  if (verify) out << "verified: closed form matches direct evaluation\n";
  return kOk;
}

int cmd_check(const CliConfig& config, const SpecSource& src, const std::string& mode, std::ostream& out) {
  const GraphSpec spec = resolve_spec(src);
  const Int n = spec.order();
  const Spectrum spectrum = eigenvalues_closed(spec);
  const DivisorPartition partition = d_partition(spec);
  const ValuationProfile step1 = valuation_profile(spectrum, 1);
  const ValuationProfile step2 = valuation_profile(spectrum, 2);

  bool positive = false;
  std::vector<Int> offsets;
  if (mode == "pst") {
    positive = has_pst(spec);
    if (positive) offsets = {n / 2};
  } else if (mode == "mst") {
    positive = has_mst(spec);
    if (positive) offsets = pst_pair_offsets(spec);
  } else {
    positive = n >= 2 && has_ust(spec);
  }

  std::vector<TransferCertificate> certificates;
  for (Int offset : offsets) {
    auto certificate = certify(spec, offset, 0, config.tolerance);
    if (!certificate) {
      throw InternalError("divisor criterion holds but no transfer time exists for offset " + std::to_string(offset));
    }
    certificates.push_back(*certificate);
  }
  if (positive && mode == "pst") {
    certificates.push_back(*certify_by_divisor_criterion(spec, 0, config.tolerance));
    auto by_valuation = certify_by_valuation(spectrum, 0, config.tolerance);
    if (!by_valuation) throw InternalError("divisor criterion holds but the valuation profile is not constant");
    certificates.push_back(*by_valuation);
  }

  if (config.output_format == OutputFormat::json) {
    Json j = to_json(spec);
    j["mode"] = mode;
    j["decision"] = positive ? "positive" : "negative";
    auto level = [&](int i) {
      auto l = partition.level(i);
      return std::vector<Int>(l.begin(), l.end());
    };
    j["D2"] = level(2);
    j["D3"] = level(3);
    j["valuation_k1"] = profile_json(step1);
    j["valuation_k2"] = profile_json(step2);
    Json certs = Json::array();
    for (const auto& c : certificates) certs.push_back(to_json(c));
    j["certificates"] = std::move(certs);
    out << j.dump(2) << '\n';
    return positive ? kOk : kNegative;
  }

  out << "graph: n=" << n << " D=" << describe(spec) << '\n';
  out << "mode: " << mode << '\n';
  out << "decision: " << (positive ? "positive" : "negative") << '\n';
  out << "D_2 = " << braces(partition.level(2));
  if (n % 4 == 0) out << " (n/4 = " << n / 4 << ')';
  out << '\n';
  out << "D_3 = " << braces(partition.level(3));
  if (n % 8 == 0) out << " (n/8 = " << n / 8 << ')';
  out << '\n';
  out << "valuation k=1: " << profile_text(step1) << '\n';
  out << "valuation k=2: " << profile_text(step2) << '\n';
  if (mode == "ust") out << "note: transfer only occurs at offsets n/4, n/2, 3n/4\n";
  if (!certificates.empty()) {
    out << "certificates:\n";
    for (const auto& c : certificates) out << "  offset " << c.a - c.b << ": " << certificate_text(c) << '\n';
  }
  return positive ? kOk : kNegative;
}

int cmd_census(const CliConfig& config, Int n, const std::string& kind_text, bool list, std::ostream& out) {
  const auto kind = parse_transfer_kind(kind_text);
  if (!kind) throw UsageError("--kind must be pst or mst");
  const CensusRecord record = enumerate(n, *kind, config.enumeration_cap);
  const bool agree = record.enumerated_count == record.formula_count;

  if (config.output_format == OutputFormat::json) {
    out << to_json(record).dump(2) << '\n';
  } else {
    out << "n: " << record.n << '\n';
    out << "kind: " << to_string(record.kind) << '\n';
    out << "formula_count: " << record.formula_count << '\n';
    out << "enumerated_count: " << record.enumerated_count << '\n';
    out << record.formula_count << (agree ? " == " : " != ") << record.enumerated_count << '\n';
    if (list) {
      for (const auto& spec : record.specs) out << "  " << describe(spec) << '\n';
    }
  }
  if (!agree) throw InternalError("enumeration disagrees with the counting formula");
  return kOk;
}

void write_export(const GraphSpec& spec, const std::string& format, std::ostream& out) {
  const SymbolSet symbol = build_symbol(spec);
  const HermitianAdjacency adjacency = hermitian_adjacency(symbol);
  const Int n = spec.order();
  if (format == "json") {
    out << to_json(symbol).dump(2) << '\n';
  } else if (format == "csv") {
    for (Int u = 0; u < n; ++u) {
      for (Int v = 0; v < n; ++v) out << (v ? "," : "") << adjacency.arc(u, v);
      out << '\n';
    }
  } else {
    out << "digraph iocg_" << n << " {\n";
    for (Int u = 0; u < n; ++u) out << "  " << u << ";\n";
    for (Int u = 0; u < n; ++u) {
      for (Int v = 0; v < n; ++v) {
        if (adjacency.arc(u, v) == 1) out << "  " << u << " -> " << v << ";\n";
      }
    }
    out << "}\n";
  }
}

int cmd_export(const SpecSource& src, const std::string& format, const std::string& path, std::ostream& out) {
  const GraphSpec spec = resolve_spec(src);
  if (path.empty() || path == "-") {
    write_export(spec, format, out);
    return kOk;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  write_export(spec, format, file);
  file.close();
  if (!file) throw UsageError("failed writing " + path);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral oriented circulant graphs: spectra and quantum state transfer", "iocg"};
  app.require_subcommand(1);

  CliConfig config;
  std::string output = "table";
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--tolerance", config.tolerance, "Fidelity tolerance in (0, 1e-3]")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            double x = 0.0;
            try {
              x = std::stod(s);
            } catch (const std::exception&) {
              return "tolerance must be a number";
            }
            return (x > 0.0 && x <= 1e-3) ? std::string{} : "tolerance must lie in (0, 1e-3]";
          },
          "(0,1e-3]"));
  app.add_option("--cap", config.enumeration_cap, "Largest order accepted by census")
      ->check(CLI::Range(4LL, std::numeric_limits<long long>::max()));

  SpecSource inspect_src, spectrum_src, check_src, export_src;
  bool verify = false;
  std::string mode = "pst";
  Int census_n = 0;
  std::string census_kind = "pst";
  bool census_list = false;
  std::string export_format = "dot";
  std::string export_path;

  auto* inspect = app.add_subcommand("inspect", "Show D, sigma, the symbol and the level partition");
  add_spec_source(inspect, inspect_src);

  auto* spectrum = app.add_subcommand("spectrum", "Integer Hermitian spectrum");
  add_spec_source(spectrum, spectrum_src);
  spectrum->add_flag("--verify", verify, "Cross-check against direct sine sums");

  auto* check = app.add_subcommand("check", "Decide PST, MST or UST and certify transfers");
  add_spec_source(check, check_src);
  check->add_option("--mode", mode, "pst, mst or ust")->check(CLI::IsMember({"pst", "mst", "ust"}));

  auto* census = app.add_subcommand("census", "Enumerate all specs of order n with PST or MST");
  census->add_option("--n", census_n, "Order")->required();
  census->add_option("--kind", census_kind, "pst or mst")->check(CLI::IsMember({"pst", "mst"}));
  census->add_flag("--list", census_list, "Print every spec");

  auto* export_cmd = app.add_subcommand("export", "Write the graph as DOT, CSV arc matrix or symbol JSON");
  add_spec_source(export_cmd, export_src);
  export_cmd->add_option("--format", export_format, "dot, csv or json")->check(CLI::IsMember({"dot", "csv", "json"}));
  export_cmd->add_option("--out", export_path, "Destination file (default stdout)");

  for (auto* sub : {inspect, spectrum, check, census, export_cmd}) sub->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalid;
  }
  config.output_format = output == "json" ? OutputFormat::json : OutputFormat::table;

  try {
    if (*inspect) return cmd_inspect(config, inspect_src, out);
    if (*spectrum) return cmd_spectrum(config, spectrum_src, verify, out);
    if (*check) return cmd_check(config, check_src, mode, out);
    if (*census) return cmd_census(config, census_n, census_kind, census_list, out);
    if (*export_cmd) return cmd_export(export_src, export_format, export_path, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const NotIntegral& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInvalid;
}

}  // namespace iocg::cli
