// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the C API.
//
// Exit codes: 0 the checked property holds, 1 it fails, 2 usage, parse,
// I/O or guardrail errors.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "antimatroid/antimatroid.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

// Raised for any condition that maps to exit code 2.
struct UsageError {
  std::string message;
};

struct Owned {
  char* text = nullptr;
  ~Owned() { am_string_free(text); }
  std::string str() const { return text ? text : ""; }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
};

using System = Handle<am_system, am_system_free>;
using Function = Handle<am_function, am_function_free>;
using Linkage = Handle<am_linkage, am_linkage_free>;

void check(am_status status, const std::string& context) {
  if (status == AM_OK) return;
  throw UsageError{context + ": " + am_status_name(status) + ": " + am_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError{"cannot write " + path};
}

struct Config {
  std::string system_path;
  std::string function_path;
  std::vector<std::string> linkage_paths;
  std::string out_path;
  std::uint32_t n = 0;
  std::optional<int> k;
  std::string family_class = "antimatroid";
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;
  std::int64_t codomain_max = 0;
  std::int64_t raw_min = 0;
  std::int64_t raw_max = 0;
  std::uint64_t function_cap = 0;
  bool allow_nonmonotone = false;
  bool allow_non_quasi_concave = false;
  bool extend_maximal = false;
  bool no_timing = false;
  bool quiet = false;
};

// Verdict lines go to stdout unless stdout carries the JSON payload.
std::ostream& report_stream(const Config& cfg) {
  return cfg.out_path.empty() ? std::cerr : std::cout;
}

void warn(const Config& cfg, const std::string& message) {
  if (!cfg.quiet) std::cerr << "warning: " << message << "\n";
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    write_file(cfg.out_path, text);
  }
}

std::string format_set(const json& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i].get<std::string>();
  }
  return out + "}";
}

std::string yes_no(int b) { return b ? "yes" : "no"; }

void load_system(const Config& cfg, System& system) {
  if (cfg.system_path.empty()) throw UsageError{"--system is required"};
  check(am_system_from_json(read_file(cfg.system_path).c_str(), &system.ptr), cfg.system_path);
}

int k_arg(const Config& cfg) { return cfg.k.value_or(0); }

int cmd_check(const Config& cfg) {
  System system;
  load_system(cfg, system);
  am_system_properties p{};
  check(am_system_properties_get(system.ptr, &p), "check");
  std::cout << "accessible: " << yes_no(p.accessible) << "\n"
            << "exchange: " << yes_no(p.exchange) << "\n"
            << "union-closed: " << yes_no(p.union_closed) << "\n"
            << "interval property: " << yes_no(p.interval) << "\n"
            << "rank: " << p.rank << "\n";
  for (int k = 1; k <= p.rank; ++k) {
    int holds = 0;
    check(am_system_truncated_interval(system.ptr, k, &holds), "check");
    std::cout << "truncated interval property (k=" << k << "): " << yes_no(holds) << "\n";
  }
  if (p.antimatroid) {
    std::cout << "antimatroid: yes, rank " << p.rank << "\n";
    return kHolds;
  }
  Owned violation;
  check(am_system_interval_violation(system.ptr, 0, &violation.text), "check");
  if (!p.accessible) {
    std::cout << "antimatroid: no (not accessible)\n";
  } else if (violation.text) {
    const json v = json::parse(violation.text);
    std::cout << "antimatroid: no (interval property fails at A=" << format_set(v["A"])
              << ",B=" << format_set(v["B"]) << ",a=" << v["a"].get<std::string>() << ")\n";
  } else {
    std::cout << "antimatroid: no\n";
  }
  return kFails;
}

int cmd_dualize(const Config& cfg) {
  if (cfg.function_path.empty()) throw UsageError{"--function is required"};
  System system;
  load_system(cfg, system);
  Function f;
  check(am_function_from_json(system.ptr, k_arg(cfg), read_file(cfg.function_path).c_str(),
                              &f.ptr),
        cfg.function_path);
  int qc = 0;
  Owned violation;
  check(am_function_quasi_concave(f.ptr, &qc, &violation.text), "dualize");
  if (!qc) {
    const json v = json::parse(violation.text);
    const std::string where = "X=" + format_set(v["X"]) + ",Y=" + format_set(v["Y"]) +
                              ",Z=" + format_set(v["Z"]);
    if (!cfg.allow_non_quasi_concave) {
      std::cerr << "error: function is not quasi-concave (" << where
                << "); pass --allow-non-quasi-concave to build the linkage anyway\n";
      std::cout << "represents: false\n";
      return kFails;
    }
    warn(cfg, "function is not quasi-concave (" + where + ")");
  }
  Linkage pi;
  check(am_dualize(f.ptr, &pi.ptr), "dualize");
  int rep = 0;
  check(am_represents(pi.ptr, f.ptr, &rep), "dualize");
  Owned text;
  check(am_linkage_to_json(pi.ptr, &text.text), "dualize");
  emit(cfg, text.str());
  report_stream(cfg) << "represents: " << (rep ? "true" : "false") << "\n";
  return rep ? kHolds : kFails;
}

int cmd_extract(const Config& cfg) {
  if (cfg.linkage_paths.size() != 1) throw UsageError{"extract takes exactly one --linkage"};
  System system;
  load_system(cfg, system);
  Linkage pi;
  check(am_linkage_from_json(system.ptr, read_file(cfg.linkage_paths[0]).c_str(), &pi.ptr),
        cfg.linkage_paths[0]);
  int monotone = 0;
  Owned mv;
  check(am_linkage_monotone(pi.ptr, &monotone, &mv.text), "extract");
  if (!monotone) {
    const json v = json::parse(mv.text);
    const std::string where = v.dump();
    if (!cfg.allow_nonmonotone) {
      std::cerr << "error: linkage is not monotone " << where
                << "; pass --allow-nonmonotone to extract anyway\n";
      return kFails;
    }
    warn(cfg, "linkage is not monotone " + where);
  }
  Function f;
  check(am_extract(pi.ptr, system.ptr, k_arg(cfg), &f.ptr), "extract");
  int qc = 0;
  Owned qv;
  check(am_function_quasi_concave(f.ptr, &qc, &qv.text), "extract");
  if (!qc) {
    const json v = json::parse(qv.text);
    warn(cfg, "extracted function is not quasi-concave (X=" + format_set(v["X"]) + ",Y=" +
                  format_set(v["Y"]) + ",Z=" + format_set(v["Z"]) + ")");
  }
  Owned text;
  if (cfg.extend_maximal) {
    Function full;
    check(am_extend_to_maximal(f.ptr, pi.ptr, &full.ptr), "extract");
    check(am_function_to_json(full.ptr, &text.text), "extract");
  } else {
    check(am_function_to_json(f.ptr, &text.text), "extract");
  }
  emit(cfg, text.str());
  return kHolds;
}

int cmd_meet(const Config& cfg) {
  if (cfg.linkage_paths.size() != 2) throw UsageError{"meet takes exactly two --linkage files"};
  System system;
  if (!cfg.system_path.empty()) load_system(cfg, system);
  Linkage a;
  Linkage b;
  check(am_linkage_from_json(system.ptr, read_file(cfg.linkage_paths[0]).c_str(), &a.ptr),
        cfg.linkage_paths[0]);
  check(am_linkage_from_json(system.ptr, read_file(cfg.linkage_paths[1]).c_str(), &b.ptr),
        cfg.linkage_paths[1]);
  Linkage m;
  check(am_linkage_meet(a.ptr, b.ptr, &m.ptr), "meet");
  int monotone = 0;
  check(am_linkage_monotone(m.ptr, &monotone, nullptr), "meet");
  Owned text;
  check(am_linkage_to_json(m.ptr, &text.text), "meet");
  emit(cfg, text.str());
  report_stream(cfg) << "monotone: " << yes_no(monotone) << "\n";
  return monotone ? kHolds : kFails;
}

struct EnumerationSink {
  std::ostream* out;
};

int print_family(const char* system_json, void* user_data) {
  *static_cast<EnumerationSink*>(user_data)->out << system_json << "\n";
  return 0;
}

int cmd_enumerate(const Config& cfg) {
  std::ofstream file;
  EnumerationSink sink{&std::cout};
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError{"cannot write " + cfg.out_path};
    sink.out = &file;
  }
  std::uint64_t count = 0;
  check(am_enumerate(cfg.n, cfg.family_class.c_str(), cfg.k.value_or(-1), print_family, &sink,
                     &count),
        "enumerate");
  std::cout << "count: " << count << "\n";
  return kHolds;
}

int cmd_verify(const Config& cfg) {
  am_verify_options o;
  am_verify_options_init(&o);
  o.n = cfg.n;
  o.family_class = cfg.family_class.c_str();
  o.k = cfg.k.value_or(-1);
  o.seed = cfg.seed;
  if (cfg.samples) o.samples = cfg.samples;
  if (cfg.codomain_max) o.codomain_max = cfg.codomain_max;
  if (cfg.raw_min || cfg.raw_max) {
    o.raw_min = cfg.raw_min;
    o.raw_max = cfg.raw_max;
  }
  if (cfg.function_cap) o.function_cap = cfg.function_cap;
  o.include_timing = cfg.no_timing ? 0 : 1;
  Owned report;
  int passed = 0;
  check(am_verify(&o, &report.text, &passed), "verify");
  emit(cfg, report.str());
  report_stream(cfg) << "verify: " << (passed ? "all suites passed" : "FAILURES") << "\n";
  return passed ? kHolds : kFails;
}

int cmd_example(const Config& cfg) {
  Owned system;
  Owned linkage;
  Owned function;
  check(am_example_files(&system.text, &linkage.text, &function.text), "example");
  if (cfg.out_path.empty()) {
    std::cout << "# system.json\n"
              << system.str() << "# linkage.json\n"
              << linkage.str() << "# function.json\n"
              << function.str();
    return kHolds;
  }
  const std::filesystem::path dir(cfg.out_path);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError{"cannot create " + dir.string() + ": " + ec.message()};
  write_file((dir / "system.json").string(), system.str());
  write_file((dir / "linkage.json").string(), linkage.str());
  write_file((dir / "function.json").string(), function.str());
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antimatroids, quasi-concave set functions and monotone linkages"};
  app.require_subcommand(1);
  Config cfg;
  app.add_flag("-q,--quiet", cfg.quiet, "Suppress warnings");

  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "Truncation level (defaults to the rank)")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_out = [&](CLI::App* sub, const char* what) {
    sub->add_option("--out", cfg.out_path, what);
  };

  auto* check_cmd = app.add_subcommand("check", "Test the antimatroid axioms on a set system");
  check_cmd->add_option("--system", cfg.system_path, "Set-system file")->required();

  auto* dualize = app.add_subcommand("dualize", "Build the canonical linkage of a set function");
  dualize->add_option("--system", cfg.system_path, "Set-system file")->required();
  dualize->add_option("--function", cfg.function_path, "Set-function file")->required();
  dualize->add_flag("--allow-non-quasi-concave", cfg.allow_non_quasi_concave,
                    "Build the linkage even if the function is not quasi-concave");
  add_k(dualize);
  add_out(dualize, "Linkage output file (default stdout)");

  auto* extract = app.add_subcommand("extract", "Extract the set function of a linkage");
  extract->add_option("--system", cfg.system_path, "Set-system file")->required();
  extract->add_option("--linkage", cfg.linkage_paths, "Linkage file")->required();
  extract->add_flag("--allow-nonmonotone", cfg.allow_nonmonotone,
                    "Skip the monotonicity requirement");
  extract->add_flag("--extend-maximal", cfg.extend_maximal,
                    "Also assign values to the maximal-size members");
  add_k(extract);
  add_out(extract, "Set-function output file (default stdout)");

  auto* meet = app.add_subcommand("meet", "Pointwise minimum of two linkages");
  meet->add_option("--linkage", cfg.linkage_paths, "Linkage file (give twice)")->required();
  meet->add_option("--system", cfg.system_path, "Set-system file supplying the ground set");
  add_out(meet, "Linkage output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "List all families of a class");
  enumerate->add_option("--n", cfg.n, "Ground-set size")->required();
  enumerate->add_option("--class", cfg.family_class, "Family class")->capture_default_str();
  enumerate->add_option("--k", cfg.k, "Keep only families of this rank")
      ->check(CLI::NonNegativeNumber);
  add_out(enumerate, "File receiving one system per line (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the theorem suites");
  verify->add_option("--n", cfg.n, "Ground-set size")->required();
  verify->add_option("--class", cfg.family_class, "Family class")->capture_default_str();
  verify->add_option("--k", cfg.k, "Keep only families of this rank")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "Random linkage tables per system")
      ->check(CLI::PositiveNumber);
  verify->add_option("--codomain-max", cfg.codomain_max,
                     "Set functions range over 0..codomain-max")
      ->check(CLI::PositiveNumber);
  verify->add_option("--raw-min", cfg.raw_min, "Smallest raw linkage value");
  verify->add_option("--raw-max", cfg.raw_max, "Largest raw linkage value");
  verify->add_option("--function-cap", cfg.function_cap,
                     "Set functions enumerated per system before subsampling")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", cfg.no_timing, "Omit elapsed_ms from the report");
  add_out(verify, "Report output file (default stdout)");

  auto* example = app.add_subcommand("example", "Print the two-element example instance");
  add_out(example, "Directory receiving system.json, linkage.json and function.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (verify->parsed() && verify->count("--raw-min") + verify->count("--raw-max") == 1) {
      throw UsageError{"--raw-min and --raw-max must be given together"};
    }
    if (check_cmd->parsed()) return cmd_check(cfg);
    if (dualize->parsed()) return cmd_dualize(cfg);
    if (extract->parsed()) return cmd_extract(cfg);
    if (meet->parsed()) return cmd_meet(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (example->parsed()) return cmd_example(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
