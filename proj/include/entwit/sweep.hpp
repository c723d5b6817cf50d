/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef ENTWIT_SWEEP_HPP_
#define ENTWIT_SWEEP_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace entwit {

/// Default output directory for relative sweep paths, when set.
inline constexpr const char* kOutputDirEnvVar = "ENTWIT_OUTPUT_DIR";

enum class SweepMode {
  kQuditWitness,
  kCvWitness,
  kBellOverlap,
  kFig1,
  kFig2,
  kOracleCheck,
};

std::string to_string(SweepMode mode);
SweepMode sweep_mode_from_string(const std::string& name);

/// Inclusive linear range start..stop sampled at count points; count == 1
/// collapses to {start}.
struct ParamRange {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> values() const;
};

/// Parses "value" or "start:stop:count".
ParamRange parse_range(const std::string& text);

struct SweepConfig {
  SweepMode mode = SweepMode::kCvWitness;
  ParamRange d{2.0, 2.0, 1};
  ParamRange p{0.5, 0.5, 1};
  ParamRange sigma{1.0, 1.0, 1};
  ParamRange Sigma{1.0, 1.0, 1};
  ParamRange Gamma{1.0, 1.0, 1};
  ParamRange m{0.0, 0.0, 1};
  std::uint64_t seed = 1;
  std::string out;  // empty: "<mode>.csv"
  std::string input_kind = "max-entangled";
  int grid_n = 0;  // oracle-check: 0 derives the grid from the spacing rules
  int points_per_scale = 4;
};

/// Mode-specific defaults for ranges and output name.
SweepConfig default_config(SweepMode mode);

/// Parses a JSON object; unknown keys and malformed ranges raise
/// ConfigError. Fields missing from the JSON keep their values from `base`.
SweepConfig apply_json_config(const SweepConfig& base,
                              const std::string& json_text);

/// Reads and applies a JSON config file.
SweepConfig load_config_file(const SweepConfig& base,
                             const std::string& path);

/// Domain validation; raises ConfigError before any computation runs.
void validate_config(const SweepConfig& config);

/// A fully rendered sweep: CSV text (header + rows, LF line ends, floats
/// with 17 significant digits) plus the oracle verdict where applicable.
struct SweepResult {
  std::string csv;
  std::size_t rows = 0;
  bool oracle_ok = true;
};

SweepResult render_sweep(const SweepConfig& config);

/// Output location: explicit path, or "<mode>.csv", prefixed by
/// ENTWIT_OUTPUT_DIR when relative and the variable is set.
std::filesystem::path resolve_output_path(const SweepConfig& config);

struct SweepOutcome {
  std::filesystem::path path;
  std::size_t rows = 0;
  bool oracle_ok = true;
};

/// Renders the sweep and writes the CSV; raises IoError on write failure.
SweepOutcome run_sweep(const SweepConfig& config);

/// Round-trip safe float formatting used for every CSV numeric cell.
std::string format_csv_double(double value);

}  // namespace entwit

#endif  // ENTWIT_SWEEP_HPP_
