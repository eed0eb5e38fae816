#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace biharm::cli {

enum ExitCode : int { kOk = 0, kInvalidConfig = 1, kViolation = 2, kInfeasible = 3 };

enum class Format { Json, Csv, Human };

struct RunConfig {
  std::string command;
  int m = 5;
  int ell = 1;
  std::uint64_t seed = 42;
  int radial_nodes = 64;
  long mc_samples = 200000;
  int basis_size = 24;
  double annulus_inner = 0.05;
  double spline_inner = 0.01;
  int m_max = 60;
  int ell_max = 3;
  int k_max = 3;
  Format format = Format::Json;
  std::optional<std::string> output_path;
};

/// Largest m^l for commands that build the tensor map.
constexpr double kMaxComponents = 1e6;

const std::vector<std::string>& commands();

/// Runs one command and writes its report to out (or config.output_path).
/// Diagnostics go to err. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Parse failures return kInvalidConfig.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biharm::cli
