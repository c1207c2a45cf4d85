#pragma once

// prymcert command-line front end. run_cli is the whole program minus
// process plumbing, so tests can drive it with captured streams.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace prym {

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
  std::string command;
  int p = 0;
  int r = 0;
  int m = 0;
  long c = 1;
  int samples = 2000;
  std::uint64_t seed = 0;
  int prime_budget = 500;
  std::string output_path;
  OutputFormat format = OutputFormat::Text;

  nlohmann::json to_json() const;
};

inline constexpr int kExitUsage = 3;

/// args excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable rendering of a certificate or report JSON document.
std::string render_text(const nlohmann::json& doc);

}  // namespace prym
