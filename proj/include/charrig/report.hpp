#pragma once

// Command runners behind the CLI and the C API. Each command turns a
// complex and options into a Report: an ordered list of scoped checks plus
// command-specific data. The canonical text is the compact JSON of the
// document with sorted keys and without timings, so equal inputs give equal
// bytes whatever the thread count; the hash is SHA-256 of that text with
// the hash field removed.

#include "charrig/check.hpp"
#include "charrig/complex.hpp"
#include "charrig/geometry.hpp"
#include "charrig/serialize.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace charrig {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
  std::vector<int> degrees;                      // diagram, phi; empty: 1..dim+1
  std::vector<std::pair<int, int>> degree_pairs;  // ring; empty: k, l >= 1, k+l <= dim+1
  std::optional<std::string> cycle_path;         // pseudo; empty: sampled cycles
  std::uint64_t seed = 0;
  int max_subdiv = kDefaultMaxSubdiv;
  int threads = 1;
};

struct Report {
  Json doc;                              // canonical content, including "hash"
  std::map<std::string, double> timings;  // seconds per scope

  bool passed() const;
  std::size_t failures() const;
};

/// "inspect", "diagram", "phi", "ring" or "pseudo". Throws InvalidArgument
/// for unknown commands or options out of range, and the input errors of
/// the complex/cochain readers for a bad cycle file.
Report run_command(const std::string& command, const ComplexPtr& x, const RunOptions& o);

std::string canonical_text(const Report& r);
std::string pretty_text(const Report& r);
std::string sha256_hex(const std::string& data);

/// Finds a complex file: CHARRIG_CORPUS/<name>[.json] for bare names and
/// corpus/<name> arguments when the variable is set, then the argument
/// itself with and without ".json". Throws IoError.
std::string resolve_complex_path(const std::string& arg);

}  // namespace charrig
