#pragma once

// Command-line front end. Kept in the library so tests can drive it in-process.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "conjlab/corpus.hpp"

namespace conjlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCounterexample = 3;

struct ScanOptions {
  std::size_t element_cap = kDefaultElementCap;
  std::size_t normal_budget = kDefaultNormalBudget;
  std::size_t sample_budget = 10'000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool reproducible = false;  // zero timings, fixed timestamp
};

inline constexpr std::string_view kReproducibleTimestamp = "1970-01-01T00:00:00Z";

/// Verifies each spec; failures become records with `error` set.
/// Output is sorted by spec name whatever the job count.
std::vector<ScanRecord> scan(const std::vector<GroupSpec>& specs, const ScanOptions& opts);

/// `.grp` files directly under `dir`, sorted by path.
std::vector<GroupSpec> corpus_from_directory(const std::filesystem::path& dir);

/// Accepts a spec string or a path to a .grp file.
GroupSpec resolve_spec(const std::string& text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conjlab::cli
