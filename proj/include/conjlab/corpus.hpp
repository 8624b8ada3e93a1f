#pragma once

// Group constructors for witness families, spec strings, and persistent scan records.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conjlab/group.hpp"
#include "conjlab/theorem.hpp"

namespace conjlab {

inline constexpr std::string_view kEngineVersion = "conjlab 1.0.0";

/// A recipe for a group. Spec strings look like `cyclic:6`, `frobenius:5,4`,
/// `direct:frobenius:5,4+heisenberg:3` or `file:path/to/g.grp`.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Alternating, Heisenberg, Frobenius, Direct, File };

  Kind kind = Kind::Cyclic;
  std::vector<std::uint64_t> params;
  std::vector<GroupSpec> factors;  // Direct only
  std::string path;                // File only

  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec dihedral(std::uint64_t n);
  static GroupSpec symmetric(std::uint64_t n);
  static GroupSpec alternating(std::uint64_t n);
  static GroupSpec heisenberg(std::uint64_t p);
  static GroupSpec frobenius(std::uint64_t p, std::uint64_t q);
  static GroupSpec direct(std::vector<GroupSpec> factors);
  static GroupSpec file(std::string path);

  /// Throws InvalidSpec.
  static GroupSpec parse(std::string_view text);

  /// Canonical spec string; parse(name()) == *this.
  std::string name() const;

  /// Throws InvalidSpec when parameters break the family's constraints.
  void validate() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws InvalidSpec, CapExceeded, or IoError/ParseError for file specs.
Group build(const GroupSpec& spec, std::size_t cap = kDefaultElementCap);

/// Least multiplier of multiplicative order exactly q modulo p.
std::uint64_t frobenius_multiplier(std::uint64_t p, std::uint64_t q);

std::vector<GroupSpec> builtin_corpus();

/// Base groups used for direct-product sweeps.
std::vector<GroupSpec> product_sweep_factors();

/// Abelian groups with coprime automorphism groups acting on them.
std::vector<CoprimeActionWitness> gore5_witnesses();

struct ScanRecord {
  GroupSpec spec;
  std::optional<TheoremReport> report;
  std::string error;  // set when the group could not be verified
  std::string engine_version{kEngineVersion};
  std::string timestamp;  // ISO-8601 UTC

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// ISO-8601 UTC, second resolution.
std::string current_timestamp();

/// One JSON object, no trailing newline.
std::string to_jsonl_line(const ScanRecord& r);
/// Throws ParseError.
ScanRecord record_from_jsonl_line(const std::string& line);

/// Truncates `path` and writes one line per record.
void write_records(const std::filesystem::path& path, const std::vector<ScanRecord>& records);
/// Appends and flushes a single line.
void append_record(const std::filesystem::path& path, const ScanRecord& record);
/// Blank lines are skipped; a malformed line raises ParseError carrying its 1-based number.
std::vector<ScanRecord> read_records(const std::filesystem::path& path);

}  // namespace conjlab
