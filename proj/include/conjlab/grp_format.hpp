#pragma once

// .grp text format:
//   degree <d>
//   name <string>
//   (0 1 2)(3 4)        one generator per line, 0-based disjoint cycles
//   ()                  the identity
// Lines starting with '#' are comments; blank lines are ignored.

#include <filesystem>
#include <string>
#include <vector>

#include "conjlab/permutation.hpp"

namespace conjlab {

struct GrpFile {
  std::size_t degree = 0;
  std::string name;
  std::vector<Permutation> generators;

  friend bool operator==(const GrpFile&, const GrpFile&) = default;
};

/// Throws ParseError naming the offending line.
GrpFile parse_grp(const std::string& text);
std::string write_grp(const GrpFile& file);

/// Throws IoError or ParseError (with the path in the message).
GrpFile read_grp_file(const std::filesystem::path& path);
void write_grp_file(const std::filesystem::path& path, const GrpFile& file);

}  // namespace conjlab
