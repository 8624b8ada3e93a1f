#include "conjlab/grp_format.hpp"

#include <fstream>
#include <sstream>

#include "conjlab/error.hpp"

namespace conjlab {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

GrpFile parse_grp(const std::string& text) {
  GrpFile out;
  std::istringstream is(text);
  std::string raw;
  std::size_t line_no = 0;
  int header = 0;  // 0: expect degree, 1: expect name, 2: generators
  while (std::getline(is, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (header == 0) {
      if (line.rfind("degree", 0) != 0) throw ParseError("expected 'degree <d>'", line_no);
      const std::string num = trim(line.substr(6));
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("invalid degree '" + num + "'", line_no);
      try {
        out.degree = std::stoull(num);
      } catch (const std::exception&) {
        throw ParseError("invalid degree '" + num + "'", line_no);
      }
      header = 1;
    } else if (header == 1) {
      if (line.rfind("name", 0) != 0 || (line.size() > 4 && line[4] != ' ' && line[4] != '\t'))
        throw ParseError("expected 'name <string>'", line_no);
      out.name = trim(line.substr(4));
      header = 2;
    } else {
      try {
        out.generators.push_back(parse_cycles(out.degree, line));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    }
  }
  if (header < 2) throw ParseError(header == 0 ? "missing 'degree' line" : "missing 'name' line", line_no);
  return out;
}

std::string write_grp(const GrpFile& file) {
  std::string out = "degree " + std::to_string(file.degree) + "\nname " + file.name + "\n";
  for (const auto& g : file.generators) out += g.to_cycle_string() + "\n";
  return out;
}

GrpFile read_grp_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_grp(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_grp_file(const std::filesystem::path& path, const GrpFile& file) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << write_grp(file);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace conjlab
