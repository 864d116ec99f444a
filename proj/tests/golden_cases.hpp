#pragma once

// The CLI golden suite: case list, in-process execution and the expected-file format.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli.hpp"

namespace qsh::golden {

inline const std::filesystem::path kSourceDir = QSH_SOURCE_DIR;
inline const std::filesystem::path kGoldenDir = kSourceDir / "tests" / "golden";

struct Case {
  std::string name;
  std::vector<std::string> args;
};

inline std::string expand(std::string arg) {
  const std::pair<std::string, std::string> vars[] = {
      {"@DATA@", (kSourceDir / "data").string()},
      {"@INPUTS@", (kGoldenDir / "inputs").string()},
  };
  for (const auto& [key, value] : vars)
    for (auto pos = arg.find(key); pos != std::string::npos; pos = arg.find(key)) arg.replace(pos, key.size(), value);
  return arg;
}

inline std::vector<Case> load_cases() {
  std::ifstream in(kGoldenDir / "cases.tsv");
  if (!in) throw std::runtime_error("cannot read golden case list");
  std::vector<Case> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    Case c;
    std::stringstream fields(line);
    std::string field;
    std::getline(fields, c.name, '\t');
    while (std::getline(fields, field, '\t')) c.args.push_back(expand(field));
    out.push_back(std::move(c));
  }
  return out;
}

/// stdout, then the exit code, then stderr with asset paths masked.
inline std::string transcript(const Case& c) {
  std::ostringstream out, err;
  const int code = cli::run(c.args, out, err);
  std::string e = err.str();
  for (const std::string& dir : {(kSourceDir / "data").string(), (kGoldenDir / "inputs").string()})
    for (auto pos = e.find(dir); pos != std::string::npos; pos = e.find(dir)) e.replace(pos, dir.size(), "<dir>");
  return out.str() + "[exit " + std::to_string(code) + "]\n" + e;
}

inline std::filesystem::path expected_path(const Case& c) { return kGoldenDir / "expected" / (c.name + ".txt"); }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace qsh::golden
