#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "golden_cases.hpp"

using namespace qsh::golden;

TEST_CASE("cli output matches the golden transcripts") {
  const bool update = std::getenv("QSH_UPDATE_GOLDEN") != nullptr;
  for (const Case& c : load_cases()) {
    CAPTURE(c.name);
    const std::string first = transcript(c);
    CHECK(transcript(c) == first);
    if (update) {
      std::ofstream(expected_path(c), std::ios::binary) << first;
      continue;
    }
    CHECK(read_file(expected_path(c)) == first);
  }
}

TEST_CASE("shipped scheme characters regenerate exactly") {
  for (const char* name : {"GZ", "EMS", "MP", "EMS_t"}) {
    CAPTURE(name);
    std::vector<std::string> args{"scheme", "show", name, "--character"};
    if (std::string(name) == "EMS_t") args.insert(args.end(), {"--scalar", "Qt"});
    std::ostringstream out, err;
    REQUIRE(qsh::cli::run(args, out, err) == 0);
    CHECK(out.str() == read_file(kSourceDir / "data" / (std::string(name) + ".qshc")));
  }
}

TEST_CASE("transfer between two shipped schemes carries one onto the other") {
  std::ostringstream out, err;
  const auto path = [](const char* n) { return (kSourceDir / "data" / n).string(); };
  REQUIRE(qsh::cli::run({"char", "act", "--in", (kGoldenDir / "inputs" / "gz_from_mp.qshc").string(), "--in", path("MP.qshc")},
                        out, err) == 0);
  CHECK(out.str() == read_file(path("GZ.qshc")));
}

TEST_CASE("--out writes the same bytes as stdout") {
  const auto tmp = std::filesystem::temp_directory_path() / "qsh_golden_out.qshc";
  const std::vector<std::string> base{"char", "sample", "--letters", "-3..0", "--max-len", "2", "--alphabet", "nonpositive", "--seed", "5"};
  std::ostringstream out, err;
  REQUIRE(qsh::cli::run(base, out, err) == 0);
  auto with_out = base;
  with_out.insert(with_out.end(), {"--out", tmp.string()});
  std::ostringstream out2, err2;
  REQUIRE(qsh::cli::run(with_out, out2, err2) == 0);
  CHECK(out2.str().empty());
  CHECK(read_file(tmp) == out.str());
  std::filesystem::remove(tmp);
}

TEST_CASE("seed falls back to QSH_SEED") {
  const std::vector<std::string> args{"char", "sample", "--letters", "-3..0", "--max-len", "2", "--alphabet", "nonpositive"};
  std::ostringstream a, b, err;
  ::setenv("QSH_SEED", "5", 1);
  REQUIRE(qsh::cli::run(args, a, err) == 0);
  ::unsetenv("QSH_SEED");
  auto seeded = args;
  seeded.insert(seeded.end(), {"--seed", "5"});
  REQUIRE(qsh::cli::run(seeded, b, err) == 0);
  CHECK(a.str() == b.str());
  ::setenv("QSH_SEED", "five", 1);
  std::ostringstream c;
  CHECK(qsh::cli::run(args, c, err) == 2);
  ::unsetenv("QSH_SEED");
}

TEST_CASE("argument splitting") {
  const auto s = qsh::cli::split_args({"mul", "-[1]", "--scalar", "Q", "[2,3]"});
  CHECK(s.command == std::vector<std::string>{"mul", "--scalar=Q"});
  CHECK(s.positional == std::vector<std::string>{"-[1]", "[2,3]"});
  const auto g = qsh::cli::split_args({"scheme", "partner", "--", "--1"});
  CHECK(g.command == std::vector<std::string>{"scheme", "partner"});
  CHECK(g.positional == std::vector<std::string>{"--1"});
}
