#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testutil {

namespace fs = std::filesystem;

class TempDir {
public:
  TempDir() {
    auto tmpl = (fs::temp_directory_path() / "fuzzbet-test-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) {
      throw std::runtime_error("mkdtemp failed");
    }
    path_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }

private:
  fs::path path_;
};

inline void write_file(const fs::path& file, const std::string& content) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << content;
}

struct CliResult {
  int status = -1;
  std::string output;
};

inline std::string shell_quote(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

// Runs the CLI named by $FUZZBET_CLI, capturing stdout and the exit status.
inline CliResult run_cli(const std::vector<std::string>& args) {
  const char* cli = std::getenv("FUZZBET_CLI");
  if (!cli) throw std::runtime_error("FUZZBET_CLI is not set (run through ctest)");
  std::string command = shell_quote(cli);
  for (const auto& arg : args) command += " " + shell_quote(arg);
  command += " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

// Shared JSON workspace used across the CLI tests.
inline std::string workspace_json() {
  return R"({
  "universes": {
    "U": {"elements": ["a", "b", "c"], "weights": [1.0, 2.0, 0.5]},
    "V": {"elements": ["p", "q"]}
  },
  "measures": {
    "heavy": {"universe": "U", "weights": {"a": 2.0, "b": 2.0, "c": 2.0}}
  },
  "sets": {
    "A": {"universe": "U", "members": ["a", "b"]},
    "B": {"universe": "U", "members": ["b", "c"]},
    "AB_mid": {"universe": "U", "members": ["b"]},
    "P": {"universe": "V", "members": ["p"]}
  },
  "memberships": {
    "f": {"universe": "U", "values": {"a": 0.5, "b": 0.25, "c": 1.0}},
    "g": {"universe": "U", "values": {"a": 0.75, "b": 0.25, "c": 0.0}},
    "mid": {"universe": "U", "values": {"a": 0.625, "b": 0.25, "c": 0.5}}
  },
  "hmemberships": {
    "M": {"universe": "V", "mu1": {"p": 1.0, "q": 0.5}, "mu2": {"p": 0.0, "q": 0.5}},
    "N": {"universe": "V", "mu1": {"p": 0.5, "q": 0.5}, "mu2": {"p": 0.5, "q": 0.0}}
  },
  "kernels": {
    "K": {"labels": ["a", "b"], "entries": [[1.0, 0.5], [0.5, 1.0]]}
  }
})";
}

}  // namespace testutil
