#pragma once

// Minimal subprocess capture for driving the CLI from tests: stdout via
// popen, stderr through a temp file, exit status from pclose.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

struct CmdResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline CmdResult run_cmd(const std::string& command) {
  static int counter = 0;
  std::string err_path =
      "/tmp/fermat_cli_err_" + std::to_string(getpid()) + "_" +
      std::to_string(counter++) + ".txt";
  std::string full = command + " 2>" + err_path;

  CmdResult result;
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, n);
  }
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);

  std::ifstream err_file(err_path);
  std::stringstream err_stream;
  err_stream << err_file.rdbuf();
  result.err = err_stream.str();
  std::remove(err_path.c_str());
  return result;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}
