#pragma once

// Shared helpers for the test binaries: the standard small carriers, paths
// into the fixture corpus, error-code capture, and small scans.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbcat/errors.hpp"
#include "rbcat/fingroup.hpp"

namespace rbcat::test {

// S3 with elements e, (01), (02), (12), (012), (021) in that index order.
inline const std::vector<std::vector<int>>& s3_rows() {
  static const std::vector<std::vector<int>> rows = {
      {0, 1, 2, 3, 4, 5}, {1, 0, 5, 4, 3, 2}, {2, 4, 0, 5, 1, 3},
      {3, 5, 4, 0, 2, 1}, {4, 2, 3, 1, 5, 0}, {5, 3, 1, 2, 0, 4}};
  return rows;
}

inline std::string fixture(const std::string& rel) {
  return std::string(RBCAT_FIXTURES_DIR "/") + rel;
}

// The code of the CheckError raised by f, or nullopt when f returns.
template <class F>
std::optional<Code> thrown_code(F&& f) {
  try {
    f();
  } catch (const CheckError& e) {
    return e.code();
  }
  return std::nullopt;
}

inline bool is_bijection(const std::vector<int>& t) {
  std::vector<char> seen(t.size(), 0);
  for (int v : t) {
    if (v < 0 || v >= (int)t.size() || seen[(std::size_t)v]) return false;
    seen[(std::size_t)v] = 1;
  }
  return true;
}

inline std::vector<int> inverse_table(const FiniteGroup& g) {
  std::vector<int> t((std::size_t)g.order());
  for (int i = 0; i < g.order(); ++i) t[(std::size_t)i] = g.inv(i);
  return t;
}

inline std::vector<int> identity_table(int n) {
  std::vector<int> t((std::size_t)n);
  for (int i = 0; i < n; ++i) t[(std::size_t)i] = i;
  return t;
}

// Output and exit status of a shell command; stderr is discarded so usage
// errors don't leak into the captured stream.
struct RunResult {
  int status = -1;
  std::string out;
};

inline RunResult run_command(const std::string& cmd) {
  RunResult r;
  FILE* pipe = ::popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int rc = ::pclose(pipe);
  if (rc >= 0 && WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
  return r;
}

inline std::string cli_path() { return RBCAT_CLI_PATH; }

// Runs f on every map [0,len) -> [0,n) in lexicographic order.
template <class F>
void for_all_maps(int n, int len, F&& f) {
  std::vector<int> m((std::size_t)len, 0);
  while (true) {
    f(const_cast<const std::vector<int>&>(m));
    int i = len - 1;
    while (i >= 0 && m[(std::size_t)i] == n - 1) m[(std::size_t)i--] = 0;
    if (i < 0) return;
    ++m[(std::size_t)i];
  }
}

}  // namespace rbcat::test
