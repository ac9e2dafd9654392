// One line per acceptance criterion.  Time limits and sweep ranges are the
// ones pinned in bqm/verify.hpp; criterion 10 runs the real CLI.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sys/wait.h>

#include "CLI11.hpp"

#include "bqm/verify.hpp"

namespace {
  bqm::verify::result verify_all_exits_zero(std::string const& exe) {
    bqm::verify::result r{10, "`verify all` exits 0", false, "", 0, 600};
    auto        t0  = std::chrono::steady_clock::now();
    std::string cmd = "'" + exe + "' verify all --format text 2>&1";
    FILE*       p   = popen(cmd.c_str(), "r");
    if (!p) {
      r.detail = "cannot run " + exe;
      return r;
    }
    std::array<char, 4096> buf;
    std::string            failed;
    while (fgets(buf.data(), buf.size(), p)) {
      std::string line(buf.data());
      if (line.rfind("FAIL", 0) == 0) failed += (failed.empty() ? "" : ", ") + line.substr(5, line.find(']') - 4);
    }
    int status = pclose(p);
    int code   = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.seconds  = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.pass     = code == 0 && r.seconds <= r.limit;
    r.detail   = "exit " + std::to_string(code) + (failed.empty() ? "" : "; failing sweeps " + failed);
    return r;
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App    app{"Acceptance suite"};
  int         only = 0;
  std::string exe;
  app.add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, 10));
  app.add_option("--bqm", exe, "Path to the bqm executable (criterion 10)");
  CLI11_PARSE(app, argc, argv);

  bqm::verify::options o;
  auto const&          sweeps = bqm::verify::sweeps();
  bool                 ok     = true;
  for (int id = 1; id <= 10; ++id) {
    if (only && only != id) continue;
    bqm::verify::result r;
    if (id <= static_cast<int>(sweeps.size())) {
      r = sweeps[id - 1](o);
    } else if (exe.empty()) {
      r = {10, "`verify all` exits 0", false, "no --bqm executable given", 0, 600};
    } else {
      r = verify_all_exits_zero(exe);
    }
    ok = ok && r.pass;
    std::cout << bqm::verify::format(r) << std::endl;
  }
  return ok ? 0 : 1;
}
