// Acceptance runner: one PASS/FAIL line per criterion, with its time budget.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "checks/checks.hpp"
#include "linwave/common.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  double budget_seconds;
};

const std::vector<Criterion> kCriteria{
    {1, "background invariants", "background", 1.0},
    {2, "linearised constraints vs finite-difference oracle", "constraints", 30.0},
    {3, "normal identities of the linearised Ricci tensor", "identities", 30.0},
    {4, "gauge-fixing decomposition", "decomposition", 10.0},
    {5, "kernel dimensions", "kernels", 5.0},
    {6, "Moncrief splitting", "moncrief", 10.0},
    {7, "gauge and constraint propagation", "propagation", 120.0},
    {8, "gauge vector recovery", "gauge-recovery", 60.0},
    {9, "Sobolev spectrum of distributional data", "spectrum", 10.0},
    {10, "finite propagation speed", "finite-speed", 30.0},
    {11, "continuous dependence on data", "continuity", 60.0},
};

bool run(const Criterion& c) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  bool pass = true;
  std::vector<std::string> lines;
  try {
    for (const auto& bg : linwave::checks::suite_backgrounds(c.suite)) {
      const auto r = linwave::checks::run_suite(c.suite, bg);
      pass = pass && r.pass();
      for (const auto& m : r.results) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "    %-4s %-16s %-36s %.3e %s %.3g", m.pass ? "ok" : "FAIL", bg.c_str(),
                      m.name.c_str(), m.value, m.relation.c_str(), m.threshold);
        lines.emplace_back(buf);
      }
    }
  } catch (const std::exception& e) {
    pass = false;
    lines.push_back(std::string("    error: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = secs <= c.budget_seconds;
  const bool ok = pass && in_time;
  std::printf("[%s] criterion %d: %s (%.2f s, budget %.0f s%s)\n", ok ? "PASS" : "FAIL", c.id, c.title, secs,
              c.budget_seconds, in_time ? "" : ", over budget");
  for (const auto& l : lines) std::printf("%s\n", l.c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      wanted.push_back(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
      return 2;
    }
  }
  int failures = 0, ran = 0;
  for (const auto& c : kCriteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    ++ran;
    if (!run(c)) ++failures;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no such criterion\n");
    return 2;
  }
  std::printf("%d of %d criteria passed\n", ran - failures, ran);
  return failures == 0 ? 0 : 1;
}
