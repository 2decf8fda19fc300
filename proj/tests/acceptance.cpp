// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "recperm/verify.hpp"

namespace {

using recperm::SuiteReport;

constexpr std::uint64_t kSeed = 424242;
constexpr int kJobs = 2;

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<std::pair<bool, std::string>()> run;
};

std::pair<bool, std::string> from_suites(const std::vector<SuiteReport>& reports) {
  bool pass = true;
  std::string detail;
  for (const SuiteReport& r : reports) {
    pass = pass && r.pass();
    for (const auto& c : r.checks)
      if (!c.pass) detail += r.name + "/" + c.name + "; ";
  }
  return {pass, detail};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"identity suite", 10.0, [] {
                        return from_suites({recperm::run_identities_suite()});
                      }});
  criteria.push_back({"pushforward suite", 60.0, [] {
                        return from_suites({recperm::run_pushforward_suite(),
                                            recperm::run_uniformity_suite()});
                      }});
  criteria.push_back({"bijection suite", 10.0, [] {
                        return from_suites({recperm::run_diagram_suite()});
                      }});
  criteria.push_back({"boundary suite", 120.0, [] {
                        return from_suites(
                            {recperm::run_boundary_suite(), recperm::run_dual_suite()});
                      }});
  criteria.push_back({"errata suite", 10.0, [] {
                        return from_suites({recperm::run_errata_suite()});
                      }});
  criteria.push_back({"sampler suite", 300.0, [] {
                        return from_suites({recperm::run_sampler_suite(kSeed, kJobs)});
                      }});
  criteria.push_back({"asymptotics suite", 600.0, [] {
                        return from_suites({recperm::run_asymptotics_suite(kSeed, kJobs)});
                      }});
  criteria.push_back({"determinism and negative control", 900.0, [] {
                        const std::string samplers_a =
                            recperm::run_sampler_suite(kSeed, kJobs).to_json();
                        const std::string samplers_b =
                            recperm::run_sampler_suite(kSeed, kJobs).to_json();
                        const std::string asym_a =
                            recperm::run_asymptotics_suite(kSeed, 1).to_json();
                        const std::string asym_b =
                            recperm::run_asymptotics_suite(kSeed, kJobs).to_json();
                        const SuiteReport control = recperm::run_negative_control(kSeed);
                        std::string detail;
                        bool pass = true;
                        if (samplers_a != samplers_b) {
                          pass = false;
                          detail += "sampler suite not byte-stable; ";
                        }
                        if (asym_a != asym_b) {
                          pass = false;
                          detail += "asymptotics depend on the worker count; ";
                        }
                        if (!control.pass()) {
                          pass = false;
                          detail += "swapped-parameter control was not rejected; ";
                        }
                        return std::make_pair(pass, detail);
                      }});

  bool all_pass = true;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    auto [pass, detail] = c.run();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed <= c.budget_seconds;
    if (!in_budget) detail += "over budget; ";
    const bool ok = pass && in_budget;
    all_pass = all_pass && ok;
    std::printf("[%s] criterion %d: %s (%.2f s, budget %.0f s)%s%s\n", ok ? "PASS" : "FAIL",
                index, c.name.c_str(), elapsed, c.budget_seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
