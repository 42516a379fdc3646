// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is 0 only when all of them pass.

#include <cstdio>
#include <string>
#include <vector>

#include "level1kit/verify.hpp"

using namespace level1;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
  std::size_t max_n;
  double budget_ms;
};

}  // namespace

int main() {
  const double minute = 60'000;
  const std::vector<Criterion> criteria = {
      {1, "cluster count 3n-4-c, n<=6 plus random n=7..12", {"clusters-count"}, 6, 5 * minute},
      {2, "vertex/arc identities and bounds, proper n=3..6", {"bounds"}, 6, minute},
      {3, "gall bound and its equality cases, n<=6", {"galls"}, 6, minute},
      {4, "equal (g,c) with different |R|, n=6", {"triplet-size"}, 6, 2 * minute},
      {5, "defining triplet and cluster systems of simple networks, n=4..6",
       {"define-triplets", "define-clusters"}, 6, 10 * minute},
      {6, "saturated 4-outwards networks are defined by R(N) and S(N), n<=6",
       {"saturated-triplet", "saturated-cluster"}, 6, 15 * minute},
      {7, "counterexample pairs at n=5", {"counterexamples"}, 5, 2 * minute},
      {8, "a 4-leaf network defined by five of its seven triplets", {"five-triplets"}, 4, minute},
      {9, "Cut(N) = maximal SN-sets, compatibility, equal cuts, n<=5", {"sn-cut", "samecut"}, 5, 5 * minute},
      {10, "eNewick round trip, cleanup confluence, canonical form", {"infrastructure"}, 5, 5 * minute},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    bool ok = true;
    double ms = 0;
    std::vector<std::string> problems;
    for (const std::string& id : c.suites) {
      const SuiteResult r = run_suite(id, {c.max_n});
      ms += r.elapsed_ms;
      if (r.instances == 0) problems.push_back(id + ": no instances");
      for (const auto& f : r.failures) problems.push_back(id + ": " + f);
      ok = ok && r.passed() && r.instances > 0;
    }
    if (ms > c.budget_ms) {
      ok = false;
      problems.push_back("over time budget");
    }
    std::printf("%s criterion %d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), ms);
    for (const auto& p : problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
    failed += !ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
