// Acceptance battery: one line per criterion.
//   matchlab_acceptance           run all ten
//   matchlab_acceptance 3 7       run the listed ones
// Exit 0 if every run criterion passes, 77 if the only one run is declared
// not reproducible, 1 otherwise.
#include <cstdlib>
#include <iostream>
#include <vector>

#include "matchlab/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) {
    for (int i = 1; i <= 10; ++i) ids.push_back(i);
  }
  bool ok = true;
  bool all_nr = true;
  for (int id : ids) {
    auto r = matchlab::run_criterion(id);
    std::cout << matchlab::format_line(r) << std::endl;
    if (r.verdict == matchlab::Verdict::Fail) ok = false;
    if (r.verdict != matchlab::Verdict::NotReproducible) all_nr = false;
  }
  if (!ok) return 1;
  return all_nr ? 77 : 0;
}
