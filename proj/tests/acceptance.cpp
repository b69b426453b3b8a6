// Runs every acceptance criterion and prints one line per criterion.

#include <cstdlib>
#include <iostream>

#include "wenger/verify.hpp"

int main(int argc, char** argv) {
  wenger::VerifyOptions opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);

  int failed = 0;
  for (int id = 1; id <= wenger::kCriterionCount; ++id) {
    const auto r = wenger::run_criterion(id, opts);
    std::cout << wenger::format_result(r) << std::endl;
    if (r.status != wenger::Status::pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria did not pass") << '\n';
  return failed == 0 ? 0 : 1;
}
