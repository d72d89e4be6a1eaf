#include "cubelaw/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"cube composition acceptance suites"};
  std::uint64_t seed = 42;
  app.add_option("--seed", seed, "sampling seed");
  CLI11_PARSE(app, argc, argv);

  auto results = cubelaw::run_acceptance(seed, std::cerr);
  bool all = true;
  for (const auto& r : results) {
    std::cout << cubelaw::format_result(r) << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
