#include <iostream>
#include <thread>

#include "gapprob/acceptance.hpp"

int main() {
  const int jobs = std::max(1u, std::thread::hardware_concurrency());
  auto rs = gp::run_acceptance({}, jobs, &std::cout);
  std::cout << "\nSUMMARY\n";
  for (const auto& r : rs) std::cout << gp::verdict_line(r) << '\n';
  return gp::acceptance_status(rs);
}
