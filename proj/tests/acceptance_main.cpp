// Runs every acceptance criterion and prints one pass/fail line each.

#include <iostream>

#include "umbral/acceptance.hpp"

int main() {
  int failures = 0;
  for (const auto& c : umbral::acceptance::criteria()) {
    const auto r = umbral::acceptance::run(c);
    std::cout << umbral::acceptance::format_line(r) << std::endl;
    if (!r.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
