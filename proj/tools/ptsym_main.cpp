#include "ptsym/scenarios.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const ptsym::ScenarioConfig cfg = ptsym::parse_config(args);
    ptsym::run_scenario(cfg);
  } catch (const ptsym::HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "ptsym: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
