#include <iostream>
#include <string>
#include <vector>

#include "fakepoly/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = fakepoly::cli::run_command(args);
  if (!result.text.empty()) {
    std::cout << result.text;
  } else if (!result.report.is_null()) {
    std::cout << result.report.dump(2) << '\n';
  }
  if (result.exit_code != 0 && result.report.is_object() && result.report.contains("error")) {
    std::cerr << "fakepoly: " << result.report["error"]["message"].get<std::string>() << '\n';
  }
  return result.exit_code;
}
