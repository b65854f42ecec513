#include <iostream>

#include "salience/cli.hpp"

int main(int argc, char** argv) {
  const salience::Report r = salience::run_command({argv + 1, argv + argc});
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
