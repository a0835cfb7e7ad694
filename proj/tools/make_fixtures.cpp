#include <CLI11.hpp>

#include <iostream>

#include "tqc/harness/corpus.hpp"

// Regenerates the bundled fixture directory from the in-code corpus.
int main(int argc, char** argv) {
  CLI::App app{"Write the corpus fixtures"};
  std::string dir;
  app.add_option("dir", dir, "Output directory")->required();
  CLI11_PARSE(app, argc, argv);
  try {
    tqc::write_corpus(tqc::builtin_corpus(), dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
