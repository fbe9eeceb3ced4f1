#include "centra/cli.hpp"

int main(int argc, char** argv) { return centra::cli::run(argc, argv); }
