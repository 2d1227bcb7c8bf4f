#include "cli.hpp"

int main(int argc, char** argv) { return wk::cli::run(argc, argv); }
