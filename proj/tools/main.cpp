#include "cli.hpp"

int main(int argc, char** argv) { return tomolight::cli::run(argc, argv); }
