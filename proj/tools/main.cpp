#include "cli/commands.hpp"

int main(int argc, char** argv) { return gad::cli::run(argc, argv); }
