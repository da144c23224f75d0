#include "kronx/cli.hpp"

int main(int argc, char** argv) { return kronx::cli::run(argc, argv); }
