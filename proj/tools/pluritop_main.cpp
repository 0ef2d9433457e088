#include "pluritop/cli.hpp"

int main(int argc, char** argv) { return pluritop::cli_main(argc, argv); }
