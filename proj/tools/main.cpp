#include "vlt/cli.hpp"

int main(int argc, char** argv) { return vlt::run_cli(argc, argv); }
