#include "bullcol/cli.hpp"

int main(int argc, char** argv) { return bullcol::run_cli(argc, argv); }
