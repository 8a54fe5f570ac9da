#include "ballq/cli.hpp"

int main(int argc, char** argv) { return ballq::cli_main(argc, argv); }
