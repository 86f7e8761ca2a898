#include "viscorod/cli.hpp"

int main(int argc, char** argv) { return viscorod::cli_main(argc, argv); }
