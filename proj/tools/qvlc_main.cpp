#include "qvlc/cli.hpp"

int main(int argc, char** argv) { return qvlc::cli_main(argc, argv); }
