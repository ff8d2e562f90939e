#include "regzeta/cli.hpp"

int main(int argc, char** argv) { return regzeta::run_cli(argc, argv); }
