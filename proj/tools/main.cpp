#include "pugs/cli.hpp"

int main(int argc, char** argv) { return pugs::run_cli(argc, argv); }
