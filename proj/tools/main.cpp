#include "platewave/cli.hpp"

int main(int argc, char** argv) { return pw::run_cli(argc, argv); }
