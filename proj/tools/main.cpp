#include "sobolev2d/cli.hpp"

int main(int argc, char** argv) { return sobolev2d::run_cli(argc, argv); }
