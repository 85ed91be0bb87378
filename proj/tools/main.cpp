#include "entropic/cli.hpp"

int main(int argc, char** argv) { return entropic::run_cli(argc, argv); }
