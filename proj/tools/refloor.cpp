#include "refloor/cli.hpp"

int main(int argc, char** argv) { return refloor::cli::run(argc, argv); }
