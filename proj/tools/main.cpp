#include "ansec/cli.hpp"

int main(int argc, char** argv) { return ansec::cli::run(argc, argv); }
