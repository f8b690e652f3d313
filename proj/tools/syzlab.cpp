#include "cli.hpp"

int main(int argc, char** argv) { return syzlab::cli::main(argc, argv); }
