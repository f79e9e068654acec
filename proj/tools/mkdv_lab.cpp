#include "mkdv/cli.hpp"

int main(int argc, char** argv) { return mkdv::cli::main_entry(argc, argv); }
