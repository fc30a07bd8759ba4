#include "dceopa/cli.hpp"

int main(int argc, char** argv) { return dceopa::cli::main_entry(argc, argv); }
