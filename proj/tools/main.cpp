#include "cli.hpp"

int main(int argc, char** argv) { return maxmin::cli::main_entry(argc, argv); }
