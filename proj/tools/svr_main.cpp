#include "svr/cli.hpp"

int main(int argc, char** argv) { return svr::cli_main(argc, argv, std::cout, std::cerr); }
