#include <iostream>

#include "cli_run.hpp"

int main(int argc, char** argv) {
    return infodist::cli::cli_main(argc, argv, std::cout, std::cerr);
}
