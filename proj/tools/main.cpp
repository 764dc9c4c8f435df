#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return cesaro::cli::cli_main({argv + 1, argv + argc}, std::cout, std::cerr);
}
