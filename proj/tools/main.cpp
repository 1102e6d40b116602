#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return tconvex::cli::main_impl(argc, argv, std::cout, std::cerr);
}
