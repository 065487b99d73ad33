#include <iostream>

#include "ballpark/cli.hpp"

int main(int argc, char** argv) {
    return ballpark::cli::main_impl(argc, argv, std::cout, std::cerr);
}
