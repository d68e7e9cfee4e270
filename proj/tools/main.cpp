#include <iostream>

#include "llmspace/cli.hpp"

int main(int argc, char** argv) {
    return llmspace::run_cli(argc, argv, std::cout, std::cerr);
}
