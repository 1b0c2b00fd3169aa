#include <iostream>
#include <string>
#include <vector>

#include "degseq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return degseq::run_cli(args, std::cout, std::cerr);
}
