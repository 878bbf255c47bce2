#include <iostream>
#include <string>
#include <vector>

#include "blockcert/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return blockcert::cli::run(args, std::cout, std::cerr, std::cin);
}
