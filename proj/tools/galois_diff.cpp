#include <iostream>
#include <string>
#include <vector>

#include <galois_diff/cli.hpp>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return galois_diff::cli::run(args, std::cout, std::cerr);
}
