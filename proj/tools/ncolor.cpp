// ncolor.cpp -- command-line entry point

#include <iostream>

#include "ncolor/cli.hpp"

int main(int argc, char** argv)
{
    return ncolor::cli::run(argc, argv, std::cout, std::cerr);
}
