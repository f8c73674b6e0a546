#include <iostream>

#include "cli.h"

int main(int argc, char **argv) {
    std::cout << std::unitbuf;
    return qmap::cli::run(argc, argv, std::cout, std::cerr);
}
