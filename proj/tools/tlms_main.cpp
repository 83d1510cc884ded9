#include <clocale>
#include <iostream>

#include "tlms/cli.hpp"

int main(int argc, char** argv) {
    std::setlocale(LC_NUMERIC, "C");
    return tlms::run_cli(argc, argv, std::cout, std::cerr);
}
