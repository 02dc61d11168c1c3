#include <sphmean/cli.hpp>

int main(int argc, char** argv) { return sphmean::cli::run(argc, argv, std::cout, std::cerr); }
