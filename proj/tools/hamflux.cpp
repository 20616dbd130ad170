#include <hamflux/cli.hpp>

int main(int argc, char** argv) { return hamflux::cli::run(argc, argv, std::cout, std::cerr); }
