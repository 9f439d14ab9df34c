#include <blueprint/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return blueprint::run_cli(argc, argv, std::cout, std::cerr); }
