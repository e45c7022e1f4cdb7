#include "lieconf/cli.hpp"

int main(int argc, char** argv) { return lieconf::run(argc, argv); }
