#include "ammd/cli.hpp"

int main(int argc, char** argv) { return ammd::cli::run(argc, argv); }
