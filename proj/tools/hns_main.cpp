#include "hns/cli.hpp"

int main(int argc, char** argv) { return hns::run_cli(argc, argv); }
