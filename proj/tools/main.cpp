#include "wordlab/cli.hpp"

int main(int argc, char** argv) { return wordlab::run_cli(argc, argv); }
